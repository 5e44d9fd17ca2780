#pragma once

#include <string>

#include "clusterr/estimator.hpp"
#include "clusterr/simulation.hpp"

#include <json.hpp>

namespace clusterr {

nlohmann::json result_to_json(const FitResult& result);
FitResult result_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ReplicationReport& report, const DesignSpec& spec,
                              const EstimatorConfig& cfg);

void write_json(const nlohmann::json& j, const std::string& path);
nlohmann::json read_json(const std::string& path);

}  // namespace clusterr
