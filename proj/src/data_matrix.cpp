#include "clusterr/data_matrix.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "clusterr/errors.hpp"

namespace clusterr {

DataMatrix::DataMatrix(std::size_t n, std::size_t p, std::vector<double> values)
    : n_(n), p_(p), values_(std::move(values)) {
    if (n_ < 2) throw config_error("DataMatrix needs at least 2 rows, got " + std::to_string(n_));
    if (p_ < 3) throw config_error("DataMatrix needs at least 3 columns, got " + std::to_string(p_));
    if (values_.size() != n_ * p_)
        throw config_error("DataMatrix value count " + std::to_string(values_.size()) +
                           " does not match shape " + std::to_string(n_) + "x" + std::to_string(p_));
    for (std::size_t idx = 0; idx < values_.size(); ++idx) {
        if (!std::isfinite(values_[idx]))
            throw config_error("non-finite entry at row " + std::to_string(idx / p_) +
                               ", column " + std::to_string(idx % p_));
    }
}

CenteredMatrix center_rows(const DataMatrix& data) {
    const std::size_t n = data.rows();
    const std::size_t p = data.cols();
    CenteredMatrix out;
    out.n = n;
    out.p = p;
    out.values.resize(n * p);
    out.row_means.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* src = data.row(i);
        double sum = 0.0;
        for (std::size_t j = 0; j < p; ++j) sum += src[j];
        const double mean = sum / static_cast<double>(p);
        out.row_means[i] = mean;
        double* dst = out.values.data() + i * p;
        for (std::size_t j = 0; j < p; ++j) dst[j] = src[j] - mean;
    }
    return out;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        auto pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

DataMatrix load_csv(const std::string& path, bool has_header) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);

    std::vector<double> values;
    std::size_t n = 0;
    std::size_t p = 0;
    std::string line;
    std::size_t line_no = 0;
    bool skipped_header = !has_header;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!skipped_header) {
            skipped_header = true;
            continue;
        }
        if (trim(line).empty() && in.peek() == std::char_traits<char>::eof()) break;
        const auto fields = split_fields(line);
        if (n == 0) {
            p = fields.size();
        } else if (fields.size() != p) {
            throw parse_error(path + ": line " + std::to_string(line_no) + " has " +
                              std::to_string(fields.size()) + " fields, expected " +
                              std::to_string(p));
        }
        for (std::size_t j = 0; j < fields.size(); ++j) {
            const std::string f = trim(fields[j]);
            if (f.empty())
                throw parse_error(path + ": line " + std::to_string(line_no) + ", field " +
                                  std::to_string(j + 1) + " is blank");
            double v = 0.0;
            const char* first = f.data();
            const char* last = f.data() + f.size();
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc{} || ptr != last)
                throw parse_error(path + ": line " + std::to_string(line_no) + ", field " +
                                  std::to_string(j + 1) + " is not a number: '" + f + "'");
            values.push_back(v);
        }
        ++n;
    }
    if (n == 0) throw parse_error(path + ": no data rows");
    try {
        return DataMatrix(n, p, std::move(values));
    } catch (const config_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

void save_csv(const DataMatrix& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open file for writing: " + path);
    char buf[40];
    for (std::size_t i = 0; i < data.rows(); ++i) {
        for (std::size_t j = 0; j < data.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", data(i, j));
            if (j) out << ',';
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw parse_error("write failed: " + path);
}

}  // namespace clusterr
