#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace clusterr {

/// Dense n x p observation matrix, row-major. Rows are subjects, columns
/// are features. Entries must be finite; n >= 2 and p >= 3 are enforced at
/// construction (the difference-based estimators need at least two column
/// differences per row).
class DataMatrix {
public:
    DataMatrix(std::size_t n, std::size_t p, std::vector<double> values);

    std::size_t rows() const { return n_; }
    std::size_t cols() const { return p_; }

    double operator()(std::size_t i, std::size_t j) const { return values_[i * p_ + j]; }
    const double* row(std::size_t i) const { return values_.data() + i * p_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::size_t n_ = 0;
    std::size_t p_ = 0;
    std::vector<double> values_;
};

/// Row-centered observations: entry (i,j) holds Y_ij minus the mean of row i.
/// Every row sums to zero up to rounding.
struct CenteredMatrix {
    std::size_t n = 0;
    std::size_t p = 0;
    std::vector<double> values;     // row-major, n x p
    std::vector<double> row_means;  // the subtracted per-row means, length n

    double operator()(std::size_t i, std::size_t j) const { return values[i * p + j]; }
    const double* row(std::size_t i) const { return values.data() + i * p; }
};

CenteredMatrix center_rows(const DataMatrix& data);

/// Reads a comma-separated numeric matrix, one subject per row. Blank or
/// unparsable fields and ragged rows raise parse_error naming the line.
DataMatrix load_csv(const std::string& path, bool has_header);

/// Writes the matrix with enough digits to round-trip through load_csv.
void save_csv(const DataMatrix& data, const std::string& path);

}  // namespace clusterr
