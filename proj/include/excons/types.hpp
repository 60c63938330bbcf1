#ifndef EXCONS_TYPES_HPP
#define EXCONS_TYPES_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace excons {

inline constexpr const char* kVersion = "0.1.0";

enum class Task { classification, regression };

const char* to_string(Task task);
Task task_from_string(const std::string& s);

/// Error taxonomy shared by the whole library. The C API and the CLI map
/// kinds onto status/exit codes, so new throw sites should pick the kind
/// deliberately.
enum class ErrorKind { invalid_argument, parse, io, internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

enum class MetricType { auc, r2 };

const char* to_string(MetricType type);
MetricType metric_type_from_string(const std::string& s);

/// Model quality as recorded after training: AUC for classifiers, R2 for
/// regressors. R2 may be negative (worse than predicting the mean).
struct PerformanceMetric {
    MetricType type = MetricType::auc;
    double value = 0.0;
};

/// Dense row-major matrix of doubles. Rows are samples, columns features.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Column header name for a 0-based column index: 0 -> "F1".
std::string feature_name(std::size_t index0);

} // namespace excons

#endif
