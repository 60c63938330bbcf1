#include "excons/types.hpp"

namespace excons {

const char* to_string(Task task) {
    return task == Task::classification ? "classification" : "regression";
}

Task task_from_string(const std::string& s) {
    if (s == "classification")
        return Task::classification;
    if (s == "regression")
        return Task::regression;
    throw Error(ErrorKind::parse, "unknown task '" + s + "' (expected classification or regression)");
}

const char* to_string(MetricType type) {
    return type == MetricType::auc ? "auc" : "r2";
}

MetricType metric_type_from_string(const std::string& s) {
    if (s == "auc")
        return MetricType::auc;
    if (s == "r2")
        return MetricType::r2;
    throw Error(ErrorKind::parse, "unknown metric type '" + s + "' (expected auc or r2)");
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty())
        return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw Error(ErrorKind::invalid_argument, "ragged row lengths in matrix input");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

std::string feature_name(std::size_t index0) {
    return "F" + std::to_string(index0 + 1);
}

} // namespace excons
