#ifndef EXCONS_METRICS_HPP
#define EXCONS_METRICS_HPP

#include <span>

namespace excons {

/// Area under the ROC curve via the Mann-Whitney statistic: the fraction of
/// (positive, negative) pairs where the positive outscores the negative,
/// ties counted as half. Labels must be 0/1 with both classes present.
double auc(std::span<const double> labels, std::span<const double> scores);

/// Coefficient of determination, 1 - SS_res / SS_tot. Truth must be
/// non-constant and hold at least two values.
double r2(std::span<const double> truth, std::span<const double> predictions);

} // namespace excons

#endif
