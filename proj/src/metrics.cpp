#include "excons/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "excons/types.hpp"

namespace excons {

double auc(std::span<const double> labels, std::span<const double> scores) {
    if (labels.size() != scores.size())
        throw Error(ErrorKind::invalid_argument, "auc: labels and scores differ in length");
    if (labels.empty())
        throw Error(ErrorKind::invalid_argument, "auc: empty input");

    std::size_t n_pos = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 0.0 && labels[i] != 1.0)
            throw Error(ErrorKind::invalid_argument, "auc: labels must be 0 or 1");
        if (!std::isfinite(scores[i]))
            throw Error(ErrorKind::invalid_argument, "auc: non-finite score");
        if (labels[i] == 1.0)
            ++n_pos;
    }
    std::size_t n_neg = labels.size() - n_pos;
    if (n_pos == 0 || n_neg == 0)
        throw Error(ErrorKind::invalid_argument, "auc: needs both classes present");

    // Mann-Whitney via average ranks: AUC = (R_pos - n_pos(n_pos+1)/2) /
    // (n_pos * n_neg), with tied scores sharing the mean of their positions.
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    double rank_sum_pos = 0.0;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j < order.size() && scores[order[j]] == scores[order[i]])
            ++j;
        double mean_rank = 0.5 * static_cast<double>(i + 1 + j); // positions i+1 .. j
        for (std::size_t k = i; k < j; ++k)
            if (labels[order[k]] == 1.0)
                rank_sum_pos += mean_rank;
        i = j;
    }
    double np = static_cast<double>(n_pos);
    double nn = static_cast<double>(n_neg);
    return (rank_sum_pos - np * (np + 1.0) / 2.0) / (np * nn);
}

double r2(std::span<const double> truth, std::span<const double> predictions) {
    if (truth.size() != predictions.size())
        throw Error(ErrorKind::invalid_argument, "r2: truth and predictions differ in length");
    if (truth.size() < 2)
        throw Error(ErrorKind::invalid_argument, "r2: needs at least two samples");
    for (std::size_t i = 0; i < truth.size(); ++i)
        if (!std::isfinite(truth[i]) || !std::isfinite(predictions[i]))
            throw Error(ErrorKind::invalid_argument, "r2: non-finite input");

    double mean = 0.0;
    for (double t : truth)
        mean += t;
    mean /= static_cast<double>(truth.size());

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        double r = truth[i] - predictions[i];
        double d = truth[i] - mean;
        ss_res += r * r;
        ss_tot += d * d;
    }
    if (ss_tot == 0.0)
        throw Error(ErrorKind::invalid_argument, "r2: truth is constant");
    return 1.0 - ss_res / ss_tot;
}

} // namespace excons
