#ifndef EXCONS_EXPLAIN_HPP
#define EXCONS_EXPLAIN_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "excons/dataset.hpp"
#include "excons/models.hpp"
#include "excons/random.hpp"
#include "excons/types.hpp"

namespace excons {

enum class Scope { global, local };

const char* to_string(Scope scope);
Scope scope_from_string(const std::string& s);

/// One (model, method) attribution result. Global records hold one value per
/// feature; local records hold a row per explained sample (flat, row-major)
/// plus, for classifiers, that sample's class-1 probability.
struct ExplanationRecord {
    std::string method;
    Scope scope = Scope::global;
    std::string model_id;
    PerformanceMetric metric;
    std::size_t n_features = 0;
    std::vector<double> attributions;    // global: d entries; local: rows*d
    std::vector<std::size_t> row_ids;    // local only
    std::vector<double> probabilities;   // local classification only

    std::size_t n_rows() const { return n_features == 0 ? 0 : attributions.size() / n_features; }
    double value(std::size_t row, std::size_t feature) const {
        return attributions[row * n_features + feature];
    }

    /// Shape, finiteness and probability-range invariants. `context` prefixes
    /// error messages (typically a file path).
    void validate(const std::string& context = {}) const;

    nlohmann::json to_json() const;
    static ExplanationRecord from_json(const nlohmann::json& j, const std::string& context = {});
};

void write_record(const ExplanationRecord& record, const std::filesystem::path& path);
ExplanationRecord read_record(const std::filesystem::path& path);

/// Mean drop in AUC/R2 over `repeats` independent shuffles of each column.
/// A column the model never reads scores exactly zero.
ExplanationRecord permutation_importance(const TrainedModel& model, const Dataset& data,
                                         std::size_t repeats, std::uint64_t seed);

/// Forest impurity-decrease totals, normalized to sum to one (all-zero
/// totals stay all-zero). Throws for non-forest models.
ExplanationRecord impurity_importance(const TrainedModel& model);

/// Any scalar-valued function of a feature row; the hook the Shapley
/// machinery uses so tests can plug in closed-form models.
using ValueFn = std::function<double(std::span<const double>)>;

/// Monte-Carlo Shapley estimate for one point: average marginal contribution
/// over sampled feature permutations, with features outside the accumulated
/// prefix taken from a background row (one background row re-drawn per
/// permutation).
std::vector<double> shapley_sample(const ValueFn& f, const Matrix& background,
                                   std::span<const double> x, std::size_t n_permutations,
                                   Rng& rng);

/// Exact Shapley values by full coalition enumeration against a single fixed
/// background row. Cost is O(2^d); refuses d > max_features.
std::vector<double> exact_shapley(const ValueFn& f, std::span<const double> background_row,
                                  std::span<const double> x, std::size_t max_features = 15);

/// shapley_sample applied to each explained row of a model, packaged as a
/// local record. Each row derives its own generator from (seed, row ordinal)
/// so results do not depend on evaluation order.
ExplanationRecord shapley_mc(const TrainedModel& model, const Dataset& background,
                             const Matrix& explain_rows, const std::vector<std::size_t>& row_ids,
                             std::size_t n_permutations, std::uint64_t seed);

/// Single-feature ablation against the training mean: score(x) minus score
/// of x with feature j replaced by mean_j.
ExplanationRecord occlusion(const TrainedModel& model, const Dataset& train,
                            const Matrix& explain_rows, const std::vector<std::size_t>& row_ids);

struct ExplainConfig {
    std::size_t max_explained = 200;
    std::size_t permutation_repeats = 5;
    std::size_t shapley_permutations = 100;
    std::uint64_t seed = 0;
};

/// Every applicable method for this model: permutation importance, impurity
/// (forests only), Shapley and occlusion over up to max_explained test rows
/// sampled without replacement. Records carry the model's metric.
std::vector<ExplanationRecord> explain_suite(const TrainedModel& model, const Dataset& train,
                                             const Dataset& test, const ExplainConfig& config);

} // namespace excons

#endif
