#ifndef EXCONS_DATASET_HPP
#define EXCONS_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "excons/rule.hpp"
#include "excons/types.hpp"

namespace excons {

/// Description of a synthetic dataset: sizes, the generating rule, and the
/// feature subset the rule actually reads (what a correct explanation is
/// expected to recover).
struct DatasetSpec {
    std::string name;
    Task task = Task::classification;
    std::size_t n_samples = 0;
    std::size_t n_features = 0;
    RuleExpr rule;
    std::set<int> expected_features; // 1-based

    /// Throws Error(invalid_argument) when sizes are out of range, the rule
    /// is missing, task disagrees with the rule shape, or expected_features
    /// differs from the features the rule references.
    void validate() const;
};

/// The four built-in dataset definitions (DS1..DS4). Unknown name throws.
DatasetSpec builtin_spec(std::string_view name);

const std::vector<std::string>& builtin_spec_names();

/// A realized sample table. Cells are uniform in [0,1); targets re-evaluate
/// from the generating rule when one is known.
struct Dataset {
    std::string name;
    Task task = Task::classification;
    Matrix rows;
    std::vector<double> targets;
    std::uint64_t seed = 0;

    std::size_t n_samples() const { return rows.rows(); }
    std::size_t n_features() const { return rows.cols(); }
};

/// Evaluate the spec's rule on one row. Validates width and finiteness.
double eval_rule(const DatasetSpec& spec, std::span<const double> row);

/// Draw the sample table for (spec, seed). Pure: equal inputs give
/// bit-identical datasets. Classification tables are re-drawn with derived
/// sub-seeds (at most 20 attempts) until both classes appear.
Dataset generate(const DatasetSpec& spec, std::uint64_t seed);

/// Disjoint, exhaustive train/test partition. Classification splits are
/// stratified: each class contributes round(fraction * count) rows to train.
std::pair<Dataset, Dataset> split(const Dataset& dataset, double train_fraction,
                                  std::uint64_t seed);

/// CSV persistence. Header "F1,...,Fn,y", LF endings, shortest round-trip
/// decimals; classification targets serialized as 0/1 integers.
void write_dataset(const Dataset& dataset, const std::filesystem::path& path);
Dataset read_dataset(const std::filesystem::path& path);

} // namespace excons

#endif
