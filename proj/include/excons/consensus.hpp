#ifndef EXCONS_CONSENSUS_HPP
#define EXCONS_CONSENSUS_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "excons/explain.hpp"
#include "excons/types.hpp"

namespace excons {

/// Fused per-feature score with its ordering. `ranking` lists 0-based
/// feature indices sorted best-first: descending by score normally,
/// ascending when `ascending` is set (the rank-average function, where a
/// lower mean position is better). Ties always break toward the lower
/// feature index.
struct ConsensusResult {
    std::string function;
    std::vector<double> scores;
    std::vector<std::size_t> ranking;
    bool ascending = false;
    std::vector<std::string> warnings;
    std::vector<std::pair<std::string, std::string>> contributing_records; // (model_id, method)

    nlohmann::json to_json() const;
    static ConsensusResult from_json(const nlohmann::json& j, const std::string& context = {});
};

void write_consensus(const ConsensusResult& result, const std::filesystem::path& path);
ConsensusResult read_consensus(const std::filesystem::path& path);

/// Model-quality weight 4(m^2 - m) + 1: zero for a coin-flip model
/// (m = 0.5), one at either perfect extreme. Inputs are clamped into [0,1]
/// first so negative R2 behaves like 0.
double alpha_weight(double metric_value);

/// Per-sample confidence weight, the same quadratic over a class
/// probability. Unlike alpha_weight the input must already be in [0,1].
double beta_weight(double probability);

/// Min-max rescaling onto [0,1]. A constant vector maps to all zeros;
/// `degenerate` (when given) reports that case so callers can warn.
std::vector<double> normalize_minmax(std::span<const double> values, bool* degenerate = nullptr);

/// Per-feature mean over a local record's explained rows; the conventional
/// way a local method is read globally.
std::vector<double> collapse_local(const ExplanationRecord& record);

/// Average positions under descending attribution order, 1-based, ties
/// sharing the mean of the positions they span.
std::vector<double> fractional_ranks(std::span<const double> values);

/// One record's term of the proposed function: min-max-normalized
/// attributions weighted by alpha (and per-row beta / N for local records).
std::vector<double> proposed_contribution(const ExplanationRecord& record,
                                          std::vector<std::string>* warnings = nullptr);

ConsensusResult consensus_arithmetic(std::span<const ExplanationRecord> records);
ConsensusResult consensus_harmonic(std::span<const ExplanationRecord> records);
ConsensusResult consensus_geometric(std::span<const ExplanationRecord> records);
ConsensusResult consensus_ranking(std::span<const ExplanationRecord> records);
ConsensusResult consensus_voting(std::span<const ExplanationRecord> records, std::size_t n_top);
ConsensusResult consensus_proposed(std::span<const ExplanationRecord> records);

const std::vector<std::string>& consensus_function_names();

/// Dispatch by function name ("arithmetic", "harmonic", "geometric",
/// "ranking", "voting", "proposed"). n_top only matters for voting.
ConsensusResult run_consensus(std::string_view function,
                              std::span<const ExplanationRecord> records, std::size_t n_top);

} // namespace excons

#endif
