#ifndef EXCONS_EVALUATE_HPP
#define EXCONS_EVALUATE_HPP

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "excons/consensus.hpp"
#include "excons/dataset.hpp"
#include "excons/explain.hpp"
#include "excons/models.hpp"
#include "excons/types.hpp"

namespace excons {

struct HitEntry {
    std::size_t position = 0; // 1-based rank position
    int feature = 0;          // 1-based feature index (F<feature>)
    double score = 0.0;
    bool hit = false;
};

/// Top-N slice of a consensus ranking scored against the dataset's expected
/// feature set. separation_margin is positive exactly when every expected
/// feature outranks every noise feature (sign handled for ascending
/// rankings).
struct HitReport {
    std::string function;
    std::string model_scope = "per-model"; // or "pooled"
    std::size_t top_n = 0;
    std::vector<HitEntry> entries;
    double expected_recall = 0.0;
    double separation_margin = 0.0;

    nlohmann::json to_json() const;
};

HitReport topn_hits(const ConsensusResult& result, const std::set<int>& expected,
                    std::size_t n);

struct EvaluationCell {
    std::string dataset;
    std::string model; // model kind name, or "pooled"
    std::string function;
    PerformanceMetric metric; // of the explained model; unset for pooled
    ConsensusResult consensus;
    HitReport hits;
    std::string error; // non-empty when this cell failed

    std::string file_stem() const { return dataset + "_" + model + "_" + function; }
};

struct SummaryRow {
    std::string function;
    std::string dataset;
    double mean_recall = 0.0;
    double mean_margin = 0.0;
};

struct EvaluationReport {
    std::size_t top_n = 5;
    bool pooled = false;
    std::uint64_t master_seed = 0;
    std::vector<EvaluationCell> cells;
    std::vector<SummaryRow> summary; // per (function, dataset) over per-model cells

    nlohmann::json to_json() const;
};

struct ModelConfigEntry {
    ModelKind kind = ModelKind::knn;
    std::size_t k = 5;
    ForestOptions forest;
    std::size_t repeats = 5;
};

struct RunSettings {
    double train_fraction = 0.8;
    ExplainConfig explain; // explain.seed is ignored; per-cell seeds derive from master_seed
    std::size_t voting_n_top = 5;
    std::size_t top_n = 5;
    bool pooled = false;
    std::vector<std::string> functions; // empty means all six
    std::uint64_t master_seed = 0;
};

/// Everything one experiment produced, kept in memory so callers can persist
/// whichever artifacts they need.
struct ModelCellInfo {
    std::string dataset;
    std::string model_id;
    ModelKind kind = ModelKind::knn;
    PerformanceMetric metric;
    std::vector<double> candidate_metrics;
    std::vector<ExplanationRecord> records;
};

struct RunOutput {
    std::vector<DatasetSpec> specs;
    std::vector<Dataset> datasets;
    std::vector<ModelCellInfo> model_cells;
    EvaluationReport report;
};

/// The full grid: generate + split each dataset, train each model
/// (best-of-repeats), explain, fuse with every requested function and score
/// hits per model (plus pooled cells when enabled). A failing cell records
/// its error and the grid continues. Pure function of (specs, models,
/// settings).
RunOutput run_matrix(const std::vector<DatasetSpec>& specs,
                     const std::vector<ModelConfigEntry>& models, const RunSettings& settings);

/// Per-cell CSV ("position,feature,score,hit") and a horizontal bar SVG, hit
/// and miss bars in distinct fills, length proportional to |score|. Skips
/// failed cells. Filenames follow <dataset>_<model>_<function>.{csv,svg}.
void emit_charts(const EvaluationReport& report, const std::filesystem::path& out_dir);

void write_hit_csv(const EvaluationCell& cell, const std::filesystem::path& path);
std::vector<HitEntry> read_hit_entries(const std::filesystem::path& path);
void write_hit_svg(const EvaluationCell& cell, const std::filesystem::path& path);

} // namespace excons

#endif
