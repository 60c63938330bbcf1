#ifndef EXCONS_PIPELINE_HPP
#define EXCONS_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "excons/evaluate.hpp"

namespace excons {

/// A full experiment description. Everything an invocation produces is a
/// pure function of this config (timings aside); the master seed must be set
/// explicitly, never from the clock.
struct RunConfig {
    std::vector<DatasetSpec> datasets;
    std::vector<ModelConfigEntry> models;
    ExplainConfig explain;
    std::size_t voting_n_top = 5;
    std::size_t top_n = 5;
    bool pooled = false;
    std::vector<std::string> functions; // empty = all six
    double train_fraction = 0.8;
    std::uint64_t master_seed = 0;
    bool seed_set = false;
    std::string output_dir = "out";

    /// Reduced sizes (800 samples, 5 repeats, lighter Shapley sampling) so a
    /// full grid finishes in minutes on one core.
    static RunConfig desk_default();

    /// Table-scale profile: full dataset sizes and 50 training repeats.
    static RunConfig paper_scale();

    /// Parse + validate. Dataset entries may be builtin names ("DS1"), a
    /// builtin with overrides ({"name":"DS1","n_samples":800}), or a full
    /// inline spec with a rule.
    static RunConfig from_json(const nlohmann::json& j);

    /// Canonical form: inline specs resolved, defaults materialized. Hashing
    /// this dump yields the run id.
    nlohmann::json to_json() const;

    void validate() const;

    RunSettings settings() const;
};

/// FNV-1a over the canonical config dump, as 16 hex digits.
std::string config_hash(const RunConfig& config);

/// Write each configured dataset as CSV under out_dir. Returns a summary
/// (per dataset: path, sizes, class balance or target range).
nlohmann::json pipeline_generate(const RunConfig& config, const std::filesystem::path& out_dir);

struct PipelineResult {
    nlohmann::json manifest;
    std::filesystem::path run_dir;
    bool all_cells_ok = false;
};

/// The end-to-end experiment: generate, split, train best-of, explain, fuse,
/// score, chart. Artifacts land in out_base/run-<hash>/{datasets,models,
/// attributions,consensus,reports,charts} with the manifest at the root.
/// Cell failures are recorded in the manifest and reflected in all_cells_ok
/// rather than thrown.
PipelineResult pipeline_run(const RunConfig& config, const std::filesystem::path& out_base);

} // namespace excons

#endif
