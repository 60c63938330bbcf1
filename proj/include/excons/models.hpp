#ifndef EXCONS_MODELS_HPP
#define EXCONS_MODELS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "excons/dataset.hpp"
#include "excons/types.hpp"

namespace excons {

enum class ModelKind { knn, forest, oracle };

const char* to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& s);

/// A fitted predictor. Immutable after training; safe to share across
/// threads. score() is the model's decision value: class-1 probability for
/// classifiers, the predicted value for regressors. It is the value function
/// every explainer consumes.
class TrainedModel {
public:
    virtual ~TrainedModel() = default;

    const std::string& id() const { return id_; }
    Task task() const { return task_; }
    ModelKind kind() const { return kind_; }
    std::size_t n_features() const { return n_features_; }

    const PerformanceMetric& metric() const { return metric_; }
    void set_metric(PerformanceMetric m) { metric_ = m; }

    double score(std::span<const double> row) const;
    std::vector<double> scores(const Matrix& rows) const;

    /// Labels (thresholded at 0.5, ties to class 1) or regression values.
    std::vector<double> predict(const Matrix& rows) const;

    /// Class-1 probabilities; throws on regression models.
    std::vector<double> predict_proba(const Matrix& rows) const;

protected:
    TrainedModel(std::string id, Task task, ModelKind kind, std::size_t n_features,
                 PerformanceMetric metric)
        : id_(std::move(id)), task_(task), kind_(kind), n_features_(n_features),
          metric_(metric) {}

    virtual double score_row(std::span<const double> row) const = 0;

private:
    std::string id_;
    Task task_;
    ModelKind kind_;
    std::size_t n_features_;
    PerformanceMetric metric_;
};

/// Brute-force k-nearest-neighbours over Euclidean distance. Distance ties
/// go to the lower training-row index; prediction is the neighbour class-1
/// fraction (classification) or the neighbour target mean (regression).
std::unique_ptr<TrainedModel> train_knn(const Dataset& train, std::size_t k,
                                        std::string model_id = "knn");

struct ForestOptions {
    std::size_t n_trees = 100;
    std::size_t max_depth = 8;
    /// Features tried per split; 0 picks ceil(sqrt(d)) for classification
    /// and ceil(d/3) for regression.
    std::size_t max_features = 0;
};

class ForestModel;

/// Bagged depth-limited trees on bootstrap samples with per-split feature
/// subsampling (Gini / variance reduction). Deterministic given seed.
std::unique_ptr<TrainedModel> train_forest(const Dataset& train, const ForestOptions& options,
                                           std::uint64_t seed, std::string model_id = "forest");

/// Per-feature impurity-decrease totals a forest accumulated while training.
/// Throws unless the model is a forest.
std::span<const double> forest_impurity_totals(const TrainedModel& model);

/// Perfect predictor wrapping the dataset rule; probability outputs are hard
/// 0/1 and the stored metric is pinned at 1.
std::unique_ptr<TrainedModel> oracle_model(const DatasetSpec& spec,
                                           std::string model_id = "oracle");

struct ModelParams {
    ModelKind kind = ModelKind::knn;
    std::size_t k = 5;
    ForestOptions forest;
};

struct BestOfResult {
    std::unique_ptr<TrainedModel> model;
    /// Metric of every candidate, in sub-seed order. model's metric equals
    /// the max; ties resolved to the earliest candidate.
    std::vector<double> candidate_metrics;
};

/// Train `repeats` candidates with derived sub-seeds, score each on the test
/// split (AUC or R2 by task) and keep the best. The oracle kind needs the
/// dataset spec.
BestOfResult train_best_of(const Dataset& train, const Dataset& test, const ModelParams& params,
                           std::size_t repeats, std::uint64_t seed,
                           const DatasetSpec* spec_for_oracle = nullptr,
                           std::string model_id = {});

} // namespace excons

#endif
