/* excons — explanation-consensus toolkit, C interface.
 *
 * The shared library wraps the C++ core behind opaque handles and status
 * codes so the CLI and foreign-language callers stay ABI-safe. Functions
 * return EXCONS_OK on success; on failure they return a status code and
 * leave a human-readable message retrievable with excons_last_error() on
 * the calling thread. Every handle has exactly one _free function; freeing
 * NULL is a no-op.
 */
#ifndef EXCONS_H
#define EXCONS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum excons_status {
    EXCONS_OK = 0,
    EXCONS_ERROR_INVALID_ARGUMENT = 1,
    EXCONS_ERROR_PARSE = 2,
    EXCONS_ERROR_IO = 3,
    EXCONS_ERROR_RUNTIME = 4
} excons_status;

const char* excons_version(void);

/* Message for the most recent failure on this thread; empty string when the
 * last call succeeded. The pointer stays valid until the next API call on
 * the same thread. */
const char* excons_last_error(void);

/* Frees strings returned through char** out-parameters. */
void excons_string_free(char* s);

/* ---- datasets ---------------------------------------------------------- */

typedef struct excons_dataset excons_dataset;

/* Built-in synthetic dataset (DS1..DS4). n_samples 0 keeps the built-in
 * size. */
excons_status excons_dataset_builtin(const char* name, size_t n_samples, uint64_t seed,
                                     excons_dataset** out);

/* Dataset from a JSON spec: {"name","task","n_samples","n_features","rule"}
 * with an optional "expected_features" array (1-based). */
excons_status excons_dataset_from_spec(const char* spec_json, uint64_t seed,
                                       excons_dataset** out);

excons_status excons_dataset_read_csv(const char* path, excons_dataset** out);
excons_status excons_dataset_write_csv(const excons_dataset* dataset, const char* path);

size_t excons_dataset_samples(const excons_dataset* dataset);
size_t excons_dataset_features(const excons_dataset* dataset);
int excons_dataset_is_classification(const excons_dataset* dataset);

void excons_dataset_free(excons_dataset* dataset);

/* ---- models ------------------------------------------------------------ */

typedef struct excons_model excons_model;

/* Train on `train`, select the best of `repeats` candidates by metric on
 * `test`. model_json: {"kind":"knn","k":5} or
 * {"kind":"forest","n_trees":100,"max_depth":8} or {"kind":"oracle"}
 * (oracle requires a dataset created from a spec), each with an optional
 * "repeats". */
excons_status excons_train(const excons_dataset* train, const excons_dataset* test,
                           const char* model_json, uint64_t seed, excons_model** out);

double excons_model_metric(const excons_model* model);

/* Predictions (labels or regression values) for row-major input. `out` must
 * hold n_rows doubles. */
excons_status excons_model_predict(const excons_model* model, const double* rows, size_t n_rows,
                                   size_t n_features, double* out);

void excons_model_free(excons_model* model);

/* ---- explanations ------------------------------------------------------ */

typedef struct excons_records excons_records;

/* Run every applicable attribution method. explain_json (may be NULL):
 * {"max_explained":200,"permutation_repeats":5,"shapley_permutations":100}. */
excons_status excons_explain(const excons_model* model, const excons_dataset* train,
                             const excons_dataset* test, const char* explain_json, uint64_t seed,
                             excons_records** out);

size_t excons_records_count(const excons_records* records);

/* Write one JSON file per record: <dir>/<model_id>_<method>.json */
excons_status excons_records_write_dir(const excons_records* records, const char* dir);

void excons_records_free(excons_records* records);

/* ---- consensus --------------------------------------------------------- */

typedef struct excons_consensus excons_consensus;

/* Fuse attribution record files with one consensus function ("arithmetic",
 * "harmonic", "geometric", "ranking", "voting", "proposed"). n_top only
 * affects voting; pass 0 for the default of 5. */
excons_status excons_consensus_from_files(const char* const* record_paths, size_t n_paths,
                                          const char* function, size_t n_top,
                                          excons_consensus** out);

excons_status excons_consensus_write_json(const excons_consensus* consensus, const char* path);

void excons_consensus_free(excons_consensus* consensus);

/* ---- evaluation -------------------------------------------------------- */

/* Score a consensus-result JSON against an expected feature set (1-based
 * indices). Returns the hit report as JSON through report_json_out
 * (caller frees with excons_string_free). csv_path/svg_path may be NULL to
 * skip chart emission. */
excons_status excons_evaluate_consensus(const char* consensus_json_path, const int* expected,
                                        size_t n_expected, size_t top_n, const char* csv_path,
                                        const char* svg_path, char** report_json_out);

/* ---- pipeline ---------------------------------------------------------- */

/* Canonical default run config as JSON (paper_scale 0 = desk profile). */
excons_status excons_config_default(int paper_scale, char** config_json_out);

/* Generate the configured datasets as CSV under out_dir; summary JSON
 * through summary_json_out. */
excons_status excons_pipeline_generate(const char* config_json, const char* out_dir,
                                       char** summary_json_out);

/* Full experiment. Writes the artifact tree under out_dir/run-<hash>/ and
 * returns the manifest through manifest_json_out. A run whose cells partly
 * failed returns EXCONS_ERROR_RUNTIME but still writes and returns the
 * manifest. */
excons_status excons_pipeline_run(const char* config_json, const char* out_dir,
                                  char** manifest_json_out);

#ifdef __cplusplus
}
#endif

#endif /* EXCONS_H */
