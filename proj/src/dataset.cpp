#include "excons/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "excons/random.hpp"
#include "internal.hpp"

namespace excons {

void DatasetSpec::validate() const {
    if (name.empty())
        throw Error(ErrorKind::invalid_argument, "dataset spec needs a name");
    if (rule.empty())
        throw Error(ErrorKind::invalid_argument, "dataset spec '" + name + "' has no rule");
    if (task != rule.task())
        throw Error(ErrorKind::invalid_argument,
                    "dataset spec '" + name + "': task is " + to_string(task)
                        + " but the rule is " + to_string(rule.task())
                        + " shaped (thresholded rules classify, plain expressions regress)");
    if (n_samples < 2 || n_samples > 1000000)
        throw Error(ErrorKind::invalid_argument,
                    "dataset spec '" + name + "': n_samples must be in [2, 1000000], got "
                        + std::to_string(n_samples));
    if (n_features < 1 || n_features > 10000)
        throw Error(ErrorKind::invalid_argument,
                    "dataset spec '" + name + "': n_features must be in [1, 10000], got "
                        + std::to_string(n_features));
    const auto& referenced = rule.referenced_features();
    if (!referenced.empty() && static_cast<std::size_t>(*referenced.rbegin()) > n_features)
        throw Error(ErrorKind::invalid_argument,
                    "dataset spec '" + name + "': rule reads F"
                        + std::to_string(*referenced.rbegin()) + " but only "
                        + std::to_string(n_features) + " features exist");
    if (!expected_features.empty() && expected_features != referenced)
        throw Error(ErrorKind::invalid_argument,
                    "dataset spec '" + name
                        + "': expected_features must match the features the rule reads");
}

namespace {

DatasetSpec make_spec(std::string name, Task task, std::size_t n_samples, std::size_t n_features,
                      const char* rule_text) {
    DatasetSpec spec;
    spec.name = std::move(name);
    spec.task = task;
    spec.n_samples = n_samples;
    spec.n_features = n_features;
    spec.rule = RuleExpr::parse(rule_text);
    spec.expected_features = spec.rule.referenced_features();
    spec.validate();
    return spec;
}

const std::vector<DatasetSpec>& builtin_specs() {
    static const std::vector<DatasetSpec> specs = [] {
        std::vector<DatasetSpec> out;
        out.push_back(make_spec("DS1", Task::classification, 2000, 20,
                                "if (F2*F3)/F9 < F17 then 0 else 1"));
        out.push_back(make_spec("DS2", Task::classification, 1500, 75,
                                "if F55^3 + F5^2 - F25 < 0 then 0 else 1"));
        out.push_back(make_spec("DS3", Task::regression, 2500, 60,
                                "sin(F60) + cos(F58) + tanh(F56) + F1"));
        out.push_back(make_spec("DS4", Task::regression, 2000, 30,
                                "F19^4 - F21^3 + F24^2 - F26"));
        return out;
    }();
    return specs;
}

} // namespace

DatasetSpec builtin_spec(std::string_view name) {
    for (const auto& spec : builtin_specs())
        if (spec.name == name)
            return spec;
    throw Error(ErrorKind::invalid_argument,
                "unknown dataset '" + std::string(name) + "' (built-ins: DS1, DS2, DS3, DS4)");
}

const std::vector<std::string>& builtin_spec_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& spec : builtin_specs())
            out.push_back(spec.name);
        return out;
    }();
    return names;
}

double eval_rule(const DatasetSpec& spec, std::span<const double> row) {
    return spec.rule.evaluate_checked(row, spec.n_features);
}

Dataset generate(const DatasetSpec& spec, std::uint64_t seed) {
    spec.validate();
    constexpr std::size_t max_attempts = 20;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        Rng rng(derive_seed(seed, {stage::generate, attempt}));
        Dataset ds;
        ds.name = spec.name;
        ds.task = spec.task;
        ds.seed = seed;
        ds.rows = Matrix(spec.n_samples, spec.n_features);
        ds.targets.resize(spec.n_samples);
        for (std::size_t r = 0; r < spec.n_samples; ++r) {
            auto row = ds.rows.row(r);
            for (double& cell : row)
                cell = rng.uniform01();
            ds.targets[r] = eval_rule(spec, row);
        }
        if (spec.task == Task::classification) {
            // Both classes must appear or downstream AUC is undefined;
            // redraw with the next derived sub-seed if the table came out
            // one-sided.
            bool has0 = false, has1 = false;
            for (double t : ds.targets)
                (t == 0.0 ? has0 : has1) = true;
            if (!has0 || !has1)
                continue;
        }
        return ds;
    }
    throw Error(ErrorKind::internal,
                "dataset '" + spec.name + "' produced a single class in "
                    + std::to_string(max_attempts)
                    + " attempts; the rule's threshold is likely degenerate over [0,1) inputs");
}

namespace {

Dataset take_rows(const Dataset& source, const std::vector<std::size_t>& indices) {
    Dataset out;
    out.name = source.name;
    out.task = source.task;
    out.seed = source.seed;
    out.rows = Matrix(indices.size(), source.n_features());
    out.targets.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        auto src = source.rows.row(indices[i]);
        std::copy(src.begin(), src.end(), out.rows.row(i).begin());
        out.targets.push_back(source.targets[indices[i]]);
    }
    return out;
}

// round(fraction * n), kept away from the empty-side edges so both splits
// stay usable.
std::size_t train_count(std::size_t n, double fraction) {
    auto t = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
    if (n >= 2)
        t = std::clamp<std::size_t>(t, 1, n - 1);
    return std::min(t, n);
}

} // namespace

std::pair<Dataset, Dataset> split(const Dataset& dataset, double train_fraction,
                                  std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw Error(ErrorKind::invalid_argument, "train_fraction must be strictly inside (0, 1)");
    if (dataset.n_samples() < 2)
        throw Error(ErrorKind::invalid_argument, "cannot split fewer than two samples");

    std::vector<std::size_t> train_idx, test_idx;
    auto partition = [&](std::vector<std::size_t> pool, std::uint64_t label) {
        Rng rng(derive_seed(seed, {stage::split, label}));
        rng.shuffle(std::span<std::size_t>(pool));
        std::size_t t = train_count(pool.size(), train_fraction);
        train_idx.insert(train_idx.end(), pool.begin(), pool.begin() + t);
        test_idx.insert(test_idx.end(), pool.begin() + t, pool.end());
    };

    if (dataset.task == Task::classification) {
        std::vector<std::size_t> class0, class1;
        for (std::size_t r = 0; r < dataset.n_samples(); ++r)
            (dataset.targets[r] == 0.0 ? class0 : class1).push_back(r);
        partition(std::move(class0), 0);
        partition(std::move(class1), 1);
    } else {
        std::vector<std::size_t> all(dataset.n_samples());
        for (std::size_t r = 0; r < all.size(); ++r)
            all[r] = r;
        partition(std::move(all), 0);
    }

    // Original row order within each side keeps the result independent of
    // class-iteration order.
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());
    return {take_rows(dataset, train_idx), take_rows(dataset, test_idx)};
}

namespace {

void append_double(std::string& out, double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

} // namespace

void write_dataset(const Dataset& dataset, const std::filesystem::path& path) {
    if (dataset.n_samples() == 0 || dataset.n_features() == 0)
        throw Error(ErrorKind::invalid_argument, "refusing to write an empty dataset");
    std::string out;
    out.reserve(dataset.n_samples() * (dataset.n_features() + 1) * 8);
    for (std::size_t c = 0; c < dataset.n_features(); ++c) {
        out += feature_name(c);
        out += ',';
    }
    out += "y\n";
    for (std::size_t r = 0; r < dataset.n_samples(); ++r) {
        auto row = dataset.rows.row(r);
        for (double cell : row) {
            append_double(out, cell);
            out += ',';
        }
        if (dataset.task == Task::classification)
            out += dataset.targets[r] == 0.0 ? '0' : '1';
        else
            append_double(out, dataset.targets[r]);
        out += '\n';
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::io, "cannot open '" + path.string() + "' for writing");
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f)
        throw Error(ErrorKind::io, "short write to '" + path.string() + "'");
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

double parse_cell(const std::string& field, const std::filesystem::path& path, std::size_t line_no,
                  const std::string& column) {
    double v = 0.0;
    auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size() || !std::isfinite(v))
        throw Error(ErrorKind::parse, path.string() + ":" + std::to_string(line_no) + ": column "
                                          + column + ": '" + field + "' is not a finite number");
    return v;
}

} // namespace

Dataset read_dataset(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::io, "cannot open '" + path.string() + "' for reading");

    std::string line;
    if (!std::getline(f, line))
        throw Error(ErrorKind::parse, path.string() + ": empty file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();

    auto header = split_fields(line);
    if (header.size() < 2 || header.back() != "y")
        throw Error(ErrorKind::parse,
                    path.string() + ":1: header must be F1,...,Fn,y");
    std::size_t n_features = header.size() - 1;
    for (std::size_t c = 0; c < n_features; ++c)
        if (header[c] != feature_name(c))
            throw Error(ErrorKind::parse, path.string() + ":1: header column "
                                              + std::to_string(c + 1) + " is '" + header[c]
                                              + "', expected '" + feature_name(c) + "'");

    std::vector<std::vector<double>> rows;
    std::vector<double> targets;
    std::vector<std::string> target_tokens;
    std::size_t line_no = 1;
    while (std::getline(f, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        auto fields = split_fields(line);
        if (fields.size() != header.size())
            throw Error(ErrorKind::parse, path.string() + ":" + std::to_string(line_no) + ": has "
                                              + std::to_string(fields.size()) + " fields, expected "
                                              + std::to_string(header.size()));
        std::vector<double> row(n_features);
        for (std::size_t c = 0; c < n_features; ++c) {
            row[c] = parse_cell(fields[c], path, line_no, feature_name(c));
            if (row[c] < 0.0 || row[c] > 1.0)
                throw Error(ErrorKind::parse, path.string() + ":" + std::to_string(line_no)
                                                  + ": column " + feature_name(c) + ": value "
                                                  + fields[c] + " is outside [0, 1]");
        }
        rows.push_back(std::move(row));
        targets.push_back(parse_cell(fields.back(), path, line_no, "y"));
        target_tokens.push_back(fields.back());
    }
    if (rows.empty())
        throw Error(ErrorKind::parse, path.string() + ": no data rows");

    Dataset ds;
    ds.name = path.stem().string();
    ds.rows = Matrix::from_rows(rows);
    ds.targets = std::move(targets);
    // Targets written by this library are 0/1 literals exactly when the task
    // classifies, so the token shape recovers the task.
    bool binary = true;
    for (const auto& token : target_tokens)
        if (token != "0" && token != "1")
            binary = false;
    ds.task = binary ? Task::classification : Task::regression;
    return ds;
}

} // namespace excons
