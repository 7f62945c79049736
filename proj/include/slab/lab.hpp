#pragma once

#include <map>

#include "slab/besov.hpp"
#include "slab/measures.hpp"
#include "slab/multiplier.hpp"
#include "slab/symbols.hpp"
#include "slab/types.hpp"

namespace slab {

// Plain-text configuration: one "key = value" per line, lists comma-separated,
// '#' starts a comment. Seeds must be given explicitly; there is no wall-clock
// fallback anywhere.
class ExperimentConfig {
public:
    ExperimentConfig() = default;
    static ExperimentConfig parse_file(const std::string& path);
    static ExperimentConfig parse_text(const std::string& text);

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& dflt) const;
    double get_real(const std::string& key) const;
    double get_real(const std::string& key, double dflt) const;
    long get_int(const std::string& key) const;
    long get_int(const std::string& key, long dflt) const;
    std::uint64_t get_seed() const;  // "seed" key, required where randomness is used
    std::vector<double> get_real_list(const std::string& key) const;
    std::vector<double> get_real_list(const std::string& key, const std::vector<double>& dflt) const;
    std::vector<long> get_int_list(const std::string& key) const;
    std::vector<long> get_int_list(const std::string& key, const std::vector<long>& dflt) const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

struct RatioRecord {
    std::string experiment;
    std::string parameters;  // canonical "key=value;key=value" string
    double measured_low = 0.0;
    double measured_high = 0.0;
    double reference_scale = 1.0;
    double ratio_low = 0.0;
    double ratio_high = 0.0;
    long runtime_ms = 0;  // log-only; kept out of the CSV so identical configs
                          // produce byte-identical files
};

struct ExperimentResult {
    std::string name;
    std::string anchor;  // stable tag emitted as "# anchor: <tag>"
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<RatioRecord> records;  // filled by ratio-style experiments

    std::string csv() const;  // deterministic: comment line, header, rows
};

// Named, seeded, deterministic experiment runs. Unknown names raise an error
// listing every registered experiment.
ExperimentResult run_experiment(const ExperimentConfig& config);
std::vector<std::string> registered_experiments();

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
    std::string summary() const;  // one "PASS|FAIL name detail" line per check + totals
};

// suite in {core, symbols, besov, multiplier, measures, all}
VerifyReport verify(const std::string& suite);

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_abs_residual = 0.0;  // in log space
};

// Least-squares slope of log(y) against log(x); needs >= 4 points, all positive.
ScalingFit fit_scaling(const std::vector<double>& x, const std::vector<double>& y);
// Same, reading two named columns from CSV text produced by ExperimentResult::csv().
ScalingFit fit_scaling_csv(const std::string& csv_text, const std::string& x_col,
                           const std::string& y_col);

// Shared helpers for tools and tests.
std::string format_real(double v);  // deterministic "%.12g"
AnalyticSymbol rotate_symbol(const AnalyticSymbol& psi, double angle);  // coeff k *= e^{ik angle}

}  // namespace slab
