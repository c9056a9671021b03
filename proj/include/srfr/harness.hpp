#pragma once

#include <iosfwd>
#include <string>

#include "srfr/irs.hpp"
#include "srfr/plswe.hpp"

namespace srfr {

// Operator or input mistakes (bad config keys, malformed instance files,
// inconsistent parameters).  The CLI maps this to exit code 64.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CampaignConfig {
    enum class Mode { Srfr, Plswe, Oblivious, Adversarial };

    Mode mode = Mode::Srfr;
    uint64_t q = 0;
    size_t n = 0;
    size_t l = 1;
    int64_t deg_f = -1;  // true degrees the generators aim for
    int64_t deg_g = -1;
    int64_t d_f = -1;    // caps handed to the solver
    int64_t d_g = -1;
    int64_t deg_A = -1;
    int64_t deg_b = -1;
    int64_t d_A = -1;
    int64_t d_b = -1;
    std::vector<int64_t> error_counts;
    size_t trials = 0;
    uint64_t seed = 1;

    bool needs_system() const { return mode != Mode::Srfr; }
};

const char* mode_name(CampaignConfig::Mode mode);

// key = value lines, '#' comments, unknown keys rejected.
CampaignConfig parse_config_text(const std::string& text);
CampaignConfig parse_config_file(const std::string& path);

enum class TrialOutcome { Recovered, Wrong, Empty, ExceededDetected };

struct TrialRecord {
    size_t trial = 0;
    std::string radius_name;
    int64_t radius_value = 0;
    size_t actual_errors = 0;
    TrialOutcome outcome = TrialOutcome::Empty;
    size_t space_dim = 0;
    int64_t expected_dfge = 0;
    bool span_ok = true;  // only meaningful for recovered trials with span checks on
};

struct ScenarioRow {
    std::string scenario_id;
    CampaignConfig::Mode mode;
    uint64_t q = 0;
    size_t l = 0, n = 0;
    int64_t deg_f = -1, deg_g = -1, d_f = -1, d_g = -1;
    int64_t deg_A = -1, deg_b = -1, d_A = -1, d_b = -1;
    int64_t eps = 0;
    size_t actual_errors = 0;  // minimum genuine error count seen across trials
    std::string radius_name;
    int64_t radius_value = 0;
    size_t trials = 0;
    size_t recovered = 0, wrong = 0, empty = 0, exceeded_detected = 0;
    double empirical_failure_rate = 0.0;
    double theoretical_bound = 0.0;

    size_t span_failures = 0;  // successes whose space missed the expected structure
    std::vector<TrialRecord> records;
};

struct CampaignResult {
    std::vector<ScenarioRow> rows;
};

struct RunOptions {
    bool collect_records = false;
    bool span_checks = true;  // verify space structure on successful srfr trials
};

CampaignResult run_campaign(const CampaignConfig& config, const RunOptions& opts = {});

// One row per entry of error_counts; same column set in every mode.
std::string to_csv(const CampaignResult& result);

RadiusReport radius_report(const CampaignConfig& config, int64_t eps);

// Aligned text table of every radius for each configured error count.
std::string radius_table(const CampaignConfig& config);

// Self-contained decoding problem, as read from / written to instance files:
//   line 1:  q n l d_f d_g eps [d_A d_b]
//   line 2:  n grid points
//   line 3+: l rows of n observed values
// All integers decimal, residues canonical (< q).
struct InstanceFile {
    uint64_t q = 0;
    size_t n = 0, l = 0;
    int64_t d_f = 0, d_g = 0, eps = 0;
    std::optional<int64_t> d_A, d_b;  // both present or both absent
    std::vector<uint64_t> alphas;
    std::vector<uint64_t> y;  // row-major l x n

    FieldParams field() const { return FieldParams(q); }
    EvaluationGrid grid() const;
    ObservationMatrix observations() const;
    SrfrParams srfr_params() const { return SrfrParams(n, l, d_f, d_g, eps); }
    PlsweParams plswe_params() const;
};

InstanceFile read_instance_text(const std::string& text);
InstanceFile read_instance_file(const std::string& path);
std::string write_instance_text(const InstanceFile& inst);

// Deterministic grid used by the campaign runner and the generators:
// the points 0, 1, ..., n-1.
EvaluationGrid default_grid(size_t n, const FieldParams& fp);

// Sorted uniform error support of the given size.
std::vector<size_t> sample_error_positions(size_t n, size_t count, Rng& rng);

}  // namespace srfr
