#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "calabi/diastasis.hpp"
#include "calabi/expand.hpp"
#include "calabi/matrix.hpp"
#include "calabi/psd.hpp"

namespace calabi {

// Ambient target as given on the command line; materialized once the
// backend is known.
struct AmbientChoice {
    enum class Kind { flat, projective, hyperbolic, custom };
    Kind kind = Kind::flat;
    std::string b_text;  // custom only, rational or decimal

    static AmbientChoice parse(const std::string& s);  // flat|projective|hyperbolic|b=<val>
    AmbientSpace materialize(const Backend& b) const;
    std::string str() const;
};

// Backend request; `automatic` picks exact when the potential permits
// it (decay exponents integral) and float:256 otherwise.
struct BackendChoice {
    enum class Kind { automatic, exact, floating };
    Kind kind = Kind::automatic;
    mpfr_prec_t bits = BigFloat::kDefaultPrecision;

    static BackendChoice parse(const std::string& s);  // auto|exact|float:<bits>
    std::string str() const;
};

struct CheckConfig {
    std::string potential_text;
    std::optional<std::string> preset;            // set by repro runs
    std::map<std::string, std::string> params;    // raw value text, decimal or p/q
    std::size_t n = 2;
    unsigned degree = 2;
    std::optional<int> order;                     // default 2*degree
    std::optional<std::string> center_text;       // origin | diag | c1,c2,...
    AmbientChoice ambient;
    BackendChoice backend;
    std::string tolerance_text = "0";

    int effective_order() const { return order ? *order : 2 * static_cast<int>(degree); }
};

struct Report {
    CheckConfig config;  // fully resolved echo; re-running it reproduces the report
    Backend resolved_backend;
    std::vector<std::string> monomials;
    std::vector<std::vector<Scalar>> matrix;
    std::optional<Verdict> verdict;
    std::optional<Scalar> mass;                    // decay coefficient a, when bound
    std::optional<std::string> expected_verdict;   // repro runs
    std::optional<bool> preset_pass;               // repro runs
    std::vector<std::string> notes;
    std::optional<std::string> error;              // failed sweep slots

    std::string to_json() const;  // deterministic field order
    std::string to_csv() const;
};

// expand -> diastasis -> ambient transform -> coefficient matrix ->
// psd_check, with the config echoed back resolved.
Report run_check(const CheckConfig& config);

// Serialize a list of reports (sweeps, preset grids) as a JSON array.
std::string reports_to_json(const std::vector<Report>& reports);
std::string reports_to_csv(const std::vector<Report>& reports);

// Rebuild a config from the "config" object of a report, for re-runs.
CheckConfig config_from_json(const std::string& report_json);

// Parse the "matrix"/"monomials" of a report back into a matrix.
CoefficientMatrix matrix_from_report_json(const std::string& report_json);

struct PresetOverrides {
    std::map<std::string, std::string> params;
    std::optional<unsigned> degree;
    std::optional<BackendChoice> backend;
    std::optional<std::string> tolerance;
};

// Named reproductions: taubnut, ale-flat, ale-hyperbolic,
// ale-projective. ALE presets run a = -1 and a = +1 unless a is pinned;
// every run embeds the expected verdict (from closed-form degree-2
// coefficients computed independently of the series pipeline) and a
// pass flag.
std::vector<Report> repro_preset(const std::string& name, const PresetOverrides& overrides);

bool is_known_preset(const std::string& name);
CheckConfig preset_base_config(const std::string& name);  // single-run variant

// One report per value of `over` in {a, alpha, m, R, degree}; a failing
// value records its error in that slot without aborting the sweep.
std::vector<Report> sweep(const CheckConfig& base, const std::string& over,
                          const std::vector<std::string>& values);

}  // namespace calabi
