#include "calabi/report.hpp"

#include <json.hpp>

#include "calabi/errors.hpp"
#include "calabi/potential.hpp"

namespace calabi {

using ojson = nlohmann::ordered_json;

AmbientChoice AmbientChoice::parse(const std::string& s) {
    AmbientChoice a;
    if (s == "flat") {
        a.kind = Kind::flat;
    } else if (s == "projective") {
        a.kind = Kind::projective;
    } else if (s == "hyperbolic") {
        a.kind = Kind::hyperbolic;
    } else if (s.rfind("b=", 0) == 0) {
        a.kind = Kind::custom;
        a.b_text = s.substr(2);
        if (a.b_text.empty()) throw UsageError("ambient b=<value> needs a value");
    } else {
        throw UsageError("ambient must be flat, projective, hyperbolic or b=<value>");
    }
    return a;
}

AmbientSpace AmbientChoice::materialize(const Backend& b) const {
    switch (kind) {
        case Kind::flat: return AmbientSpace::flat();
        case Kind::projective: return AmbientSpace::projective(b);
        case Kind::hyperbolic: return AmbientSpace::hyperbolic(b);
        case Kind::custom: return AmbientSpace::space_form(Scalar::parse(b_text, b));
    }
    throw DomainError("invalid ambient choice");
}

std::string AmbientChoice::str() const {
    switch (kind) {
        case Kind::flat: return "flat";
        case Kind::projective: return "projective";
        case Kind::hyperbolic: return "hyperbolic";
        case Kind::custom: return "b=" + b_text;
    }
    return "?";
}

BackendChoice BackendChoice::parse(const std::string& s) {
    BackendChoice b;
    if (s == "auto") {
        b.kind = Kind::automatic;
    } else if (s == "exact") {
        b.kind = Kind::exact;
    } else if (s == "float") {
        b.kind = Kind::floating;
    } else if (s.rfind("float:", 0) == 0) {
        b.kind = Kind::floating;
        long bits = 0;
        try {
            bits = std::stol(s.substr(6));
        } catch (const std::exception&) {
            throw UsageError("backend float:<bits> needs a bit count");
        }
        if (bits < 16 || bits > 1 << 20) throw UsageError("float precision out of range");
        b.bits = static_cast<mpfr_prec_t>(bits);
    } else {
        throw UsageError("backend must be auto, exact or float:<bits>");
    }
    return b;
}

std::string BackendChoice::str() const {
    switch (kind) {
        case Kind::automatic: return "auto";
        case Kind::exact: return "exact";
        case Kind::floating: return "float:" + std::to_string(static_cast<long>(bits));
    }
    return "?";
}

namespace {

Backend resolve_backend(const CheckConfig& c, const PotentialExpr& ast) {
    switch (c.backend.kind) {
        case BackendChoice::Kind::exact:
            return Backend::exact();
        case BackendChoice::Kind::floating:
            return Backend::floating(c.backend.bits);
        case BackendChoice::Kind::automatic:
            break;
    }
    // Exact arithmetic is available unless a decay exponent is a
    // non-integer rational; everything else on the CLI parses exactly.
    for (const std::string& name : collect_decay_exponent_params(ast)) {
        auto it = c.params.find(name);
        if (it == c.params.end()) continue;  // binding reports the unbound error later
        try {
            mpq_class q = rational_from_decimal(it->second);
            if (q.get_den() != 1) return Backend::floating(c.backend.bits);
        } catch (const Error&) {
            continue;  // malformed value; the binding step raises the real error
        }
    }
    return Backend::exact();
}

ParamBinding binding_from_raw(const std::map<std::string, std::string>& raw, const Backend& b) {
    ParamBinding out;
    for (const auto& [name, text] : raw) out.bind(name, Scalar::parse(text, b));
    return out;
}

CenterSpec parse_center(const std::string& text, const ParamBinding& binding, const Backend& b) {
    if (text == "origin") return CenterSpec::origin();
    if (text == "diag") return CenterSpec::diagonal(binding.require("R"));
    std::vector<Scalar> pt;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (item.empty()) throw UsageError("center must be origin, diag or a list of coordinates");
        pt.push_back(Scalar::parse(item, b));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return CenterSpec::explicit_point(std::move(pt));
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c == '"' ? '"' : c;
    }
    return out + "\"";
}

ojson config_json(const CheckConfig& c) {
    ojson j;
    j["potential"] = c.potential_text;
    if (c.preset) j["preset"] = *c.preset;
    ojson p = ojson::object();
    for (const auto& [k, v] : c.params) p[k] = v;
    j["params"] = p;
    j["n"] = c.n;
    j["degree"] = c.degree;
    j["order"] = c.effective_order();
    j["center"] = c.center_text.value_or("origin");
    j["ambient"] = c.ambient.str();
    j["backend"] = c.backend.str();
    j["tolerance"] = c.tolerance_text;
    return j;
}

ojson report_json_obj(const Report& r) {
    ojson j;
    j["schema_version"] = 1;
    j["config"] = config_json(r.config);
    if (r.error) {
        j["error"] = *r.error;
        return j;
    }
    if (r.mass) j["mass"] = r.mass->str();
    j["monomials"] = r.monomials;
    ojson rows = ojson::array();
    for (const auto& row : r.matrix) {
        ojson jr = ojson::array();
        for (const Scalar& v : row) jr.push_back(v.str());
        rows.push_back(std::move(jr));
    }
    j["matrix"] = std::move(rows);
    if (r.verdict) {
        const Verdict& v = *r.verdict;
        ojson jv;
        jv["status"] = to_string(v.status);
        jv["degree"] = v.degree;
        jv["margin"] = v.margin.str();
        jv["marginal"] = v.marginal;
        if (v.obstructed()) {
            ojson cert;
            ojson vec = ojson::array();
            for (const Scalar& c : v.certificate->vector) vec.push_back(c.str());
            cert["vector"] = std::move(vec);
            cert["value"] = v.certificate->value.str();
            jv["certificate"] = std::move(cert);
        } else {
            jv["rank_lower_bound"] = v.rank_lower_bound;
        }
        j["verdict"] = std::move(jv);
    }
    if (r.expected_verdict) {
        ojson e;
        e["verdict"] = *r.expected_verdict;
        if (r.preset_pass) e["pass"] = *r.preset_pass;
        j["expected"] = std::move(e);
    }
    j["notes"] = r.notes;
    return j;
}

}  // namespace

std::string Report::to_json() const { return report_json_obj(*this).dump(2); }

std::string Report::to_csv() const {
    std::string out = "section,key,value\n";
    auto line = [&out](const std::string& sec, const std::string& key, const std::string& val) {
        out += sec + "," + csv_escape(key) + "," + csv_escape(val) + "\n";
    };
    line("schema", "version", "1");
    line("config", "potential", config.potential_text);
    if (config.preset) line("config", "preset", *config.preset);
    for (const auto& [k, v] : config.params) line("config", "param:" + k, v);
    line("config", "n", std::to_string(config.n));
    line("config", "degree", std::to_string(config.degree));
    line("config", "order", std::to_string(config.effective_order()));
    line("config", "center", config.center_text.value_or("origin"));
    line("config", "ambient", config.ambient.str());
    line("config", "backend", config.backend.str());
    line("config", "tolerance", config.tolerance_text);
    if (error) {
        line("error", "", *error);
        return out;
    }
    if (mass) line("mass", "", mass->str());
    for (std::size_t i = 0; i < monomials.size(); ++i)
        line("monomial", std::to_string(i), monomials[i]);
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t k = 0; k < matrix[i].size(); ++k)
            line("matrix", std::to_string(i) + ":" + std::to_string(k), matrix[i][k].str());
    if (verdict) {
        line("verdict", "status", to_string(verdict->status));
        line("verdict", "degree", std::to_string(verdict->degree));
        line("verdict", "margin", verdict->margin.str());
        line("verdict", "marginal", verdict->marginal ? "true" : "false");
        if (verdict->obstructed()) {
            line("certificate", "value", verdict->certificate->value.str());
            for (std::size_t i = 0; i < verdict->certificate->vector.size(); ++i)
                line("certificate", std::to_string(i), verdict->certificate->vector[i].str());
        } else {
            line("verdict", "rank_lower_bound", std::to_string(verdict->rank_lower_bound));
        }
    }
    if (expected_verdict) {
        line("expected", "verdict", *expected_verdict);
        if (preset_pass) line("expected", "pass", *preset_pass ? "true" : "false");
    }
    for (std::size_t i = 0; i < notes.size(); ++i) line("note", std::to_string(i), notes[i]);
    return out;
}

std::string reports_to_json(const std::vector<Report>& reports) {
    ojson arr = ojson::array();
    for (const Report& r : reports) arr.push_back(report_json_obj(r));
    return arr.dump(2);
}

std::string reports_to_csv(const std::vector<Report>& reports) {
    std::string out;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        out += "report," + std::to_string(i) + ",\n";
        out += reports[i].to_csv();
    }
    return out;
}

Report run_check(const CheckConfig& user_config) {
    CheckConfig config = user_config;
    if (config.degree < 1) throw DomainError("degree must be at least 1");
    if (config.n < 1) throw DimensionMismatch("need at least one variable");

    PotentialExpr ast = parse_potential(config.potential_text);
    Backend backend = resolve_backend(config, ast);
    config.backend = backend.is_exact()
                         ? BackendChoice{BackendChoice::Kind::exact, config.backend.bits}
                         : BackendChoice{BackendChoice::Kind::floating, backend.precision};

    bool decay = uses_decay_atom(ast);
    if (!config.center_text) config.center_text = decay ? "diag" : "origin";
    if (*config.center_text == "diag" && !config.params.count("R")) config.params["R"] = "10";
    config.order = config.effective_order();

    ParamBinding binding = binding_from_raw(config.params, backend);
    Scalar tolerance = Scalar::parse(config.tolerance_text, backend);
    CenterSpec center = parse_center(*config.center_text, binding, backend);
    AmbientSpace ambient = config.ambient.materialize(backend);

    BidegreeSeries phi =
        expand_at_center(ast, binding, center, config.n, *config.order, backend);
    DiastasisExpansion D = diastasis(phi);
    BidegreeSeries transformed = ambient_series(D, ambient);
    CoefficientMatrix M(transformed, config.degree, ambient);
    Verdict verdict = psd_check(M, tolerance);

    Report r;
    r.config = config;
    r.resolved_backend = backend;
    r.monomials = M.labels();
    r.matrix.reserve(M.dim());
    for (std::size_t i = 0; i < M.dim(); ++i) {
        std::vector<Scalar> row;
        row.reserve(M.dim());
        for (std::size_t k = 0; k < M.dim(); ++k) row.push_back(M.at(i, k));
        r.matrix.push_back(std::move(row));
    }
    if (decay && binding.has("a")) r.mass = ale_mass(binding);

    if (std::holds_alternative<std::monostate>(std::variant<std::monostate>{})) {
    }  // no-op; keeps note assembly below in one place

    if (uses_decay_atom(ast) && !uses_radial_decay_atom(ast))
        r.notes.push_back(
            "decay atoms use the separable reading sum_i (z_i conj(z_i))^(-alpha); "
            "raddecay selects the radial reading");
    if (uses_radial_decay_atom(ast))
        r.notes.push_back("raddecay uses the radial reading (sum_i z_i conj(z_i))^(-alpha)");
    if (decay)
        r.notes.push_back(
            "asymptotic error tail modeled as identically zero; judge robustness by the "
            "margin and an R sweep");
    if (uses_taubnut_atom(ast) && *config.order >= 6)
        r.notes.push_back(
            "slice diastasis degree-6 coefficient is +2m^2 (exact series reversion)");
    if (!verdict.obstructed())
        r.notes.push_back("no obstruction up to degree " + std::to_string(config.degree) +
                          "; a finite truncation cannot certify that an immersion exists");
    if (verdict.marginal)
        r.notes.push_back(
            "marginal: a pivot fell inside the numeric zero band; the verdict is conservative");
    r.verdict = std::move(verdict);
    return r;
}

CheckConfig config_from_json(const std::string& report_json) {
    nlohmann::json j = nlohmann::json::parse(report_json);
    const nlohmann::json& c = j.contains("config") ? j["config"] : j;
    CheckConfig out;
    out.potential_text = c.at("potential").get<std::string>();
    if (c.contains("preset")) out.preset = c["preset"].get<std::string>();
    for (const auto& [k, v] : c.at("params").items())
        out.params[k] = v.get<std::string>();
    out.n = c.at("n").get<std::size_t>();
    out.degree = c.at("degree").get<unsigned>();
    out.order = c.at("order").get<int>();
    out.center_text = c.at("center").get<std::string>();
    out.ambient = AmbientChoice::parse(c.at("ambient").get<std::string>());
    out.backend = BackendChoice::parse(c.at("backend").get<std::string>());
    out.tolerance_text = c.at("tolerance").get<std::string>();
    return out;
}

CoefficientMatrix matrix_from_report_json(const std::string& report_json) {
    nlohmann::json j = nlohmann::json::parse(report_json);
    CheckConfig c = config_from_json(report_json);
    if (c.backend.kind == BackendChoice::Kind::automatic)
        throw DomainError("report backend must be resolved");
    Backend backend = c.backend.kind == BackendChoice::Kind::exact
                          ? Backend::exact()
                          : Backend::floating(c.backend.bits);
    std::vector<MultiIndex> ordering = monomial_ordering(c.n, c.degree);
    const nlohmann::json& rows = j.at("matrix");
    if (rows.size() != ordering.size())
        throw DimensionMismatch("matrix size differs from the monomial count");
    std::vector<std::vector<Scalar>> entries;
    entries.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Scalar> er;
        er.reserve(row.size());
        for (const auto& cell : row) er.push_back(Scalar::parse(cell.get<std::string>(), backend));
        entries.push_back(std::move(er));
    }
    return CoefficientMatrix::from_entries(std::move(ordering), std::move(entries), c.degree,
                                           AmbientChoice::parse(j.at("config").at("ambient")
                                                                    .get<std::string>())
                                               .materialize(backend),
                                           backend);
}

bool is_known_preset(const std::string& name) {
    return name == "taubnut" || name == "ale-flat" || name == "ale-hyperbolic" ||
           name == "ale-projective";
}

CheckConfig preset_base_config(const std::string& name) {
    if (!is_known_preset(name)) throw UsageError("unknown preset '" + name + "'");
    CheckConfig c;
    c.preset = name;
    c.degree = 2;
    if (name == "taubnut") {
        c.potential_text = "taubnut_slice(m)";
        c.n = 1;
        c.center_text = "origin";
        c.ambient = AmbientChoice{};  // flat
        c.params["m"] = "1";
        return c;
    }
    c.potential_text = "1/2*normsq + a*sepdecay(alpha)";
    c.n = 2;
    c.center_text = "diag";
    c.params["alpha"] = "1";
    c.params["R"] = "10";
    c.params["a"] = "-1";
    if (name == "ale-hyperbolic") c.ambient = AmbientChoice::parse("hyperbolic");
    if (name == "ale-projective") c.ambient = AmbientChoice::parse("projective");
    return c;
}

namespace {

// Degree-2 coefficient block of the ALE family in closed form,
// independent of the series pipeline. With x = a alpha^2 R^{-2alpha-2}
// the per-variable block over {z_i, z_i^2} is
//   [ 1/2 + x                 -a alpha^2(alpha+1)/2 R^{-2alpha-3} ]
//   [ (mirror)                 e33                                ]
// and the z_i z_j cross diagonal is 0 / -c^2 / +c^2 for the flat /
// hyperbolic / projective targets, where c = 1/2 + x and e33 shifts by
// -+ c^2/2 off the flat value a alpha^2(alpha+1)^2/4 R^{-2alpha-4}.
VerdictStatus ale_closed_form_status(AmbientChoice::Kind kind, const Scalar& a,
                                     const Scalar& alpha, const Scalar& R, std::size_t n) {
    Backend b = a.backend();
    Scalar one = Scalar::one(b);
    Scalar two = Scalar::integer(2, b);
    Scalar half = one / two;
    Scalar a2 = alpha * alpha;
    Scalar ap1 = alpha + one;

    Scalar r_exp_base = -(two * alpha + two);  // -2alpha-2
    Scalar x = a * a2 * complex_pow(R, r_exp_base);
    Scalar c = half + x;
    Scalar s = -(a * a2 * ap1 * half) * complex_pow(R, r_exp_base - one);
    Scalar t = a * a2 * ap1 * ap1 / Scalar::integer(4, b) * complex_pow(R, r_exp_base - two);

    Scalar e33 = t, ecross = Scalar::zero(b);
    if (kind == AmbientChoice::Kind::hyperbolic) {
        e33 = t - half * c * c;
        ecross = -(c * c);
    } else if (kind == AmbientChoice::Kind::projective) {
        e33 = t + half * c * c;
        ecross = c * c;
    }

    bool psd = c.sign_real() >= 0 && e33.sign_real() >= 0 &&
               (c * e33 - s * s).sign_real() >= 0 && (n < 2 || ecross.sign_real() >= 0);
    return psd ? VerdictStatus::no_obstruction_up_to_degree : VerdictStatus::obstructed;
}

void attach_expected(Report& r, const std::string& name) {
    Backend b = r.resolved_backend;
    auto param = [&](const std::string& key) {
        return Scalar::parse(r.config.params.at(key), b);
    };

    std::optional<VerdictStatus> expected;
    if (name == "taubnut") {
        expected = param("m").sign_real() > 0 ? VerdictStatus::obstructed
                                              : VerdictStatus::no_obstruction_up_to_degree;
    } else {
        AmbientChoice::Kind kind = r.config.ambient.kind;
        VerdictStatus cf =
            ale_closed_form_status(kind, param("a"), param("alpha"), param("R"), r.config.n);
        if (cf == VerdictStatus::obstructed) {
            // An obstructed degree-2 block stays obstructed at every
            // higher degree (leading principal submatrix).
            expected = cf;
        } else if (r.config.degree == 2) {
            expected = cf;
        } else {
            r.notes.push_back(
                "expected verdict omitted: the closed-form reference covers the degree-2 "
                "block only");
        }
    }
    if (expected) {
        r.expected_verdict = to_string(*expected);
        r.preset_pass = r.verdict && r.verdict->status == *expected;
    }
    if (name == "ale-flat")
        r.notes.push_back(
            "flat obstruction occurs exactly when the decay coefficient a (the mass) is "
            "negative, at this truncation");
}

}  // namespace

std::vector<Report> repro_preset(const std::string& name, const PresetOverrides& overrides) {
    if (!is_known_preset(name)) throw UsageError("unknown preset '" + name + "'");
    CheckConfig base = preset_base_config(name);
    for (const auto& [k, v] : overrides.params) base.params[k] = v;
    if (overrides.degree) base.degree = *overrides.degree;
    if (overrides.backend) base.backend = *overrides.backend;
    if (overrides.tolerance) base.tolerance_text = *overrides.tolerance;

    std::vector<std::string> a_grid;
    if (name != "taubnut" && !overrides.params.count("a")) a_grid = {"-1", "1"};

    std::vector<Report> out;
    if (a_grid.empty()) {
        out.push_back(run_check(base));
        attach_expected(out.back(), name);
    } else {
        for (const std::string& a : a_grid) {
            CheckConfig c = base;
            c.params["a"] = a;
            out.push_back(run_check(c));
            attach_expected(out.back(), name);
        }
    }
    return out;
}

std::vector<Report> sweep(const CheckConfig& base, const std::string& over,
                          const std::vector<std::string>& values) {
    if (over != "a" && over != "alpha" && over != "m" && over != "R" && over != "degree")
        throw UsageError("sweep parameter must be one of: a, alpha, m, R, degree");
    std::vector<Report> out;
    out.reserve(values.size());
    for (const std::string& value : values) {
        CheckConfig c = base;
        try {
            if (over == "degree") {
                mpq_class q = rational_from_decimal(value);
                if (q.get_den() != 1 || q < 1)
                    throw DomainError("degree must be a positive integer");
                c.degree = static_cast<unsigned>(q.get_num().get_ui());
            } else {
                c.params[over] = value;
            }
            out.push_back(run_check(c));
        } catch (const Error& e) {
            Report slot;
            slot.config = c;
            slot.error = e.what();
            out.push_back(std::move(slot));
        }
    }
    return out;
}

}  // namespace calabi
