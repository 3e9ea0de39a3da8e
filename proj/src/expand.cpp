#include "calabi/expand.hpp"

#include "calabi/errors.hpp"

namespace calabi {

void ParamBinding::bind(const std::string& name, const Scalar& value) {
    if (!value.is_real()) throw DomainError("parameter '" + name + "' must be real");
    values_.insert_or_assign(name, value);
}

std::optional<Scalar> ParamBinding::find(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

Scalar ParamBinding::require(const std::string& name) const {
    auto v = find(name);
    if (!v) throw DomainError("unbound parameter '" + name + "'");
    return *v;
}

ParamBinding ParamBinding::parse(const std::string& text, const Backend& b) {
    ParamBinding out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("expected name=value in parameter list", pos);
        std::string name = item.substr(0, eq);
        Scalar value = Scalar::parse(item.substr(eq + 1), b);
        out.bind(name, value);
    }
    return out;
}

CenterSpec CenterSpec::diagonal(const Scalar& R) {
    CenterSpec c;
    c.style = Style::diagonal_real;
    c.radius = R;
    return c;
}

CenterSpec CenterSpec::explicit_point(std::vector<Scalar> p) {
    CenterSpec c;
    c.style = Style::explicit_point;
    c.point = std::move(p);
    return c;
}

bool CenterSpec::is_origin() const {
    if (style == Style::origin) return true;
    if (style == Style::explicit_point) {
        for (const Scalar& c : point)
            if (!c.is_zero()) return false;
        return true;
    }
    return false;
}

std::vector<Scalar> CenterSpec::coordinates(std::size_t n, const Backend& b) const {
    switch (style) {
        case Style::origin:
            return std::vector<Scalar>(n, Scalar::zero(b));
        case Style::diagonal_real: {
            if (!radius.is_real() || radius.sign_real() <= 0)
                throw DomainError("diagonal center radius R must be real and positive");
            Scalar R = radius.backend() == b ? radius : radius.to_backend(b);
            return std::vector<Scalar>(n, R);
        }
        case Style::explicit_point: {
            if (point.size() != n)
                throw DimensionMismatch("explicit center dimension differs from variable count");
            std::vector<Scalar> out;
            out.reserve(n);
            for (const Scalar& c : point) out.push_back(c.backend() == b ? c : c.to_backend(b));
            return out;
        }
    }
    throw DomainError("invalid center style");
}

std::string CenterSpec::str() const {
    switch (style) {
        case Style::origin: return "origin";
        case Style::diagonal_real: return "diagonal-real(" + radius.str() + ")";
        case Style::explicit_point: {
            std::string out = "(";
            for (std::size_t i = 0; i < point.size(); ++i) {
                if (i) out += ",";
                out += point[i].str();
            }
            return out + ")";
        }
    }
    return "?";
}

namespace {

MultiIndex unit(std::size_t n, std::size_t i, unsigned e) {
    std::vector<unsigned> v(n, 0u);
    v[i] = e;
    return MultiIndex(std::move(v));
}

BidegreeSeries expand_normsq(const std::vector<Scalar>& p, std::size_t n, int order,
                             const Backend& b) {
    BidegreeSeries s(b, n, order);
    MultiIndex zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.add_term(zero, zero, p[i].norm2());
        s.add_term(unit(n, i, 1), zero, p[i].conj());
        s.add_term(zero, unit(n, i, 1), p[i]);
        s.add_term(unit(n, i, 1), unit(n, i, 1), Scalar::one(b));
    }
    return s;
}

Scalar decay_exponent(const ParamBinding& params, const std::string& name, const Backend& b) {
    Scalar alpha = params.require(name);
    if (!alpha.is_real() || alpha.sign_real() <= 0)
        throw DomainError("decay exponent '" + name + "' must be real and positive");
    if (b.is_exact() && !alpha.is_integer())
        throw BackendMismatch("exact backend requires an integer decay exponent (got " +
                              alpha.str() + "); use the float backend");
    return alpha;
}

void check_decay_center(const std::vector<Scalar>& p, const Scalar& alpha) {
    for (const Scalar& c : p) {
        if (c.is_zero())
            throw DomainError("decay atoms require a nonzero re-centering radius");
        if (!alpha.is_integer() && c.sign_real() <= 0)
            throw DomainError(
                "non-integer decay exponents need center coordinates with positive real part");
    }
}

// sum_i (z_i + p_i)^{-alpha} (conj(z_i) + conj(p_i))^{-alpha}, expanded
// per variable as a product of two binomial series. The coefficient of
// z_i^j conj(z_i)^k is C_j C_k p_i^{-alpha-j} conj(p_i)^{-alpha-k}.
// Each symmetric pair is computed once so Hermitian symmetry is exact
// on both backends.
BidegreeSeries expand_sepdecay(const Scalar& alpha, const std::vector<Scalar>& p, std::size_t n,
                               int order, const Backend& b) {
    check_decay_center(p, alpha);
    UnivariateTaylor C = UnivariateTaylor::binomial(-alpha, order);
    BidegreeSeries s(b, n, order);
    MultiIndex zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> q;  // q[t] = p_i^{-alpha-t}
        q.reserve(static_cast<std::size_t>(order) + 1);
        q.push_back(complex_pow(p[i], -alpha));
        for (int t = 1; t <= order; ++t) q.push_back(q.back() / p[i]);

        for (int j = 0; j <= order; ++j) {
            for (int k = j; j + k <= order; ++k) {
                Scalar v;
                if (j == k) {
                    v = C.coeff(j) * C.coeff(j) * q[static_cast<std::size_t>(j)].norm2();
                } else {
                    v = C.coeff(j) * C.coeff(k) * q[static_cast<std::size_t>(j)] *
                        q[static_cast<std::size_t>(k)].conj();
                }
                s.add_term(unit(n, i, static_cast<unsigned>(j)),
                           unit(n, i, static_cast<unsigned>(k)), v);
                if (j != k)
                    s.add_term(unit(n, i, static_cast<unsigned>(k)),
                               unit(n, i, static_cast<unsigned>(j)), v.conj());
            }
        }
    }
    return s;
}

// (sum_i (z_i + p_i)(conj(z_i) + conj(p_i)))^{-alpha} via the binomial
// series in u = (border + mixed terms)/|p|^2.
BidegreeSeries expand_raddecay(const Scalar& alpha, const std::vector<Scalar>& p, std::size_t n,
                               int order, const Backend& b) {
    check_decay_center(p, alpha);
    Scalar p2 = Scalar::zero(b);
    for (const Scalar& c : p) p2 = p2 + c.norm2();
    if (p2.is_zero()) throw DomainError("decay atoms require a nonzero re-centering radius");

    BidegreeSeries u(b, n, order);
    MultiIndex zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        u.add_term(unit(n, i, 1), zero, p[i].conj() / p2);
        u.add_term(zero, unit(n, i, 1), p[i] / p2);
        u.add_term(unit(n, i, 1), unit(n, i, 1), Scalar::one(b) / p2);
    }
    UnivariateTaylor C = UnivariateTaylor::binomial(-alpha, order);
    return compose_analytic(C, u).scale(complex_pow(p2, -alpha));
}

struct AtomExpander {
    const ParamBinding& params;
    const std::vector<Scalar>& p;
    const CenterSpec& center;
    std::size_t n;
    int order;
    const Backend& b;

    BidegreeSeries operator()(const AtomNormSq&) const { return expand_normsq(p, n, order, b); }
    BidegreeSeries operator()(const AtomSepDecay& d) const {
        return expand_sepdecay(decay_exponent(params, d.alpha_param, b), p, n, order, b);
    }
    BidegreeSeries operator()(const AtomRadDecay& d) const {
        return expand_raddecay(decay_exponent(params, d.alpha_param, b), p, n, order, b);
    }
    BidegreeSeries operator()(const AtomTaubNutSlice& d) const {
        if (n != 1)
            throw DimensionMismatch("taubnut_slice is the one-variable restriction (n = 1)");
        if (!center.is_origin())
            throw DomainError("taubnut_slice expands around the origin only");
        return taubnut_slice_series(params.require(d.m_param), order);
    }
    BidegreeSeries operator()(const AtomGroup& g) const;
};

BidegreeSeries expand_expr(const PotentialExpr& expr, const AtomExpander& ctx) {
    BidegreeSeries acc(ctx.b, ctx.n, ctx.order);
    for (const PotentialTerm& t : expr.terms) {
        BidegreeSeries s = std::visit(ctx, t.atom);
        Scalar factor = Scalar::one(ctx.b);
        if (t.coef) {
            if (const auto* q = std::get_if<mpq_class>(&t.coef->value))
                factor = Scalar::rational(*q, ctx.b);
            else
                factor = ctx.params.require(std::get<std::string>(t.coef->value));
        }
        if (t.negated) factor = -factor;
        acc = acc.add(s.scale(factor));
    }
    return acc;
}

BidegreeSeries AtomExpander::operator()(const AtomGroup& g) const {
    return expand_expr(*g.inner, *this);
}

}  // namespace

BidegreeSeries expand_at_center(const PotentialExpr& expr, const ParamBinding& params,
                                const CenterSpec& center, std::size_t nvars, int order,
                                const Backend& backend) {
    if (order < 2) throw TruncationError("expansion order must be at least 2");
    for (const std::string& name : collect_parameters(expr)) params.require(name);

    std::vector<Scalar> p = center.coordinates(nvars, backend);
    AtomExpander ctx{params, p, center, nvars, order, backend};
    return expand_expr(expr, ctx);
}

BidegreeSeries taubnut_slice_series(const Scalar& m, int order) {
    if (!m.is_real() || m.sign_real() < 0)
        throw DomainError("taubnut_slice parameter m must be real and nonnegative");
    if (order % 2 != 0) throw DomainError("taubnut_slice needs an even truncation order");
    if (order < 4) throw TruncationError("taubnut_slice needs order >= 4");

    Backend b = m.backend();
    int half = order / 2;

    // s(t) = t e^{2mt}: s_k = (2m)^{k-1} / (k-1)!.
    UnivariateTaylor s(b, half);
    Scalar two_m = Scalar::integer(2, b) * m;
    Scalar c = Scalar::one(b);
    s.set_coeff(1, c);
    for (int k = 2; k <= half; ++k) {
        c = c * two_m / Scalar::integer(k - 1, b);
        s.set_coeff(k, c);
    }

    UnivariateTaylor g = s.reversion();           // t as a series in s = |z|^2
    UnivariateTaylor phi = g.add(g.mul(g).scale(m));  // t + m t^2

    BidegreeSeries out(b, 1, order);
    for (int k = 1; k <= half; ++k) {
        unsigned uk = static_cast<unsigned>(k);
        out.add_term(MultiIndex(std::vector<unsigned>{uk}), MultiIndex(std::vector<unsigned>{uk}),
                     phi.coeff(k));
    }
    return out;
}

Scalar ale_mass(const ParamBinding& params) { return params.require("a"); }

}  // namespace calabi
