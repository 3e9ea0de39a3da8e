#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "calabi/bidegree.hpp"
#include "calabi/potential.hpp"
#include "calabi/scalar.hpp"

namespace calabi {

// Real parameter values, all on one backend. Typical names: a (decay /
// mass coefficient), alpha (decay rate > 0), m (Taub-NUT parameter
// >= 0), R (center radius > 0).
class ParamBinding {
public:
    ParamBinding() = default;

    void bind(const std::string& name, const Scalar& value);  // value must be real
    std::optional<Scalar> find(const std::string& name) const;
    Scalar require(const std::string& name) const;  // throws DomainError when unbound
    bool has(const std::string& name) const { return values_.count(name) > 0; }
    const std::map<std::string, Scalar>& values() const { return values_; }

    // "a=-1,alpha=1,R=10" with values in decimal or p/q form.
    static ParamBinding parse(const std::string& text, const Backend& b);

private:
    std::map<std::string, Scalar> values_;
};

// Where to re-center the expansion. diagonal_real denotes the point
// (R, R, ..., R) with R real positive.
struct CenterSpec {
    enum class Style { origin, diagonal_real, explicit_point };

    Style style = Style::origin;
    Scalar radius;               // diagonal_real only
    std::vector<Scalar> point;   // explicit_point only

    static CenterSpec origin() { return {}; }
    static CenterSpec diagonal(const Scalar& R);
    static CenterSpec explicit_point(std::vector<Scalar> p);

    bool is_origin() const;
    // Materialize the center coordinates for n variables.
    std::vector<Scalar> coordinates(std::size_t n, const Backend& b) const;
    std::string str() const;
};

// Truncated expansion of Phi(z_p + p, conj(z_p) + conj(p)) in
// (z_p, conj(z_p)). Decay atoms expand per the binomial series around
// the center; the asymptotic error-term tail is modeled as identically
// zero. Requires order >= 2 and every referenced parameter bound.
BidegreeSeries expand_at_center(const PotentialExpr& expr, const ParamBinding& params,
                                const CenterSpec& center, std::size_t nvars, int order,
                                const Backend& backend);

// Diastasis series of the one-variable Taub-NUT slice with potential
// u^2 + m u^4, where |z|^2 = e^{2 m u^2} u^2 defines u implicitly:
// builds s = t e^{2mt}, reverts it, substitutes into t + m t^2 and
// lifts s^k to z^k conj(z)^k. The degree-4 coefficient is exactly -m.
BidegreeSeries taubnut_slice_series(const Scalar& m, int order);

// The mass of the ALE family with potential |z|^2/2 + a * decay is read
// off as the decay coefficient a.
Scalar ale_mass(const ParamBinding& params);

}  // namespace calabi
