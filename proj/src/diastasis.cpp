#include "calabi/diastasis.hpp"

#include "calabi/errors.hpp"

namespace calabi {

DiastasisExpansion diastasis(const BidegreeSeries& phi) {
    BidegreeSeries out(phi.backend(), phi.vars(), phi.order());
    for (const auto& [key, v] : phi.terms()) {
        if (key.first.is_constant() || key.second.is_constant()) continue;
        out.add_term(key.first, key.second, v);
    }
    return DiastasisExpansion{std::move(out)};
}

AmbientSpace AmbientSpace::space_form(const Scalar& b) {
    if (b.is_zero()) throw DomainError("space form curvature parameter b must be nonzero");
    if (!b.is_real()) throw DomainError("space form curvature parameter b must be real");
    AmbientSpace a;
    a.kind = Kind::space_form;
    a.b = b;
    return a;
}

std::string AmbientSpace::str() const {
    if (is_flat()) return "flat";
    if (b == Scalar::one(b.backend())) return "projective";
    if (b == -Scalar::one(b.backend())) return "hyperbolic";
    return "b=" + b.str();
}

BidegreeSeries ambient_series(const DiastasisExpansion& D, const AmbientSpace& ambient) {
    if (ambient.is_flat()) return D.series;
    if (ambient.b.backend() != D.series.backend())
        throw BackendMismatch("curvature parameter backend differs from series");
    UnivariateTaylor f = UnivariateTaylor::expm1_over(ambient.b, D.series.order());
    return compose_analytic(f, D.series);
}

}  // namespace calabi
