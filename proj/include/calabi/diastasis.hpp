#pragma once

#include <string>

#include "calabi/bidegree.hpp"

namespace calabi {

// A potential expansion with zero border: no term has a constant
// holomorphic or antiholomorphic part. This normalization singles out
// the diastasis among the potentials for the same metric.
struct DiastasisExpansion {
    BidegreeSeries series;
};

// Strips every term with m_j = 0 or m_k = 0 (constant term included);
// mixed terms are unchanged. Expects a Hermitian input.
DiastasisExpansion diastasis(const BidegreeSeries& phi);

// Target geometry: flat space, or a space form of holomorphic sectional
// curvature 4b with b != 0. projective and hyperbolic are the b = +1
// and b = -1 conventions.
struct AmbientSpace {
    enum class Kind { flat, space_form };

    Kind kind = Kind::flat;
    Scalar b;  // space_form only

    static AmbientSpace flat() { return {}; }
    static AmbientSpace space_form(const Scalar& b);
    static AmbientSpace projective(const Backend& bk) {
        return space_form(Scalar::integer(1, bk));
    }
    static AmbientSpace hyperbolic(const Backend& bk) {
        return space_form(Scalar::integer(-1, bk));
    }

    bool is_flat() const { return kind == Kind::flat; }
    std::string str() const;  // "flat" | "projective" | "hyperbolic" | "b=..."
};

// Flat: D unchanged. Space form: (e^{bD} - 1)/b via analytic
// composition. Output keeps the zero border and zero constant term.
BidegreeSeries ambient_series(const DiastasisExpansion& D, const AmbientSpace& ambient);

}  // namespace calabi
