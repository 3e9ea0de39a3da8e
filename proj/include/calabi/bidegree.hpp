#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "calabi/multi_index.hpp"
#include "calabi/scalar.hpp"
#include "calabi/taylor.hpp"

namespace calabi {

// Truncated power series in z and conj(z) jointly: the coefficient at
// key (m_j, m_k) multiplies z^{m_j} * conj(z)^{m_k}. Terms with
// |m_j| + |m_k| > order are dropped; zero coefficients are never stored,
// so equality is structural. Values are immutable once built up.
class BidegreeSeries {
public:
    using Key = std::pair<MultiIndex, MultiIndex>;
    using TermMap = std::map<Key, Scalar>;

    BidegreeSeries(const Backend& b, std::size_t nvars, int order);

    std::size_t vars() const { return nvars_; }
    int order() const { return order_; }
    Backend backend() const { return backend_; }
    const TermMap& terms() const { return terms_; }

    // Accumulates into the (m_j, m_k) slot; erases the slot when the sum
    // vanishes. Terms beyond the truncation order raise TruncationError.
    void add_term(const MultiIndex& mj, const MultiIndex& mk, const Scalar& v);

    // Stored coefficient or an exact zero; queries past the truncation
    // order raise TruncationError ("unknown", not "zero").
    Scalar coefficient(const MultiIndex& mj, const MultiIndex& mk) const;

    BidegreeSeries add(const BidegreeSeries& o) const;
    BidegreeSeries mul(const BidegreeSeries& o) const;
    BidegreeSeries scale(const Scalar& c) const;
    BidegreeSeries conjugate() const;

    // Same terms, truncated to a smaller order. Raising the order would
    // fabricate unknown coefficients and is refused.
    BidegreeSeries truncate(int new_order) const;

    // Round every coefficient to the floating backend at `bits`.
    BidegreeSeries to_float(mpfr_prec_t bits) const;

    // coefficient(m_j, m_k) == conj(coefficient(m_k, m_j)) for every
    // stored term, within |.| <= tol componentwise (tol = exact 0 means
    // exact equality).
    bool is_hermitian(const Scalar& tol) const;
    bool is_hermitian() const { return is_hermitian(Scalar::zero(backend_)); }

    // No term has m_j = 0 or m_k = 0 (the constant term included).
    bool has_zero_border() const;

    // Largest |coefficient|^2 over stored terms (real scalar; zero for
    // the empty series).
    Scalar max_norm2() const;

    // Sum over terms of a_{jk} z^{m_j} conj(w)^{m_k}.
    Scalar evaluate_polarized(std::span<const Scalar> z, std::span<const Scalar> w) const;

    bool operator==(const BidegreeSeries& o) const;

private:
    Backend backend_;
    std::size_t nvars_;
    int order_;
    TermMap terms_;

    void check_compatible(const BidegreeSeries& o) const;
};

// f(S) truncated to S.order, by Horner evaluation over series
// arithmetic. S must have a zero constant term and f.order >= S.order.
BidegreeSeries compose_analytic(const UnivariateTaylor& f, const BidegreeSeries& S);

// Calabi's two-point function built from polarized evaluations:
//   D(z, w) = E(z,z) + E(w,w) - E(z,w) - E(w,z),
// where E is S.evaluate_polarized. Real and symmetric for Hermitian S.
Scalar diastasis_value(const BidegreeSeries& S, std::span<const Scalar> z,
                       std::span<const Scalar> w);

}  // namespace calabi
