#include "calabi/bidegree.hpp"

#include "calabi/errors.hpp"

namespace calabi {

BidegreeSeries::BidegreeSeries(const Backend& b, std::size_t nvars, int order)
    : backend_(b), nvars_(nvars), order_(order) {
    if (nvars == 0) throw DimensionMismatch("need at least one variable");
    if (order < 0) throw TruncationError("negative truncation order");
}

void BidegreeSeries::add_term(const MultiIndex& mj, const MultiIndex& mk, const Scalar& v) {
    if (mj.vars() != nvars_ || mk.vars() != nvars_)
        throw DimensionMismatch("multi-index variable count differs from series");
    if (static_cast<int>(mj.degree() + mk.degree()) > order_)
        throw TruncationError("term beyond truncation order");
    if (v.backend() != backend_) throw BackendMismatch("coefficient backend differs from series");
    if (v.is_zero()) return;
    Key key{mj, mk};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), v);
    } else {
        it->second = it->second + v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar BidegreeSeries::coefficient(const MultiIndex& mj, const MultiIndex& mk) const {
    if (mj.vars() != nvars_ || mk.vars() != nvars_)
        throw DimensionMismatch("multi-index variable count differs from series");
    if (static_cast<int>(mj.degree() + mk.degree()) > order_)
        throw TruncationError("coefficient query beyond truncation order");
    auto it = terms_.find(Key{mj, mk});
    if (it == terms_.end()) return Scalar::zero(backend_);
    return it->second;
}

void BidegreeSeries::check_compatible(const BidegreeSeries& o) const {
    if (backend_ != o.backend_) throw BackendMismatch("series backends differ");
    if (nvars_ != o.nvars_) throw DimensionMismatch("series variable counts differ");
    if (order_ != o.order_) throw TruncationError("series truncation orders differ");
}

BidegreeSeries BidegreeSeries::add(const BidegreeSeries& o) const {
    check_compatible(o);
    BidegreeSeries r(*this);
    for (const auto& [key, v] : o.terms_) r.add_term(key.first, key.second, v);
    return r;
}

BidegreeSeries BidegreeSeries::mul(const BidegreeSeries& o) const {
    check_compatible(o);
    BidegreeSeries r(backend_, nvars_, order_);
    for (const auto& [ka, va] : terms_) {
        unsigned da = ka.first.degree() + ka.second.degree();
        for (const auto& [kb, vb] : o.terms_) {
            unsigned db = kb.first.degree() + kb.second.degree();
            if (static_cast<int>(da + db) > order_) continue;
            r.add_term(ka.first.plus(kb.first), ka.second.plus(kb.second), va * vb);
        }
    }
    return r;
}

BidegreeSeries BidegreeSeries::scale(const Scalar& c) const {
    if (c.backend() != backend_) throw BackendMismatch("scale factor backend differs");
    BidegreeSeries r(backend_, nvars_, order_);
    if (c.is_zero()) return r;
    for (const auto& [key, v] : terms_) r.add_term(key.first, key.second, v * c);
    return r;
}

BidegreeSeries BidegreeSeries::conjugate() const {
    BidegreeSeries r(backend_, nvars_, order_);
    for (const auto& [key, v] : terms_) r.add_term(key.second, key.first, v.conj());
    return r;
}

BidegreeSeries BidegreeSeries::truncate(int new_order) const {
    if (new_order > order_)
        throw TruncationError("cannot raise a truncation order (coefficients unknown)");
    BidegreeSeries r(backend_, nvars_, new_order);
    for (const auto& [key, v] : terms_) {
        if (static_cast<int>(key.first.degree() + key.second.degree()) <= new_order)
            r.add_term(key.first, key.second, v);
    }
    return r;
}

BidegreeSeries BidegreeSeries::to_float(mpfr_prec_t bits) const {
    Backend fb = Backend::floating(bits);
    BidegreeSeries r(fb, nvars_, order_);
    for (const auto& [key, v] : terms_) r.add_term(key.first, key.second, v.to_backend(fb));
    return r;
}

bool BidegreeSeries::is_hermitian(const Scalar& tol) const {
    Scalar tol2 = tol * tol;
    for (const auto& [key, v] : terms_) {
        auto it = terms_.find(Key{key.second, key.first});
        Scalar mirror = it == terms_.end() ? Scalar::zero(backend_) : it->second;
        Scalar diff = v - mirror.conj();
        if (diff.is_zero()) continue;
        if (tol.is_zero()) return false;
        if (Scalar::cmp_real(diff.norm2(), tol2) > 0) return false;
    }
    return true;
}

bool BidegreeSeries::has_zero_border() const {
    for (const auto& [key, v] : terms_) {
        (void)v;
        if (key.first.is_constant() || key.second.is_constant()) return false;
    }
    return true;
}

Scalar BidegreeSeries::max_norm2() const {
    Scalar best = Scalar::zero(backend_);
    for (const auto& [key, v] : terms_) {
        (void)key;
        Scalar n = v.norm2();
        if (Scalar::cmp_real(n, best) > 0) best = n;
    }
    return best;
}

namespace {

Scalar power_product(const MultiIndex& m, std::span<const Scalar> pt, const Backend& b) {
    Scalar acc = Scalar::one(b);
    for (std::size_t i = 0; i < m.vars(); ++i)
        if (m[i] > 0) acc = acc * pt[i].pow_long(static_cast<long>(m[i]));
    return acc;
}

}  // namespace

Scalar BidegreeSeries::evaluate_polarized(std::span<const Scalar> z,
                                          std::span<const Scalar> w) const {
    if (z.size() != nvars_ || w.size() != nvars_)
        throw DimensionMismatch("evaluation point dimension differs from series");
    for (const Scalar& c : z)
        if (c.backend() != backend_) throw BackendMismatch("evaluation point backend differs");
    for (const Scalar& c : w)
        if (c.backend() != backend_) throw BackendMismatch("evaluation point backend differs");

    std::vector<Scalar> wbar;
    wbar.reserve(nvars_);
    for (const Scalar& c : w) wbar.push_back(c.conj());

    Scalar acc = Scalar::zero(backend_);
    for (const auto& [key, v] : terms_) {
        acc = acc + v * power_product(key.first, z, backend_) *
                        power_product(key.second, wbar, backend_);
    }
    return acc;
}

bool BidegreeSeries::operator==(const BidegreeSeries& o) const {
    if (backend_ != o.backend_ || nvars_ != o.nvars_ || order_ != o.order_) return false;
    return terms_ == o.terms_;
}

BidegreeSeries compose_analytic(const UnivariateTaylor& f, const BidegreeSeries& S) {
    if (f.backend() != S.backend()) throw BackendMismatch("series backends differ");
    MultiIndex zero(S.vars());
    {
        auto it = S.terms().find(BidegreeSeries::Key{zero, zero});
        if (it != S.terms().end())
            throw DomainError("composition requires a zero constant term in the series");
    }
    int n = S.order();
    if (f.order() < n) throw TruncationError("analytic coefficient series shorter than target order");

    BidegreeSeries r(S.backend(), S.vars(), n);
    r.add_term(zero, zero, f.coeff(n));
    for (int k = n - 1; k >= 0; --k) {
        r = r.mul(S);
        r.add_term(zero, zero, f.coeff(k));
    }
    return r;
}

Scalar diastasis_value(const BidegreeSeries& S, std::span<const Scalar> z,
                       std::span<const Scalar> w) {
    return S.evaluate_polarized(z, z) + S.evaluate_polarized(w, w) -
           S.evaluate_polarized(z, w) - S.evaluate_polarized(w, z);
}

}  // namespace calabi
