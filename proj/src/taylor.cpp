#include "calabi/taylor.hpp"

#include "calabi/errors.hpp"

namespace calabi {

UnivariateTaylor::UnivariateTaylor(const Backend& b, int order)
    : backend_(b), order_(order) {
    if (order < 0) throw TruncationError("negative truncation order");
    c_.assign(static_cast<std::size_t>(order) + 1, Scalar::zero(b));
}

UnivariateTaylor UnivariateTaylor::identity(const Backend& b, int order) {
    UnivariateTaylor f(b, order);
    if (order >= 1) f.c_[1] = Scalar::one(b);
    return f;
}

UnivariateTaylor UnivariateTaylor::binomial(const Scalar& beta, int order) {
    Backend b = beta.backend();
    UnivariateTaylor f(b, order);
    Scalar c = Scalar::one(b);
    f.c_[0] = c;
    for (int k = 1; k <= order; ++k) {
        c = c * (beta - Scalar::integer(k - 1, b)) / Scalar::integer(k, b);
        f.c_[static_cast<std::size_t>(k)] = c;
    }
    return f;
}

UnivariateTaylor UnivariateTaylor::exponential(const Backend& b, int order) {
    UnivariateTaylor f(b, order);
    Scalar c = Scalar::one(b);
    f.c_[0] = c;
    for (int k = 1; k <= order; ++k) {
        c = c / Scalar::integer(k, b);
        f.c_[static_cast<std::size_t>(k)] = c;
    }
    return f;
}

UnivariateTaylor UnivariateTaylor::expm1_over(const Scalar& b, int order) {
    if (b.is_zero()) throw DomainError("expm1_over requires b != 0");
    Backend bk = b.backend();
    UnivariateTaylor f(bk, order);
    if (order >= 1) {
        Scalar c = Scalar::one(bk);  // b^{k-1}/k! at k = 1
        f.c_[1] = c;
        for (int k = 2; k <= order; ++k) {
            c = c * b / Scalar::integer(k, bk);
            f.c_[static_cast<std::size_t>(k)] = c;
        }
    }
    return f;
}

const Scalar& UnivariateTaylor::coeff(int k) const {
    if (k < 0 || k > order_) throw TruncationError("coefficient index beyond truncation order");
    return c_[static_cast<std::size_t>(k)];
}

void UnivariateTaylor::set_coeff(int k, const Scalar& v) {
    if (k < 0 || k > order_) throw TruncationError("coefficient index beyond truncation order");
    if (v.backend() != backend_) throw BackendMismatch("coefficient backend differs from series");
    c_[static_cast<std::size_t>(k)] = v;
}

void UnivariateTaylor::check_compatible(const UnivariateTaylor& o) const {
    if (backend_ != o.backend_) throw BackendMismatch("series backends differ");
    if (order_ != o.order_) throw TruncationError("series truncation orders differ");
}

UnivariateTaylor UnivariateTaylor::add(const UnivariateTaylor& o) const {
    check_compatible(o);
    UnivariateTaylor r(backend_, order_);
    for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

UnivariateTaylor UnivariateTaylor::sub(const UnivariateTaylor& o) const {
    check_compatible(o);
    UnivariateTaylor r(backend_, order_);
    for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

UnivariateTaylor UnivariateTaylor::mul(const UnivariateTaylor& o) const {
    check_compatible(o);
    UnivariateTaylor r(backend_, order_);
    for (int i = 0; i <= order_; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    return r;
}

UnivariateTaylor UnivariateTaylor::scale(const Scalar& s) const {
    if (s.backend() != backend_) throw BackendMismatch("scale factor backend differs");
    UnivariateTaylor r(backend_, order_);
    for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] * s;
    return r;
}

UnivariateTaylor UnivariateTaylor::compose(const UnivariateTaylor& inner) const {
    if (backend_ != inner.backend_) throw BackendMismatch("series backends differ");
    if (!inner.coeff(0).is_zero())
        throw DomainError("composition requires a zero constant term in the inner series");
    int n = inner.order_;
    if (order_ < n) throw TruncationError("outer series order too small for composition");
    // Horner over truncated series.
    UnivariateTaylor r(backend_, n);
    r.c_[0] = c_[static_cast<std::size_t>(n)];
    for (int k = n - 1; k >= 0; --k) {
        r = r.mul(inner);
        r.c_[0] = r.c_[0] + c_[static_cast<std::size_t>(k)];
    }
    return r;
}

UnivariateTaylor UnivariateTaylor::reversion() const {
    if (!coeff(0).is_zero()) throw DomainError("reversion requires a zero constant term");
    if (order_ < 1 || coeff(1).is_zero())
        throw DomainError("reversion requires a nonzero linear coefficient");
    const Scalar& f1 = coeff(1);
    UnivariateTaylor g(backend_, order_);
    g.c_[1] = Scalar::one(backend_) / f1;
    // Solve [s^k] f(g(s)) = 0 degree by degree; the unknown g_k enters
    // linearly through f1.
    for (int k = 2; k <= order_; ++k) {
        UnivariateTaylor h = compose(g);
        g.c_[static_cast<std::size_t>(k)] = -h.coeff(k) / f1;
    }
    return g;
}

bool UnivariateTaylor::operator==(const UnivariateTaylor& o) const {
    if (backend_ != o.backend_ || order_ != o.order_) return false;
    for (int k = 0; k <= order_; ++k)
        if (!(c_[k] == o.c_[k])) return false;
    return true;
}

}  // namespace calabi
