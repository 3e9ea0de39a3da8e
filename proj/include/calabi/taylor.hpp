#pragma once

#include <vector>

#include "calabi/scalar.hpp"

namespace calabi {

// Dense truncated Taylor series in one formal variable t. coeff(k) is
// the coefficient of t^k; everything past `order` is dropped.
class UnivariateTaylor {
public:
    UnivariateTaylor(const Backend& b, int order);  // zero series

    static UnivariateTaylor identity(const Backend& b, int order);  // t
    // (1+t)^beta; coefficient k is beta(beta-1)...(beta-k+1)/k!.
    static UnivariateTaylor binomial(const Scalar& beta, int order);
    // e^t; coefficient k is 1/k!.
    static UnivariateTaylor exponential(const Backend& b, int order);
    // (e^{bt}-1)/b for b != 0; coefficient k is b^{k-1}/k!, constant 0.
    static UnivariateTaylor expm1_over(const Scalar& b, int order);

    int order() const { return order_; }
    Backend backend() const { return backend_; }
    const Scalar& coeff(int k) const;
    void set_coeff(int k, const Scalar& v);

    UnivariateTaylor add(const UnivariateTaylor& o) const;
    UnivariateTaylor sub(const UnivariateTaylor& o) const;
    UnivariateTaylor mul(const UnivariateTaylor& o) const;
    UnivariateTaylor scale(const Scalar& c) const;

    // this(inner), truncated to this->order. inner must have zero
    // constant term.
    UnivariateTaylor compose(const UnivariateTaylor& inner) const;

    // Compositional inverse g with this(g(s)) = s + O(s^{order+1}).
    // Requires coeff(0) == 0 and coeff(1) != 0.
    UnivariateTaylor reversion() const;

    bool operator==(const UnivariateTaylor& o) const;

private:
    Backend backend_;
    int order_;
    std::vector<Scalar> c_;

    void check_compatible(const UnivariateTaylor& o) const;
};

}  // namespace calabi
