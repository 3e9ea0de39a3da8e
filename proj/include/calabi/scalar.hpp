#pragma once

#include <gmpxx.h>

#include <string>

#include "calabi/bigfloat.hpp"

namespace calabi {

enum class BackendKind { exact, floating };

// Coefficient backend tag carried by every scalar and container.
// Exact values are complex rationals; floating values are complex
// big-floats at a fixed precision. Mixing backends is an error.
struct Backend {
    BackendKind kind = BackendKind::exact;
    mpfr_prec_t precision = 0;  // bits, floating only

    static Backend exact() { return {BackendKind::exact, 0}; }
    static Backend floating(mpfr_prec_t bits = BigFloat::kDefaultPrecision) {
        return {BackendKind::floating, bits};
    }
    bool is_exact() const { return kind == BackendKind::exact; }
    bool operator==(const Backend&) const = default;
    std::string str() const;  // "exact" | "float:256"
};

// A complex number over the chosen backend. Real values are the im == 0
// case; most of the library produces real scalars, but complex centers,
// Hermitian conjugation and polarized evaluation need the full field.
class Scalar {
public:
    Scalar();  // exact zero

    static Scalar zero(const Backend& b);
    static Scalar one(const Backend& b);
    static Scalar integer(long v, const Backend& b);
    static Scalar rational(const mpq_class& re, const Backend& b);
    static Scalar complex_rational(mpq_class re, mpq_class im);
    static Scalar complex_float(BigFloat re, BigFloat im);
    // Real or complex literal: "p/q", "-1.5e-3", "1/2+3/4i", "2-i", "i".
    static Scalar parse(const std::string& text, const Backend& b);

    Backend backend() const;
    bool is_exact() const { return kind_ == BackendKind::exact; }

    const mpq_class& exact_re() const;
    const mpq_class& exact_im() const;
    const BigFloat& float_re() const;
    const BigFloat& float_im() const;

    bool is_zero() const;
    bool is_real() const;     // imaginary part exactly zero
    bool is_integer() const;  // real with integral value
    long to_long() const;     // requires a small integer

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar conj() const;
    Scalar norm2() const;  // re^2 + im^2, always real
    Scalar pow_long(long k) const;

    // Exact numeric equality (same backend required).
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Compare real parts (imaginary parts ignored); backends must match.
    static int cmp_real(const Scalar& a, const Scalar& b);
    int sign_real() const;  // sign of the real part

    // Explicit conversion; exact -> floating rounds, floating -> exact
    // is refused (never silently lift rounding error into exactness).
    Scalar to_backend(const Backend& b) const;

    std::string str() const;
    double real_double() const;
    double imag_double() const;

private:
    BackendKind kind_ = BackendKind::exact;
    mpq_class qre_, qim_;
    BigFloat fre_{2}, fim_{2};  // minimal footprint while unused

    void check_same(const Scalar& o) const;
};

// base^exponent with a real exponent. Integer exponents work on both
// backends; non-integer exponents need the floating backend and a base
// with positive real part (principal branch).
Scalar complex_pow(const Scalar& base, const Scalar& exponent);

// Decimal or "p/q" text to an exact rational. "1.5e-3" -> 3/2000.
mpq_class rational_from_decimal(const std::string& text);

std::string rational_str(const mpq_class& q);

}  // namespace calabi
