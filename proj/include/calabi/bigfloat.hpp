#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace calabi {

// RAII wrapper around an mpfr_t. Every value carries its own precision
// (in bits); binary operations round to the larger operand precision
// with round-to-nearest.
class BigFloat {
public:
    static constexpr mpfr_prec_t kDefaultPrecision = 256;

    explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_long(long v, mpfr_prec_t prec);
    static BigFloat from_rational(const mpq_class& q, mpfr_prec_t prec);
    // Accepts decimal ("-1.5e-3") and rational ("p/q") literals.
    static BigFloat parse(const std::string& text, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }

    BigFloat operator-() const;
    BigFloat abs() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    // Numeric comparison; NaN never occurs in library-produced values.
    static int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    bool operator==(const BigFloat& o) const { return mpfr_equal_p(v_, o.v_) != 0; }
    bool operator<(const BigFloat& o) const { return mpfr_less_p(v_, o.v_) != 0; }

    BigFloat pow_long(long k) const;  // 0^negative raises DomainError
    static BigFloat pow(const BigFloat& base, const BigFloat& expo);  // base > 0
    static BigFloat exp(const BigFloat& x);
    static BigFloat log(const BigFloat& x);  // x > 0
    static BigFloat cos(const BigFloat& x);
    static BigFloat sin(const BigFloat& x);
    static BigFloat atan2(const BigFloat& y, const BigFloat& x);
    static BigFloat pow2(long e, mpfr_prec_t prec);  // 2^e, exact

    long to_long() const;  // requires an integer value that fits
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Shortest decimal string that reads back to the same value at the
    // same precision ("1.25e-3", "-3", "0").
    std::string str() const;

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

}  // namespace calabi
