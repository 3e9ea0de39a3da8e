#include "calabi/bigfloat.hpp"

#include <utility>

#include "calabi/errors.hpp"

namespace calabi {

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_long(long v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rational(const mpq_class& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t prec) {
    if (text.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw ParseError("invalid rational literal '" + text + "'", 0);
        if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
        q.canonicalize();
        return from_rational(q, prec);
    }
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("invalid numeric literal '" + text + "'", 0);
    return r;
}

static mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.get(), v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.get(), v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    BigFloat r(max_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_long(long k) const {
    if (is_zero() && k < 0) throw DomainError("zero raised to a negative power");
    BigFloat r(precision());
    mpfr_pow_si(r.v_, v_, k, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow(const BigFloat& base, const BigFloat& expo) {
    if (base.sgn() <= 0) throw DomainError("pow requires a positive base");
    BigFloat r(max_prec(base, expo));
    mpfr_pow(r.v_, base.v_, expo.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log(const BigFloat& x) {
    if (x.sgn() <= 0) throw DomainError("log requires a positive argument");
    BigFloat r(x.precision());
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_cos(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sin(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sin(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(max_prec(y, x));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

long BigFloat::to_long() const {
    if (!is_integer() || !mpfr_fits_slong_p(v_, MPFR_RNDN))
        throw DomainError("value is not a small integer");
    return mpfr_get_si(v_, MPFR_RNDN);
}

std::string BigFloat::str() const {
    if (mpfr_zero_p(v_)) return "0";
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";

    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    // Trailing zeros carry no value information; strip them.
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

    // mpfr_get_str yields value = 0.digits * 10^e.
    std::string out = neg ? "-" : "";
    out += digits.substr(0, 1);
    if (digits.size() > 1) {
        out += '.';
        out += digits.substr(1);
    }
    long ex = static_cast<long>(e) - 1;
    if (ex != 0) out += "e" + std::to_string(ex);
    return out;
}

}  // namespace calabi
