#include "calabi/scalar.hpp"

#include <cctype>
#include <utility>

#include "calabi/errors.hpp"

namespace calabi {

std::string Backend::str() const {
    if (is_exact()) return "exact";
    return "float:" + std::to_string(static_cast<long>(precision));
}

Scalar::Scalar() = default;

Scalar Scalar::zero(const Backend& b) {
    if (b.is_exact()) return Scalar();
    return complex_float(BigFloat(b.precision), BigFloat(b.precision));
}

Scalar Scalar::one(const Backend& b) { return integer(1, b); }

Scalar Scalar::integer(long v, const Backend& b) {
    if (b.is_exact()) return complex_rational(mpq_class(v), mpq_class(0));
    return complex_float(BigFloat::from_long(v, b.precision), BigFloat(b.precision));
}

Scalar Scalar::rational(const mpq_class& re, const Backend& b) {
    if (b.is_exact()) return complex_rational(re, mpq_class(0));
    return complex_float(BigFloat::from_rational(re, b.precision), BigFloat(b.precision));
}

Scalar Scalar::complex_rational(mpq_class re, mpq_class im) {
    Scalar s;
    s.kind_ = BackendKind::exact;
    s.qre_ = std::move(re);
    s.qim_ = std::move(im);
    return s;
}

Scalar Scalar::complex_float(BigFloat re, BigFloat im) {
    Scalar s;
    s.kind_ = BackendKind::floating;
    s.fre_ = std::move(re);
    s.fim_ = std::move(im);
    return s;
}

Backend Scalar::backend() const {
    if (kind_ == BackendKind::exact) return Backend::exact();
    return Backend::floating(std::max(fre_.precision(), fim_.precision()));
}

const mpq_class& Scalar::exact_re() const {
    if (!is_exact()) throw BackendMismatch("exact component requested from a float scalar");
    return qre_;
}

const mpq_class& Scalar::exact_im() const {
    if (!is_exact()) throw BackendMismatch("exact component requested from a float scalar");
    return qim_;
}

const BigFloat& Scalar::float_re() const {
    if (is_exact()) throw BackendMismatch("float component requested from an exact scalar");
    return fre_;
}

const BigFloat& Scalar::float_im() const {
    if (is_exact()) throw BackendMismatch("float component requested from an exact scalar");
    return fim_;
}

bool Scalar::is_zero() const {
    if (is_exact()) return qre_ == 0 && qim_ == 0;
    return fre_.is_zero() && fim_.is_zero();
}

bool Scalar::is_real() const {
    if (is_exact()) return qim_ == 0;
    return fim_.is_zero();
}

bool Scalar::is_integer() const {
    if (!is_real()) return false;
    if (is_exact()) return qre_.get_den() == 1;
    return fre_.is_integer();
}

long Scalar::to_long() const {
    if (!is_integer()) throw DomainError("value is not an integer");
    if (is_exact()) {
        if (!qre_.get_num().fits_slong_p()) throw DomainError("integer too large");
        return qre_.get_num().get_si();
    }
    return fre_.to_long();
}

void Scalar::check_same(const Scalar& o) const {
    if (kind_ != o.kind_)
        throw BackendMismatch("mixed exact/float arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    if (is_exact()) return complex_rational(qre_ + o.qre_, qim_ + o.qim_);
    return complex_float(fre_ + o.fre_, fim_ + o.fim_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    if (is_exact()) return complex_rational(qre_ - o.qre_, qim_ - o.qim_);
    return complex_float(fre_ - o.fre_, fim_ - o.fim_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    if (is_exact())
        return complex_rational(qre_ * o.qre_ - qim_ * o.qim_, qre_ * o.qim_ + qim_ * o.qre_);
    return complex_float(fre_ * o.fre_ - fim_ * o.fim_, fre_ * o.fim_ + fim_ * o.fre_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    if (o.is_zero()) throw DomainError("division by zero");
    if (is_exact()) {
        mpq_class den = o.qre_ * o.qre_ + o.qim_ * o.qim_;
        return complex_rational((qre_ * o.qre_ + qim_ * o.qim_) / den,
                                (qim_ * o.qre_ - qre_ * o.qim_) / den);
    }
    BigFloat den = o.fre_ * o.fre_ + o.fim_ * o.fim_;
    return complex_float((fre_ * o.fre_ + fim_ * o.fim_) / den,
                         (fim_ * o.fre_ - fre_ * o.fim_) / den);
}

Scalar Scalar::operator-() const {
    if (is_exact()) return complex_rational(-qre_, -qim_);
    return complex_float(-fre_, -fim_);
}

Scalar Scalar::conj() const {
    if (is_exact()) return complex_rational(qre_, -qim_);
    return complex_float(fre_, -fim_);
}

Scalar Scalar::norm2() const {
    if (is_exact()) return complex_rational(qre_ * qre_ + qim_ * qim_, mpq_class(0));
    return complex_float(fre_ * fre_ + fim_ * fim_, BigFloat(fre_.precision()));
}

Scalar Scalar::pow_long(long k) const {
    if (k < 0) return one(backend()) / pow_long(-k);
    Scalar acc = one(backend());
    Scalar base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    if (is_exact()) return qre_ == o.qre_ && qim_ == o.qim_;
    return fre_ == o.fre_ && fim_ == o.fim_;
}

int Scalar::cmp_real(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    if (a.is_exact()) return cmp(a.qre_, b.qre_);
    return BigFloat::cmp(a.fre_, b.fre_);
}

int Scalar::sign_real() const {
    if (is_exact()) return sgn(qre_);
    return fre_.sgn();
}

Scalar Scalar::to_backend(const Backend& b) const {
    if (b == backend()) return *this;
    if (is_exact() && !b.is_exact())
        return complex_float(BigFloat::from_rational(qre_, b.precision),
                             BigFloat::from_rational(qim_, b.precision));
    if (!is_exact() && !b.is_exact()) {
        // re-round to the requested precision
        BigFloat re(b.precision), im(b.precision);
        mpfr_set(re.get(), fre_.get(), MPFR_RNDN);
        mpfr_set(im.get(), fim_.get(), MPFR_RNDN);
        return complex_float(std::move(re), std::move(im));
    }
    throw BackendMismatch("cannot convert a float value to the exact backend");
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::string Scalar::str() const {
    auto real_part = [&]() -> std::string {
        return is_exact() ? rational_str(qre_) : fre_.str();
    };
    if (is_real()) return real_part();
    std::string im_str;
    bool im_neg;
    if (is_exact()) {
        im_neg = qim_ < 0;
        im_str = rational_str(im_neg ? mpq_class(-qim_) : qim_);
    } else {
        im_neg = fim_.sgn() < 0;
        im_str = fim_.abs().str();
    }
    return real_part() + (im_neg ? "-" : "+") + im_str + "i";
}

double Scalar::real_double() const {
    return is_exact() ? qre_.get_d() : fre_.to_double();
}

double Scalar::imag_double() const {
    return is_exact() ? qim_.get_d() : fim_.to_double();
}

mpq_class rational_from_decimal(const std::string& text) {
    if (text.empty()) throw ParseError("empty numeric literal", 0);
    if (text.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw ParseError("invalid rational literal '" + text + "'", 0);
        if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }

    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_len = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw ParseError("invalid numeric literal '" + text + "'", 0);
    long expo = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            eneg = text[i] == '-';
            ++i;
        }
        if (i >= text.size()) throw ParseError("invalid exponent in '" + text + "'", 0);
        long e = 0;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i)
            e = e * 10 + (text[i] - '0');
        expo = eneg ? -e : e;
    }
    if (i != text.size()) throw ParseError("invalid numeric literal '" + text + "'", 0);

    mpz_class mantissa(digits.empty() ? "0" : digits);
    mpq_class q(mantissa);
    long net = expo - frac_len;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    if (net >= 0)
        q *= mpq_class(scale);
    else
        q /= mpq_class(scale);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

Scalar Scalar::parse(const std::string& text, const Backend& b) {
    std::string s = text;
    // strip spaces
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty scalar literal", 0);

    auto parse_real = [&](const std::string& u) -> Scalar {
        if (b.is_exact()) return rational(rational_from_decimal(u), b);
        return complex_float(BigFloat::parse(u, b.precision), BigFloat(b.precision));
    };

    // Complex literal: find a '+'/'-' separating real and imaginary parts
    // (not at position 0 and not following 'e'/'E' or '/').
    if (t.back() == 'i' || t.back() == 'I') {
        std::string body = t.substr(0, t.size() - 1);
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            char c = body[i];
            if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E' &&
                body[i - 1] != '/') {
                split = i;
                break;
            }
        }
        std::string re_s, im_s;
        if (split == std::string::npos) {
            re_s = "0";
            im_s = body;
        } else {
            re_s = body.substr(0, split);
            im_s = body.substr(split);
        }
        if (im_s.empty() || im_s == "+") im_s = "1";
        if (im_s == "-") im_s = "-1";
        Scalar re = parse_real(re_s);
        Scalar im = parse_real(im_s);
        if (b.is_exact()) return complex_rational(re.exact_re(), im.exact_re());
        return complex_float(re.float_re(), im.float_re());
    }
    return parse_real(t);
}

Scalar complex_pow(const Scalar& base, const Scalar& exponent) {
    if (!exponent.is_real()) throw DomainError("exponent must be real");
    if (exponent.is_integer()) return base.pow_long(exponent.to_long());
    if (base.is_exact())
        throw BackendMismatch("exact backend requires integer exponents");

    const BigFloat& e = exponent.float_re();
    const BigFloat& re = base.float_re();
    const BigFloat& im = base.float_im();
    if (im.is_zero()) {
        if (re.sgn() <= 0) throw DomainError("non-integer power of a non-positive real");
        return Scalar::complex_float(BigFloat::pow(re, e), BigFloat(re.precision()));
    }
    // Principal branch, valid for Re(base) > 0.
    if (re.sgn() <= 0)
        throw DomainError("non-integer power requires positive real part");
    BigFloat r2 = re * re + im * im;
    BigFloat half = BigFloat::from_rational(mpq_class(1, 2), r2.precision());
    BigFloat lnr = BigFloat::log(r2) * half;
    BigFloat theta = BigFloat::atan2(im, re);
    BigFloat mod = BigFloat::exp(e * lnr);
    BigFloat ang = e * theta;
    return Scalar::complex_float(mod * BigFloat::cos(ang), mod * BigFloat::sin(ang));
}

}  // namespace calabi
