#pragma once

#include <mpfr.h>
#include <algorithm>
#include <stdexcept>
#include <string>
#include "berndt/rational.hpp"

namespace berndt {

// Explicit precision context: decimal digits plus guard digits.
// Guard default follows the 10 + ceil(log10(op count)) rule for the
// expression sizes that occur here (a few thousand operations).
struct Prec {
    long digits;
    long guard = 14;
    long bits() const {
        long d = digits + guard;
        return (long)(d * 3.3219280948873623) + 16;
    }
};

class Real {
public:
    explicit Real(long bits = 128) : bits_(bits) {
        mpfr_init2(v_, bits_);
        mpfr_set_zero(v_, 1);
    }
    Real(long n, long bits) : bits_(bits) {
        mpfr_init2(v_, bits_);
        mpfr_set_si(v_, n, MPFR_RNDN);
    }
    Real(const Rational& q, long bits) : bits_(bits) {
        mpfr_init2(v_, bits_);
        mpfr_set_q(v_, q.raw(), MPFR_RNDN);
    }
    Real(const std::string& s, long bits) : bits_(bits) {
        mpfr_init2(v_, bits_);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0 && s.empty())
            throw std::invalid_argument("Real: bad literal");
    }
    Real(const Real& o) : bits_(o.bits_) {
        mpfr_init2(v_, bits_);
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept : bits_(o.bits_) {
        mpfr_init2(v_, bits_);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            if (bits_ != o.bits_) { mpfr_set_prec(v_, o.bits_); bits_ = o.bits_; }
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) { mpfr_swap(v_, o.v_); std::swap(bits_, o.bits_); }
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    long bits() const { return bits_; }

#define BERNDT_REAL_BINOP(op, fn)                                      \
    friend Real operator op(const Real& a, const Real& b) {            \
        Real r(std::max(a.bits_, b.bits_));                            \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                               \
        return r;                                                      \
    }
    BERNDT_REAL_BINOP(+, mpfr_add)
    BERNDT_REAL_BINOP(-, mpfr_sub)
    BERNDT_REAL_BINOP(*, mpfr_mul)
    BERNDT_REAL_BINOP(/, mpfr_div)
#undef BERNDT_REAL_BINOP

    friend Real operator*(const Real& a, long b) {
        Real r(a.bits_); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) {
        Real r(a.bits_); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.bits_); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator+(const Real& a, long b) {
        Real r(a.bits_); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend Real operator-(const Real& a, long b) {
        Real r(a.bits_); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend Real operator-(long a, const Real& b) {
        Real r(b.bits_); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r;
    }
    Real operator-() const { Real r(bits_); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    Real& operator+=(const Real& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

#define BERNDT_REAL_UNFN(name, fn)                                     \
    friend Real name(const Real& a) {                                  \
        Real r(a.bits_);                                               \
        fn(r.v_, a.v_, MPFR_RNDN);                                     \
        return r;                                                      \
    }
    BERNDT_REAL_UNFN(sqrt, mpfr_sqrt)
    BERNDT_REAL_UNFN(exp, mpfr_exp)
    BERNDT_REAL_UNFN(expm1, mpfr_expm1)
    BERNDT_REAL_UNFN(log, mpfr_log)
    BERNDT_REAL_UNFN(sin, mpfr_sin)
    BERNDT_REAL_UNFN(cos, mpfr_cos)
    BERNDT_REAL_UNFN(tan, mpfr_tan)
    BERNDT_REAL_UNFN(asin, mpfr_asin)
    BERNDT_REAL_UNFN(atan, mpfr_atan)
    BERNDT_REAL_UNFN(sinh, mpfr_sinh)
    BERNDT_REAL_UNFN(cosh, mpfr_cosh)
    BERNDT_REAL_UNFN(tanh, mpfr_tanh)
    BERNDT_REAL_UNFN(abs, mpfr_abs)
    BERNDT_REAL_UNFN(floor, mpfr_rint_floor)
#undef BERNDT_REAL_UNFN

    friend Real pow(const Real& a, const Real& b) {
        Real r(std::max(a.bits_, b.bits_));
        mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real pow(const Real& a, long e) {
        Real r(a.bits_);
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend Real atan2(const Real& y, const Real& x) {
        Real r(std::max(y.bits_, x.bits_));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    // Upper incomplete gamma.
    friend Real gamma_inc(const Real& a, const Real& x) {
        Real r(std::max(a.bits_, x.bits_));
        mpfr_gamma_inc(r.v_, a.v_, x.v_, MPFR_RNDN);
        return r;
    }

    static Real pi(long bits) {
        Real r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    // 10^e at this value's precision.
    static Real pow10(long e, long bits) {
        Real r(bits);
        mpfr_ui_pow_ui(r.v_, 10, (unsigned long)(e < 0 ? -e : e), MPFR_RNDN);
        if (e < 0) mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
        return r;
    }

    std::string str(long dec_digits) const {
        if (!is_finite()) return "nan";
        char fmt[32];
        snprintf(fmt, sizeof(fmt), "%%.%ldRg", dec_digits);
        char buf[256];
        if (dec_digits + 32 < (long)sizeof(buf)) {
            mpfr_snprintf(buf, sizeof(buf), fmt, v_);
            return std::string(buf);
        }
        std::string big(dec_digits + 32, '\0');
        mpfr_snprintf(big.data(), big.size(), fmt, v_);
        return std::string(big.c_str());
    }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

private:
    mpfr_t v_;
    long bits_;
};

// Namespace-scope redeclarations so qualified berndt::pow calls resolve even
// where a member named pow shadows unqualified lookup.
Real pow(const Real& a, const Real& b);
Real pow(const Real& a, long e);

// Rectangular complex value; only the operations the Barnes lattice and
// Laplace integrand need.
struct Complex {
    Real re, im;

    Complex(long bits = 128) : re(bits), im(bits) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Real& a, const Complex& b) {
        return {a * b.re, a * b.im};
    }
    Complex conj() const { return {re, -im}; }
    Real norm2() const { return re * re + im * im; }
    Real modulus() const { return sqrt(norm2()); }

    Complex inverse() const {
        Real n = norm2();
        if (n.is_zero()) throw std::domain_error("Complex: inverse of zero");
        return {re / n, -(im / n)};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        return a * b.inverse();
    }

    // Principal branch z^(-s) for real s; requires z != 0 and, in all uses
    // here, Re(z) > 0 so the branch cut is never approached.
    Complex pow_negs(const Real& s) const {
        Real r = modulus();
        Real theta = atan2(im, re);
        Real lr = log(r);
        Real mag = exp(-(s * lr));
        Real ang = -(s * theta);
        return {mag * cos(ang), mag * sin(ang)};
    }
    // exp(z)
    Complex cexp() const {
        Real m = exp(re);
        return {m * cos(im), m * sin(im)};
    }
};

} // namespace berndt
