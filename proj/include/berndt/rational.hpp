#pragma once

#include <gmp.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace berndt {

// Exact rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); }
    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; } // mpq_set_si takes an unsigned denominator
        mpq_init(q_);
        mpq_set_si(q_, n, (unsigned long)d);
        mpq_canonicalize(q_);
    }
    explicit Rational(const std::string& s) {
        mpq_init(q_);
        if (mpq_set_str(q_, s.c_str(), 10) != 0) {
            mpq_clear(q_);
            throw std::invalid_argument("Rational: bad literal '" + s + "'");
        }
        if (mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            throw std::domain_error("Rational: zero denominator");
        }
        mpq_canonicalize(q_);
    }
    Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r; mpq_add(r.q_, a.q_, b.q_); return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r; mpq_sub(r.q_, a.q_, b.q_); return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r; mpq_mul(r.q_, a.q_, b.q_); return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (mpq_sgn(b.q_) == 0) throw std::domain_error("Rational: division by zero");
        Rational r; mpq_div(r.q_, a.q_, b.q_); return r;
    }
    Rational operator-() const { Rational r; mpq_neg(r.q_, q_); return r; }
    Rational& operator+=(const Rational& b) { mpq_add(q_, q_, b.q_); return *this; }
    Rational& operator-=(const Rational& b) { mpq_sub(q_, q_, b.q_); return *this; }
    Rational& operator*=(const Rational& b) { mpq_mul(q_, q_, b.q_); return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        Rational base = e > 0 ? *this : inverse();
        unsigned long n = e > 0 ? (unsigned long)e : (unsigned long)(-e);
        Rational r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
        return r;
    }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r; mpq_inv(r.q_, q_); return r;
    }
    Rational abs() const { Rational r; mpq_abs(r.q_, q_); return r; }

    // "n" or "n/d", canonical.
    std::string str() const {
        char* s = mpq_get_str(nullptr, 10, q_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }
    // Always "n/d", for the JSON term format.
    std::string str_frac() const {
        std::string s = str();
        if (s.find('/') == std::string::npos) s += "/1";
        return s;
    }
    double to_double() const { return mpq_get_d(q_); }

    // Largest e with 2^e dividing the rational (negative when the denominator is even).
    long two_adic_valuation() const {
        if (is_zero()) return 0;
        unsigned long vn = mpz_scan1(mpq_numref(q_), 0);
        unsigned long vd = mpz_scan1(mpq_denref(q_), 0);
        return (long)vn - (long)vd;
    }

    const mpq_t& raw() const { return q_; }
    mpq_t& raw() { return q_; }

    static Rational factorial(unsigned long n) {
        Rational r;
        mpz_fac_ui(mpq_numref(r.q_), n);
        return r;
    }
    static Rational binomial(unsigned long n, unsigned long k) {
        Rational r;
        mpz_bin_uiui(mpq_numref(r.q_), n, k);
        return r;
    }
    static Rational pow2(long e) { return Rational(2).pow(e); }

private:
    mpq_t q_;
};

} // namespace berndt
