#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>
#include "berndt/rational.hpp"
#include "berndt/real.hpp"

namespace berndt {

// Exact formal sum  sum_i r_i * 2^(c_i/2) * G^(a_i) * pi^(b_i/2)
// where G = Gamma(1/4).  Canonical form: the integer part of every power
// of 2 is folded into the rational coefficient, so two_halves is 0 or 1;
// terms are keyed and sorted by (gamma_exp, pi_halves, two_halves) and
// zero coefficients are dropped.
class GammaPiExpr {
public:
    struct Term {
        Rational coeff;
        int two_halves;
        int gamma_exp;
        int pi_halves;
    };

    GammaPiExpr() = default;

    static GammaPiExpr monomial(const Rational& coeff, int two_halves,
                                int gamma_exp, int pi_halves) {
        GammaPiExpr e;
        e.add_term(coeff, two_halves, gamma_exp, pi_halves);
        return e;
    }
    static GammaPiExpr constant(const Rational& coeff) {
        return monomial(coeff, 0, 0, 0);
    }

    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    std::vector<Term> terms() const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [k, c] : terms_)
            out.push_back({c, std::get<2>(k), std::get<0>(k), std::get<1>(k)});
        return out;
    }

    friend GammaPiExpr operator+(const GammaPiExpr& a, const GammaPiExpr& b) {
        GammaPiExpr r = a;
        for (const auto& [k, c] : b.terms_) r.add_key(k, c);
        return r;
    }
    friend GammaPiExpr operator-(const GammaPiExpr& a, const GammaPiExpr& b) {
        GammaPiExpr r = a;
        for (const auto& [k, c] : b.terms_) r.add_key(k, -c);
        return r;
    }
    GammaPiExpr operator-() const {
        GammaPiExpr r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend GammaPiExpr operator*(const GammaPiExpr& a, const GammaPiExpr& b) {
        GammaPiExpr r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ca * cb,
                           std::get<2>(ka) + std::get<2>(kb),
                           std::get<0>(ka) + std::get<0>(kb),
                           std::get<1>(ka) + std::get<1>(kb));
        return r;
    }
    friend GammaPiExpr operator*(const Rational& s, const GammaPiExpr& e) {
        GammaPiExpr r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : e.terms_) r.terms_.emplace(k, s * c);
        return r;
    }

    // Inverse of a single-term expression.
    GammaPiExpr inverse() const {
        if (terms_.size() != 1)
            throw std::domain_error("GammaPiExpr: inverse needs a monomial");
        const auto& [k, c] = *terms_.begin();
        GammaPiExpr r;
        r.add_term(c.inverse(), -std::get<2>(k), -std::get<0>(k), -std::get<1>(k));
        return r;
    }
    GammaPiExpr pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        GammaPiExpr r = constant(Rational(1));
        for (long i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const GammaPiExpr& a, const GammaPiExpr& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GammaPiExpr& a, const GammaPiExpr& b) {
        return !(a == b);
    }

    // Numeric realization; gamma_quarter supplied by the caller so the
    // constant is computed once per precision context.
    Real eval(const Prec& ctx, const Real& gamma_quarter) const {
        long bits = ctx.bits();
        Real pi = Real::pi(bits);
        Real sqrt_pi = sqrt(pi);
        Real sqrt2 = sqrt(Real(2, bits));
        Real total(bits);
        for (const auto& [k, c] : terms_) {
            Real t(c, bits);
            int a = std::get<0>(k), b = std::get<1>(k), tw = std::get<2>(k);
            if (a != 0) t *= berndt::pow(gamma_quarter, (long)a);
            if (b != 0) {
                t *= berndt::pow(pi, (long)(b / 2));
                if (b % 2 != 0) t *= (b % 2 > 0) ? sqrt_pi : Real(1, bits) / sqrt_pi;
            }
            if (tw != 0) t *= sqrt2;
            total += t;
        }
        return total;
    }

    std::string json() const;                  // canonical serialization
    static GammaPiExpr from_json(const std::string& text);
    std::string pretty() const;                // human readable

private:
    void add_term(Rational c, int two_halves, int gamma_exp, int pi_halves) {
        if (c.is_zero()) return;
        // fold integer powers of 2 into the coefficient
        long k = two_halves >= 0 ? two_halves / 2
                                 : -((-(long)two_halves + 1) / 2);
        c *= Rational::pow2(k);
        int rem = two_halves - (int)(2 * k);
        add_key(std::make_tuple(gamma_exp, pi_halves, rem), c);
    }
    void add_key(const std::tuple<int, int, int>& k, const Rational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // key: (gamma_exp, pi_halves, two_halves)
    std::map<std::tuple<int, int, int>, Rational> terms_;
};

} // namespace berndt
