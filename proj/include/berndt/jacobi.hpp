#pragma once

#include <vector>
#include "berndt/rational.hpp"
#include "berndt/real.hpp"

namespace berndt {

// Polynomial over Q in the elliptic parameter x; coefficient index = degree.
// No trailing zeros; the zero polynomial is the empty list.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolyQ constant(const Rational& r) { return PolyQ({r}); }
    static PolyQ x() { return PolyQ({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return (long)c_.size() - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const Rational& s, const PolyQ& a);
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

    PolyQ derivative() const;
    // p(1 - x)
    PolyQ compose_one_minus_x() const;
    Rational eval(const Rational& v) const;
    Real eval(const Real& v) const;
    bool integer_coeffs() const;
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Truncated power series in u with PolyQ coefficients.
enum class Parity { Even, Odd, None };

struct SeriesU {
    std::vector<PolyQ> coeffs; // index = power of u
    long order = 0;            // maximum retained u-degree
    Parity parity = Parity::None;

    PolyQ at(size_t i) const { return i < coeffs.size() ? coeffs[i] : PolyQ(); }
};

SeriesU series_mul(const SeriesU& a, const SeriesU& b, long order);
SeriesU series_inv(const SeriesU& a, long order);      // needs unit constant term
SeriesU series_scale_u(const SeriesU& a, long factor); // u -> factor*u

struct JacobiTables {
    long order;
    SeriesU sn, cn, dn, cd, nd, sd, sn2;
};

// ODE recursion sn' = cn*dn, cn' = -sn*dn, dn' = -x*sn*cn from
// sn(0)=0, cn(0)=dn(0)=1; quotients by exact series division.
JacobiTables jacobi_series(long order);

enum class PolyKind { S, A, P, q };

// Coefficient-polynomial tables:
//   cd(u)  = sum S_2n(x) (-1)^n u^2n/(2n)!
//   nd(u)  = sum A_2n(x) (-1)^n u^2n/(2n)!
//   sd(u)  = sum P_2n+1(x) (-1)^n u^(2n+1)/(2n+1)!
//   sn(u)^2 = sum q_2n(x) u^2n/(2n)!
// n is the subscript (even for S/A/q, odd for P).
PolyQ maclaurin_poly(PolyKind kind, long n, const JacobiTables& t);

// The three printed conventions for building R_{2n} from q_{2n}; numeric
// calibration froze Proof (see r_poly default and its regression test).
enum class RConvention { Display, Proof, Restated };

// R_{2n}(t) with q_{2n} of degree n-1:
//   Proof/Restated: R(t) = (t-1)^(n-1)/(2n)! * q(-t/(1-t))
//   Display:        R(t) = (t-1)^(n-1)/(2n)! * q( t/(1-t))
PolyQ r_poly(long n, const JacobiTables& t, RConvention conv = RConvention::Proof);

Rational poly_deriv_at_half(const PolyQ& p, long r);

enum class JacobiFn { sn, cd, nd, sd };

// Numeric values via the descending Landen / AGM phi-recursion.
Real jacobi_numeric(JacobiFn fn, const Real& u, const Real& x, const Prec& ctx);

enum class DerivExpr { sn_over_cd, sn2_over_cd2_sd2u };

// Exact odd-order derivative at u = 0 of sn/cd or sn^2/(cd^2*sd(2u)),
// with the elliptic parameter substituted exactly.
Rational deriv_at_zero(DerivExpr expr, long order, const Rational& x,
                       const JacobiTables& t);

} // namespace berndt
