#pragma once

#include <functional>
#include <string>
#include "berndt/rational.hpp"
#include "berndt/real.hpp"

namespace berndt {

// value with certified remainder accounting:
// |truth - value| <= tail_bound (beyond cut) + quad_error (level estimate)
struct QuadResult {
    Real value;
    Real tail_bound;
    Real quad_error;
    Real cut;
    long nodes = 0;
};

// Double-exponential quadrature of f on [a, b]; halves the step until two
// consecutive levels agree, reporting the level difference as the error.
Real tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a,
               const Real& b, const Prec& ctx, Real* err = nullptr,
               long* nodes = nullptr);

// Numerically stable cosh(t) - cos(t) (power series below |t| = 1).
Real cosh_minus_cos(const Real& t);

// integral_0^inf x^s / ((cosh 2x - cos 2x)(cosh x - cos x)) dx, s >= 4.
// cut_hint = 0 selects the cut automatically from the tail majorant.
QuadResult integrate_mixed(const Real& s, const Prec& ctx,
                           const Real& cut_hint);
QuadResult integrate_mixed(const Real& s, const Prec& ctx);

enum class BISign { Plus, Minus };

// integral_0^inf x^(s-1) / (cos x +/- cosh x)^m dx
// '+' needs s >= 1; '-' needs s >= 2m+1.
QuadResult integrate_BI(BISign sign, const Real& s, long m, const Prec& ctx,
                        const Real& cut_hint);
QuadResult integrate_BI(BISign sign, const Real& s, long m, const Prec& ctx);

// integral_0^inf sin(nx) / (x (cos x + cosh x)) dx, summed between
// consecutive zeros of the sine factor with an alternating tail bound.
Real ramanujan_sine(long n, const Prec& ctx);

// Generating-function convention x e^x/(e^x - 1): B_1 = +1/2.
Rational bernoulli(long n);

// integral_0^inf x^(4p+1) sin x / (cos x - cosh x) dx
Real pan_wang(long p, const Prec& ctx);
// integral_0^inf x^b sin(nx) / (cos x - cosh x) dx, b = 3 (mod 4): zero
Real pan_wang_vanishing(long b, long n, const Prec& ctx);

// |(1/2) int_R t^n dt/(cos(K sqrt t) + cosh(K' sqrt t))
//   - (-1)^n (d/du)^(2n+1) [sn/cd](0)|  with x = k^2
Real kuznetsov_check(long n, const Rational& x, const Prec& ctx);
// |int_R t^(n+1) dt/(cos(K sqrt t) - cosh(K' sqrt t))
//   - (-1)^(n+1) 8 (d/du)^(2n+1) [sn^2/(cd^2 sd(2u))](0)|
Real bradshaw_vignat_check(long n, const Rational& x, const Prec& ctx);

// Integral <-> series bridge at p = 4m-3: residual of
// 2*integrate_mixed(p) against the four-series right side with exact
// Gaussian-integer prefactor reduction.  If the stated form misses the
// tolerance, the sign-variant candidates are tried and reported.
Real verify_thm31(long p, const Prec& ctx,
                  std::string* variant_report = nullptr);

// The series side of the bridge on its own (equals 2*integrate_mixed(p)).
Real bridge_series_rhs(long p, const Prec& ctx);

} // namespace berndt
