#pragma once

#include "berndt/real.hpp"

namespace berndt {

// The eleven alternating hyperbolic series families.  Summand shapes
// (argument t = n*y for integer families, t = (2n-1)*y/2 for half-odd):
//   C       (-1)^n n^p / (sinh(ny) cosh^m(ny))
//   X       (-1)^n n^p / sinh^m(ny)
//   DX      (-1)^n n^p cosh(ny) / sinh^m(ny)
//   Cprime  (-1)^n (2n-1)^(p-1) / (sinh(t) cosh^m(t))
//   Cbar    (-1)^n (2n-1)^p / (sinh^m(t) cosh(t))
//   T       (-1)^n (2n-1)^(p-1) / sinh^m(t)
//   DT      (-1)^n (2n-1)^p cosh(t) / sinh^m(t)
//   Xprime  (-1)^n (2n-1)^p / cosh^m(t)
//   DXprime (-1)^n (2n-1)^(p+1) sinh(t) / cosh^m(t)
//   B       (-1)^n n^(p-1) / cosh^m(ny)
//   DB      (-1)^n n^p sinh(ny) / cosh^m(ny)
enum class Family { C, X, DX, Cprime, Cbar, T, DT, Xprime, DXprime, B, DB };

struct SeriesSpec {
    Family family;
    long p;
    long m = 1;
};

// Generic summand shape used by hyper_sum and the identity verifiers:
// (-1)^n * k^p_exp * cosh(t)^num_cosh * sinh(t)^num_sinh
//        / (sinh(t)^den_sinh * cosh(t)^den_cosh)
// with k = n, t = n*y (half_odd = false) or k = 2n-1, t = (2n-1)*y/2.
struct HypShape {
    long p_exp;
    long den_sinh = 0;
    long den_cosh = 0;
    long num_sinh = 0;
    long num_cosh = 0;
    bool half_odd = false;
};

Real hyper_sum_shape(const HypShape& s, const Real& y, const Prec& ctx);
Real hyper_sum(const SeriesSpec& spec, const Real& y, const Prec& ctx);

enum class ThetaIdentity { CE, CF, CG };

// Residual of the selected theta identity (the statement asserts 0).
// Exact-zero fast path for CE at theta = 0.
Real verify_theta_identity(ThetaIdentity id, const Real& a, const Real& b,
                           const Real& theta, const Prec& ctx);

enum class TransformIdentity { CBB, CBC, CBD };

// |LHS - RHS| of the modular transformation identities, both sides by
// direct certified summation (RHS series at argument pi^2/y).
Real verify_transform(TransformIdentity id, long p, const Real& y,
                      const Prec& ctx);

} // namespace berndt
