#pragma once

#include "berndt/real.hpp"

namespace berndt {

// Ramanujan modular triple at elliptic parameter x = k^2:
// y = pi*K'/K, q = e^(-y), z = 2K/pi, zprime = dz/dx.
struct ModularPoint {
    Real x, y, q, z, zprime;
};

Real agm(const Real& a, const Real& b, const Prec& ctx);
Real gamma_quarter(const Prec& ctx);
Real ellK(const Real& x, const Prec& ctx);
Real ellE(const Real& x, const Prec& ctx);
Real hyp2f1(const Real& a, const Real& b, const Real& c, const Real& x,
            const Prec& ctx);
ModularPoint modular_point(const Real& x, const Prec& ctx);

} // namespace berndt
