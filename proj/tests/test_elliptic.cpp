#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "berndt/elliptic.hpp"
#include "berndt/gammapi.hpp"

using namespace berndt;

namespace {
const Prec ctx{50, 14};
const long bits = ctx.bits();
Real tol(const char* s) { return Real(s, bits); }
} // namespace

TEST_CASE("agm basics") {
    Real one(1, bits), two(2, bits);
    CHECK(agm(one, one, ctx) == one);
    CHECK(abs(agm(two, Real(8, bits), ctx) - two * agm(one, Real(4, bits), ctx))
          < tol("1e-48"));
    // reference value of agm(1, sqrt 2), Gauss's lemniscatic constant
    CHECK(abs(agm(one, sqrt(two), ctx) -
              Real("1.1981402347355922074399224922803238782272126632156", bits))
          < tol("1e-48"));
}

TEST_CASE("gamma quarter reference digits") {
    CHECK(abs(gamma_quarter(ctx) -
              Real("3.6256099082219083119306851558676720029951676828800", bits))
          < tol("1e-48"));
}

TEST_CASE("complete elliptic integrals at the lemniscatic point") {
    Real x = Real(1, bits) / Real(2, bits);
    Real K = ellK(x, ctx);
    // K(1/2) = Gamma(1/4)^2 / (4 sqrt(pi))
    Real g = gamma_quarter(ctx);
    CHECK(abs(K - g * g / (Real(4, bits) * sqrt(Real::pi(bits)))) <
          tol("1e-47"));
    // E(1/2) via the Legendre relation at the self-dual point:
    // 2 E K - K^2 = pi/2
    Real E = ellE(x, ctx);
    CHECK(abs(Real(2, bits) * E * K - K * K - Real::pi(bits) / Real(2, bits))
          < tol("1e-47"));
}

TEST_CASE("legendre relation across the parameter range") {
    for (int num = 1; num <= 9; num += 2) {
        Real x = Real(num, bits) / Real(10, bits);
        Real xc = Real(1, bits) - x;
        Real K = ellK(x, ctx), Kp = ellK(xc, ctx);
        Real E = ellE(x, ctx), Ep = ellE(xc, ctx);
        Real res = E * Kp + Ep * K - K * Kp - Real::pi(bits) / Real(2, bits);
        CHECK(abs(res) < tol("1e-46"));
    }
}

TEST_CASE("hypergeometric matches K") {
    Real h(1, bits);
    h = h / Real(2, bits);
    Real x = Real(3, bits) / Real(10, bits);
    Real lhs = hyp2f1(h, h, Real(1, bits), x, ctx);
    CHECK(abs(lhs - Real(2, bits) * ellK(x, ctx) / Real::pi(bits)) <
          tol("1e-46"));
}

TEST_CASE("modular point at one half") {
    Real x = Real(1, bits) / Real(2, bits);
    ModularPoint mp = modular_point(x, ctx);
    CHECK(abs(mp.y - Real::pi(bits)) < tol("1e-47"));
    Real g = gamma_quarter(ctx);
    // z(1/2) = G^2 / (2 pi^(3/2)),  z'(1/2) = 4 pi^(1/2) / G^2
    Real pi = Real::pi(bits);
    CHECK(abs(mp.z - g * g / (Real(2, bits) * pi * sqrt(pi))) < tol("1e-47"));
    CHECK(abs(mp.zprime - Real(4, bits) * sqrt(pi) / (g * g)) < tol("1e-46"));
    CHECK(abs(mp.q - exp(-Real::pi(bits))) < tol("1e-47"));
}

TEST_CASE("modular involution x to 1-x swaps y") {
    Real x = Real(2, bits) / Real(10, bits);
    ModularPoint a = modular_point(x, ctx);
    ModularPoint b = modular_point(Real(1, bits) - x, ctx);
    CHECK(abs(a.y * b.y - Real::pi(bits) * Real::pi(bits)) < tol("1e-45"));
}

TEST_CASE("zprime is the x derivative of z") {
    Real x = Real(4, bits) / Real(10, bits);
    Real h = tol("1e-12");
    ModularPoint c = modular_point(x, ctx);
    Real num = (modular_point(x + h, ctx).z - modular_point(x - h, ctx).z) /
               (Real(2, bits) * h);
    CHECK(abs(num - c.zprime) < tol("1e-20"));
}
