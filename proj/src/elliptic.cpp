#include "berndt/elliptic.hpp"

namespace berndt {

Real agm(const Real& a0, const Real& b0, const Prec& ctx) {
    if (a0.sign() <= 0 || b0.sign() <= 0)
        throw std::domain_error("agm: inputs must be positive");
    long bits = ctx.bits();
    Real a(a0), b(b0);
    // stop once |a-b| <= 2^-(bits-8) * |a|
    Real tol(1, bits);
    mpfr_mul_2si(tol.raw(), tol.raw(), -(bits - 8), MPFR_RNDN);
    for (int i = 0; i < 200; ++i) {
        Real am = (a + b) / 2;
        Real gm = sqrt(a * b);
        a = am;
        b = gm;
        if (abs(a - b) <= tol * abs(a)) break;
    }
    return (a + b) / 2;
}

Real gamma_quarter(const Prec& ctx) {
    if (ctx.digits < 10)
        throw std::domain_error("gamma_quarter: prec >= 10 required");
    long bits = ctx.bits();
    Real pi = Real::pi(bits);
    Real one(1, bits);
    Real m = agm(one, one / sqrt(Real(2, bits)), ctx);
    // Gamma(1/4)^2 = 2*pi^(3/2) / agm(1, 1/sqrt(2))
    return sqrt(2 * (pi * sqrt(pi)) / m);
}

Real ellK(const Real& x, const Prec& ctx) {
    long bits = ctx.bits();
    if (x.sign() <= 0 || x >= 1)
        throw std::domain_error("ellK: x must lie in (0,1)");
    Real pi = Real::pi(bits);
    return pi / (2 * agm(Real(1, bits), sqrt(Real(1, bits) - x), ctx));
}

Real ellE(const Real& x, const Prec& ctx) {
    long bits = ctx.bits();
    if (x.sign() <= 0 || x >= 1)
        throw std::domain_error("ellE: x must lie in (0,1)");
    // AGM with accumulated sum: E = K * (1 - sum 2^(n-1) c_n^2), c_0 = sqrt(x)
    Real a(1, bits), b = sqrt(Real(1, bits) - x);
    Real s = x / 2; // 2^(-1) * c_0^2
    Real tol(1, bits);
    mpfr_mul_2si(tol.raw(), tol.raw(), -(bits - 8), MPFR_RNDN);
    Real two_pow(1, bits);
    for (int n = 1; n < 200; ++n) {
        Real c = (a - b) / 2;
        Real am = (a + b) / 2;
        Real gm = sqrt(a * b);
        a = am;
        b = gm;
        Real add = two_pow * (c * c); // 2^(n-1) c_n^2
        s += add;
        mpfr_mul_2si(two_pow.raw(), two_pow.raw(), 1, MPFR_RNDN);
        if (abs(a - b) <= tol) break;
    }
    Real K = Real::pi(bits) / (2 * a);
    return K * (Real(1, bits) - s);
}

Real hyp2f1(const Real& a, const Real& b, const Real& c, const Real& x,
            const Prec& ctx) {
    long bits = ctx.bits();
    if (abs(x) >= 1)
        throw std::domain_error("hyp2f1: |x| < 1 required");
    // c must not be a non-positive integer
    if (c <= 0 && (c - floor(c)).is_zero())
        throw std::domain_error("hyp2f1: c is a non-positive integer");
    Real term(1, bits), sum(1, bits);
    Real tol(1, bits);
    mpfr_mul_2si(tol.raw(), tol.raw(), -(bits + 8), MPFR_RNDN);
    Real ax = abs(x);
    for (long k = 0; k < 1000000; ++k) {
        Real kk(k, bits);
        term *= (a + kk) * (b + kk) * x / ((c + kk) * (kk + 1));
        sum += term;
        // ratio-test tail bound once the term ratio has settled below 1
        if (k > 8) {
            Real ratio = abs((a + kk) * (b + kk) / ((c + kk) * (kk + 1))) * ax;
            if (ratio < 1) {
                Real bound = abs(term) * ratio / (Real(1, bits) - ratio);
                if (bound < tol * abs(sum)) break;
            }
        }
    }
    return sum;
}

ModularPoint modular_point(const Real& x, const Prec& ctx) {
    long bits = ctx.bits();
    if (x.sign() <= 0 || x >= 1)
        throw std::domain_error("modular_point: x must lie in (0,1)");
    Real pi = Real::pi(bits);
    Real K = ellK(x, ctx);
    Real Kp = ellK(Real(1, bits) - x, ctx);
    Real E = ellE(x, ctx);
    Real y = pi * Kp / K;
    Real z = 2 * K / pi;
    Real dK = (E - (Real(1, bits) - x) * K) / (2 * x * (Real(1, bits) - x));
    Real zprime = 2 * dK / pi;
    return ModularPoint{x, y, exp(-y), z, zprime};
}

} // namespace berndt
