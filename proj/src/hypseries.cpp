#include "berndt/hypseries.hpp"

namespace berndt {

namespace {

// sum_{n>=1} (-1)^n f(n) where |f(n)| <= M * n^pp * e^(-beta*n);
// stops once the geometric-majorant tail drops below tol.
template <typename F>
Real sum_certified(F f, const Real& M, long pp, const Real& beta,
                   const Real& tol, long bits) {
    if (beta.sign() <= 0)
        throw std::domain_error("hyper series: non-decaying summand");
    Real s(bits);
    Real embeta = exp(-beta);
    long sign = -1;
    for (long n = 1; n < 2000000; ++n) {
        s += sign * f(n);
        sign = -sign;
        // tail over n' > n: majorant(n+1) / (1 - ratio), ratio at n+1
        Real nn(n + 1, bits);
        Real ratio = embeta;
        if (pp > 0) ratio = ratio * pow((nn + 1) / nn, pp);
        if (ratio < 1) {
            Real maj = M * exp(-(beta * nn));
            if (pp > 0) maj = maj * pow(nn, pp);
            Real bound = maj / (Real(1, bits) - ratio);
            if (bound < tol) return s;
        }
    }
    throw std::runtime_error("hyper series: no convergence");
}

} // namespace

Real hyper_sum_shape(const HypShape& s, const Real& y, const Prec& ctx) {
    long bits = ctx.bits();
    if (y.sign() <= 0) throw std::domain_error("hyper_sum: y > 0 required");
    long alpha = s.den_sinh + s.den_cosh - s.num_sinh - s.num_cosh;
    if (alpha < 1)
        throw std::domain_error("hyper_sum: family/m combination does not decay");
    Real tol = Real::pow10(-(ctx.digits + 2), bits);

    // |term(n)| <= M * n^pp * e^(-beta n)  (see header shapes):
    //   sinh(t) >= e^t (1 - e^(-2 t0)) / 2 for t >= t0, cosh(t) >= e^t/2,
    //   sinh(t), cosh(t) <= e^t; t0 = smallest argument = y or y/2.
    Real t0 = s.half_odd ? y / 2 : y;
    Real damp = Real(1, bits) - exp(-(2 * t0)); // > 0
    Real M = pow(Real(2, bits), s.den_sinh + s.den_cosh) *
             pow(Real(1, bits) / damp, s.den_sinh);
    Real beta = Real(alpha, bits) * y;
    long pp = s.p_exp > 0 ? s.p_exp : 0;
    if (s.half_odd) {
        // t = (2n-1)y/2 => e^(-alpha t) = e^(alpha y/2) e^(-alpha y n);
        // k = 2n-1 <= 2n => k^p <= 2^p n^p
        M = M * exp(Real(alpha, bits) * y / 2);
        if (pp > 0) M = M * pow(Real(2, bits), pp);
    }

    auto f = [&](long n) {
        Real k(s.half_odd ? 2 * n - 1 : n, bits);
        Real t = s.half_odd ? k * y / 2 : k * y;
        Real num = pow(k, s.p_exp);
        if (s.num_sinh) num = num * pow(sinh(t), s.num_sinh);
        if (s.num_cosh) num = num * pow(cosh(t), s.num_cosh);
        Real den(1, bits);
        if (s.den_sinh) den = den * pow(sinh(t), s.den_sinh);
        if (s.den_cosh) den = den * pow(cosh(t), s.den_cosh);
        return num / den;
    };
    return sum_certified(f, M, pp, beta, tol, bits);
}

Real hyper_sum(const SeriesSpec& spec, const Real& y, const Prec& ctx) {
    if (spec.m < 1) throw std::domain_error("hyper_sum: m >= 1 required");
    HypShape s;
    switch (spec.family) {
    case Family::C:       s = {spec.p, 1, spec.m, 0, 0, false}; break;
    case Family::X:       s = {spec.p, spec.m, 0, 0, 0, false}; break;
    case Family::DX:      s = {spec.p, spec.m, 0, 0, 1, false}; break;
    case Family::Cprime:  s = {spec.p - 1, 1, spec.m, 0, 0, true}; break;
    case Family::Cbar:    s = {spec.p, spec.m, 1, 0, 0, true}; break;
    case Family::T:       s = {spec.p - 1, spec.m, 0, 0, 0, true}; break;
    case Family::DT:      s = {spec.p, spec.m, 0, 0, 1, true}; break;
    case Family::Xprime:  s = {spec.p, 0, spec.m, 0, 0, true}; break;
    case Family::DXprime: s = {spec.p + 1, 0, spec.m, 1, 0, true}; break;
    case Family::B:       s = {spec.p - 1, 0, spec.m, 0, 0, false}; break;
    case Family::DB:      s = {spec.p, 0, spec.m, 1, 0, false}; break;
    }
    return hyper_sum_shape(s, y, ctx);
}

namespace {

// sum_{n>=1} (-1)^n g(n) with |g(n)| <= M e^(-beta n), beta > 0.
template <typename G>
Real sum_mixed(G g, const Real& M, const Real& beta, const Real& tol, long bits) {
    if (beta.sign() <= 0)
        throw std::domain_error("theta identity: parameters violate decay");
    Real s(bits);
    Real embeta = exp(-beta);
    Real denom = Real(1, bits) - embeta;
    long sign = -1;
    for (long n = 1; n < 2000000; ++n) {
        s += sign * g(n);
        sign = -sign;
        Real bound = M * exp(-(beta * Real(n + 1, bits))) / denom;
        if (bound < tol) return s;
    }
    throw std::runtime_error("theta identity: no convergence");
}

} // namespace

Real verify_theta_identity(ThetaIdentity id, const Real& a, const Real& b,
                           const Real& theta, const Prec& ctx) {
    long bits = ctx.bits();
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("theta identity: a, b != 0 required");
    Real pi = Real::pi(bits);
    if (abs(theta) >= 3 * abs(b) * pi)
        throw std::domain_error("theta identity: |theta| < 3*b*pi required");
    if (id == ThetaIdentity::CE && theta.is_zero())
        return Real(0, bits); // every term carries sinh/sin(theta) or theta
    Real tol = Real::pow10(-(ctx.digits + 2), bits);
    Real aa = abs(a), ab = abs(b), at = abs(theta);
    auto msum = [&](auto g, const Real& beta, const Real& M) {
        return sum_mixed(g, M, beta, tol, bits);
    };
    Real one(1, bits);

    if (id == ThetaIdentity::CE) {
        Real s1 = msum([&](long n) {
            Real nn(n, bits);
            return sinh(nn * theta / a) /
                   (sinh(b * nn * pi / a) * pow(cosh(b * nn * pi / a), 2));
        }, 3 * ab * pi / aa - at / aa, Real(8, bits));
        Real s2 = msum([&](long n) {
            Real nn(n, bits);
            return sin(nn * theta / b) / sinh(a * nn * pi / b);
        }, aa * pi / ab, 3 * one);
        Real s3 = msum([&](long n) {
            Real k(2 * n - 1, bits);
            return cos(k * theta / (2 * b)) / sinh(k * aa * pi / (2 * ab));
        }, aa * pi / ab, 3 * exp(aa * pi / (2 * ab)));
        Real s4 = msum([&](long n) {
            Real k(2 * n - 1, bits);
            Real t = k * aa * pi / (2 * ab);
            return sin(k * theta / (2 * b)) * cosh(t) / pow(sinh(t), 2);
        }, aa * pi / ab, 8 * exp(aa * pi / (2 * ab)));
        return abs(b * b * pi * s1 + a * b * pi * s2 - a * theta * s3 +
                   a * a * pi * s4 + theta * b / 2);
    }
    if (id == ThetaIdentity::CF) {
        Real s1 = msum([&](long n) {
            Real k(2 * n - 1, bits);
            Real t = k * b * pi / (2 * a);
            return cosh(k * theta / (2 * a)) / (sinh(t) * pow(cosh(t), 2));
        }, (3 * ab * pi - at) / (2 * aa), 8 * exp((3 * ab * pi - at) / (2 * aa)));
        Real s2 = msum([&](long n) {
            Real k(2 * n - 1, bits);
            return sin(k * theta / (2 * b)) / cosh(k * aa * pi / (2 * ab));
        }, aa * pi / ab, 2 * exp(aa * pi / (2 * ab)));
        Real s3 = msum([&](long n) {
            Real k(2 * n - 1, bits);
            Real t = k * aa * pi / (2 * ab);
            return cos(k * theta / (2 * b)) * sinh(t) / pow(cosh(t), 2);
        }, aa * pi / ab, 4 * exp(aa * pi / (2 * ab)));
        Real s4 = msum([&](long n) {
            Real nn(n, bits);
            return cos(nn * theta / b) / cosh(aa * nn * pi / ab);
        }, aa * pi / ab, 2 * one);
        return abs(b * b * pi * s1 + a * theta * s2 + a * a * pi * s3 +
                   a * b * pi * s4 + a * b * pi / 2);
    }
    // CG
    Real s1 = msum([&](long n) {
        Real nn(n, bits);
        Real t = nn * b * pi / a;
        return cosh(nn * theta / a) / (pow(sinh(t), 2) * cosh(t));
    }, (3 * ab * pi - at) / aa, Real(16, bits));
    Real s2 = msum([&](long n) {
        Real nn(n, bits);
        return sin(nn * theta / b) / sinh(aa * nn * pi / ab);
    }, aa * pi / ab, 3 * one);
    Real s3 = msum([&](long n) {
        Real nn(n, bits);
        Real t = aa * nn * pi / ab;
        return cos(nn * theta / b) * cosh(t) / pow(sinh(t), 2);
    }, aa * pi / ab, Real(8, bits));
    Real s4 = msum([&](long n) {
        Real k(2 * n - 1, bits);
        return -cos(k * theta / (2 * b)) / sinh(k * aa * pi / (2 * ab));
    }, aa * pi / ab, 3 * exp(aa * pi / (2 * ab)));
    return abs(b * b * pi * pi * s1 + a * pi * theta * s2 + a * a * pi * pi * s3 +
               a * b * pi * pi * s4 +
               (a * a * pi * pi - 5 * (b * b) * pi * pi + 3 * (theta * theta)) / 12);
}

Real verify_transform(TransformIdentity id, long p, const Real& y,
                      const Prec& ctx) {
    long bits = ctx.bits();
    if (p < 5 || p % 2 == 0)
        throw std::domain_error("verify_transform: odd p >= 5 required");
    if (y.sign() <= 0) throw std::domain_error("verify_transform: y > 0 required");
    Real pi = Real::pi(bits);
    Real Y = pi * pi / y;
    long sg = ((p - 1) / 2) % 2 ? -1 : 1;
    auto S = [&](HypShape sh, const Real& arg) {
        return hyper_sum_shape(sh, arg, ctx);
    };
    switch (id) {
    case TransformIdentity::CBB: {
        Real lhs = S({p - 1, 2, 1, 0, 0, false}, y);
        long sg3 = ((p - 3) / 2) % 2 ? -1 : 1;
        Real rhs = -pow(pi, p - 1) / pow(y, p) * (p - 1) * sg3 *
                       S({p - 2, 1, 0, 0, 0, false}, Y) +
                   pow(pi, p) / (pow(Real(2, bits), p - 1) * pow(y, p)) * sg *
                       S({p - 1, 1, 0, 0, 0, true}, Y) -
                   pow(pi, p + 1) / pow(y, p + 1) * sg *
                       S({p - 1, 2, 0, 0, 1, false}, Y);
        return abs(lhs - rhs);
    }
    case TransformIdentity::CBC: {
        Real lhs = S({p, 1, 2, 0, 0, false}, y);
        Real rhs = -pow(pi, p + 1) / pow(y, p + 1) * sg *
                       S({p, 1, 0, 0, 0, false}, Y) +
                   Real(p, bits) * pow(pi, p) /
                       (pow(Real(2, bits), p - 1) * pow(y, p + 1)) * sg *
                       S({p - 1, 1, 0, 0, 0, true}, Y) -
                   pow(pi, p + 2) / (pow(Real(2, bits), p) * pow(y, p + 2)) * sg *
                       S({p, 2, 0, 0, 1, true}, Y);
        return abs(lhs - rhs);
    }
    case TransformIdentity::CBD: {
        Real lhs = S({p, 2, 1, 0, 0, true}, y);
        Real two_p = pow(Real(2, bits), p);
        Real rhs = -pow(pi, p + 1) / pow(y, p + 1) * sg *
                       S({p, 0, 1, 0, 0, true}, Y) -
                   Real(p, bits) * two_p * pow(pi, p) / pow(y, p + 1) * sg *
                       S({p - 1, 0, 1, 0, 0, false}, Y) +
                   two_p * pow(pi, p + 2) / pow(y, p + 2) * sg *
                       S({p, 0, 2, 1, 0, false}, Y);
        return abs(lhs - rhs);
    }
    }
    throw std::logic_error("verify_transform: bad id");
}

} // namespace berndt
