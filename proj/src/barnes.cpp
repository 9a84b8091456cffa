#include "berndt/barnes.hpp"

#include <functional>

namespace berndt {

namespace {

bool real_eq(const Real& a, const Real& b) {
    return mpfr_equal_p(a.raw(), b.raw()) != 0;
}

Real gamma_at(const Real& s, long bits) {
    Real fl = floor(s);
    if (real_eq(fl, s) && s > 0) {
        long n = s.to_long();
        return Real(Rational::factorial(n - 1), bits);
    }
    Real g(bits);
    mpfr_gamma(g.raw(), s.raw(), MPFR_RNDN);
    return g;
}

} // namespace

bool BarnesParams::conjugate_closed() const {
    if (!omega.im.is_zero()) return false;
    std::vector<bool> used(weights.size(), false);
    for (size_t i = 0; i < weights.size(); ++i) {
        if (used[i]) continue;
        if (weights[i].im.is_zero()) { used[i] = true; continue; }
        bool found = false;
        for (size_t j = i + 1; j < weights.size(); ++j) {
            if (used[j] || signs[i] != signs[j]) continue;
            if (real_eq(weights[i].re, weights[j].re) &&
                real_eq(weights[i].im, -weights[j].im)) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

void BarnesParams::validate() const {
    if (N < 1 || (long)weights.size() != N || (long)signs.size() != N)
        throw std::domain_error("BarnesParams: size mismatch");
    if (omega.re.sign() <= 0)
        throw std::domain_error("BarnesParams: Re(omega) > 0 required");
    bool all_minus = true;
    for (long j = 0; j < N; ++j) {
        if (weights[j].re.sign() <= 0)
            throw std::domain_error("BarnesParams: Re(a_j) > 0 required");
        if (signs[j] != 1 && signs[j] != -1)
            throw std::domain_error("BarnesParams: signs must be +-1");
        if (signs[j] != -1) all_minus = false;
    }
    long gate = all_minus ? N - 1 : N;
    if (!(s > gate))
        throw std::domain_error("BarnesParams: Re(s) too small to converge");
}

BarnesParams c4_params(long m, long bits) {
    if (m < 2) throw std::domain_error("c4_params: m >= 2 required");
    BarnesParams p;
    p.N = 4;
    p.s = Real(4 * m - 2, bits);
    p.omega = {Real(3, bits), Real(0, bits)};
    p.weights = {{Real(2, bits), Real(2, bits)},
                 {Real(2, bits), Real(-2, bits)},
                 {Real(1, bits), Real(1, bits)},
                 {Real(1, bits), Real(-1, bits)}};
    p.signs = {1, 1, 1, 1};
    return p;
}

namespace {

// Hurwitz zeta for real s > 1, q > 0 by Euler-Maclaurin.
Real hurwitz_em(const Real& s, const Real& q, const Prec& ctx, Real* rem) {
    long bits = ctx.bits();
    long M = 2 * ctx.digits + 30;
    Real acc(bits);
    for (long n = 0; n < M; ++n) acc += pow(q + n, -s);
    Real Q = q + M;
    acc += pow(Q, 1 - s) / (s - 1) + pow(Q, -s) / 2;
    Real tol = Real::pow10(-(ctx.digits + 6), bits);
    Real rising = s;           // (s)(s+1)...(s+2k-2)
    Real qpow = pow(Q, -s - 1); // Q^(-s-2k+1)
    Real last(bits);
    for (long k = 1; k <= 60; ++k) {
        Real term =
            Real(bernoulli(2 * k) / Rational::factorial(2 * k), bits) *
            rising * qpow;
        acc += term;
        last = abs(term);
        if (last < tol) break;
        rising = rising * (s + (2 * k - 1)) * (s + 2 * k);
        qpow = qpow / (Q * Q);
    }
    if (rem) *rem = 2 * last;
    return acc;
}

// Alternating N=1 sum via the Euler transform at raised precision.
Real alt_euler(const Real& s, const Real& q, const Prec& ctx, Real* rem) {
    long bits = ctx.bits();
    long K = (long)((ctx.digits + 8) * 3.33) + 12;
    long gbits = bits + K + 64;
    Real qh(gbits);
    mpfr_set(qh.raw(), q.raw(), MPFR_RNDN);
    Real sh(gbits);
    mpfr_set(sh.raw(), s.raw(), MPFR_RNDN);
    std::vector<Real> d;
    d.reserve(K + 1);
    for (long j = 0; j <= K; ++j) d.push_back(pow(qh + j, -sh));
    Real sum = d[0] / 2;
    Real half(Rational(1, 2), gbits);
    Real scale = half;
    Real term(gbits);
    for (long k = 1; k <= K; ++k) {
        for (long j = 0; j <= K - k; ++j) d[j] = d[j + 1] - d[j];
        scale = scale * half;
        term = d[0] * scale;
        if (k % 2) term = -term;
        sum += term;
    }
    if (rem) {
        Real r(bits);
        mpfr_set(r.raw(), abs(term).raw(), MPFR_RNDN);
        *rem = r;
    }
    Real out(bits);
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    return out;
}

} // namespace

Complex barnes_shell_sum(const BarnesParams& p, long shells, const Prec& ctx,
                         Real* tail_bound) {
    p.validate();
    long bits = ctx.bits();
    Real c = p.weights[0].re;
    for (const auto& w : p.weights)
        if (w.re < c) c = w.re;
    Complex sum(bits);

    std::function<void(long, long, const Complex&, int)> rec =
        [&](long j, long rem, const Complex& base, int sgn) {
            if (j == p.N - 1) {
                Complex pt = base;
                pt.re = pt.re + rem * p.weights[j].re;
                pt.im = pt.im + rem * p.weights[j].im;
                int sg = sgn;
                if (p.signs[j] == -1 && rem % 2) sg = -sg;
                Complex v = pt.pow_negs(p.s);
                if (sg < 0) v = {-v.re, -v.im};
                sum = sum + v;
                return;
            }
            Complex step = base;
            for (long n = 0; n <= rem; ++n) {
                int sg = sgn;
                if (p.signs[j] == -1 && n % 2) sg = -sg;
                rec(j + 1, rem - n, step, sg);
                step.re = step.re + p.weights[j].re;
                step.im = step.im + p.weights[j].im;
            }
        };
    for (long t = 0; t <= shells; ++t) rec(0, t, p.omega, 1);

    if (tail_bound) {
        auto majorant = [&](long t) {
            return Real(Rational::binomial(t + p.N - 1, p.N - 1), bits) *
                   pow(p.omega.re + c * t, -p.s);
        };
        Real b1 = majorant(shells + 1);
        Real ratio = majorant(shells + 2) / b1;
        if (ratio < 1)
            *tail_bound = b1 / (1 - ratio);
        else
            *tail_bound = Real::pow10(30, bits); // not yet in decay regime
    }
    return sum;
}

Complex barnes_zeta(const BarnesParams& p, const Prec& ctx, Real* tail_bound) {
    p.validate();
    long bits = ctx.bits();
    if (p.N == 1 && p.omega.im.is_zero() && p.weights[0].im.is_zero()) {
        Real a = p.weights[0].re;
        Real q = p.omega.re / a;
        Real rem(bits);
        Real val = (p.signs[0] == 1) ? hurwitz_em(p.s, q, ctx, &rem)
                                     : alt_euler(p.s, q, ctx, &rem);
        val = pow(a, -p.s) * val;
        if (tail_bound) *tail_bound = abs(pow(a, -p.s)) * rem;
        return {val, Real(0, bits)};
    }
    // budgeted shell summation
    Real target = Real::pow10(-ctx.digits, bits);
    Real c = p.weights[0].re;
    for (const auto& w : p.weights)
        if (w.re < c) c = w.re;
    auto majorant = [&](long t) {
        return Real(Rational::binomial(t + p.N - 1, p.N - 1), bits) *
               pow(p.omega.re + c * t, -p.s);
    };
    long budget = 200000, used = 0, t = 0;
    Complex sum(bits);
    Real tail = Real::pow10(30, bits);
    std::function<void(long, long, const Complex&, int)> rec =
        [&](long j, long rem, const Complex& base, int sgn) {
            if (j == p.N - 1) {
                Complex pt = base;
                pt.re = pt.re + rem * p.weights[j].re;
                pt.im = pt.im + rem * p.weights[j].im;
                int sg = sgn;
                if (p.signs[j] == -1 && rem % 2) sg = -sg;
                Complex v = pt.pow_negs(p.s);
                if (sg < 0) v = {-v.re, -v.im};
                sum = sum + v;
                ++used;
                return;
            }
            Complex step = base;
            for (long n = 0; n <= rem; ++n) {
                int sg = sgn;
                if (p.signs[j] == -1 && n % 2) sg = -sg;
                rec(j + 1, rem - n, step, sg);
                step.re = step.re + p.weights[j].re;
                step.im = step.im + p.weights[j].im;
            }
        };
    while (used < budget) {
        rec(0, t, p.omega, 1);
        Real b1 = majorant(t + 1);
        Real ratio = majorant(t + 2) / b1;
        if (ratio < 1) {
            tail = b1 / (1 - ratio);
            if (tail < target) break;
        }
        ++t;
    }
    if (tail_bound) *tail_bound = tail;
    return sum;
}

namespace {

// 1 - e^(-z), stable for small |z|
Complex one_minus_exp(const Complex& z, long bits) {
    Real m = z.modulus();
    if (m > Real(Rational(1, 2), bits)) {
        Complex e = Complex{-z.re, -z.im}.cexp();
        return {Real(1, bits) - e.re, -e.im};
    }
    Real eps = Real::pow10(-(bits / 3), bits);
    Complex term = z, sum = z;
    for (long k = 2; k <= 400; ++k) {
        term = term * z;
        term = {-(term.re / k), -(term.im / k)};
        sum = sum + term;
        if (term.modulus() < eps * (sum.modulus() + eps)) break;
    }
    return sum;
}

} // namespace

Complex barnes_via_laplace(const BarnesParams& p, const Prec& ctx,
                           Real* err_bound) {
    p.validate();
    long bits = ctx.bits();
    Real g = gamma_at(p.s, bits);
    Real rw = p.omega.re;
    Real target = Real::pow10(-(ctx.digits + 2), bits) * g;
    Real cut(40, bits);
    Real twoN = pow(Real(2, bits), p.N);
    Real tail(bits);
    while (true) {
        tail = twoN * gamma_inc(p.s, rw * cut) / pow(rw, p.s);
        if (tail < target) break;
        cut = cut + 10;
    }
    auto integrand = [&](const Real& u) -> Complex {
        Complex acc = Complex{-(p.omega.re * u), -(p.omega.im * u)}.cexp();
        for (long j = 0; j < p.N; ++j) {
            Complex z{p.weights[j].re * u, p.weights[j].im * u};
            Complex den;
            if (p.signs[j] == 1) {
                den = one_minus_exp(z, bits);
            } else {
                Complex e = Complex{-z.re, -z.im}.cexp();
                den = {Real(1, bits) + e.re, e.im};
            }
            acc = acc * den.inverse();
        }
        Real xp = pow(u, p.s - 1);
        return {xp * acc.re, xp * acc.im};
    };

    Real qerr_re(bits), qerr_im(bits);
    Real zero(0, bits);
    Real ire = tanh_sinh([&](const Real& u) { return integrand(u).re; }, zero,
                         cut, ctx, &qerr_re);
    Real iim(bits);
    if (!p.conjugate_closed())
        iim = tanh_sinh([&](const Real& u) { return integrand(u).im; }, zero,
                        cut, ctx, &qerr_im);
    if (err_bound) *err_bound = (tail + qerr_re + qerr_im) / g;
    return {ire / g, iim / g};
}

Real verify_thm72(long m, const Prec& ctx) {
    if (m < 2) throw std::domain_error("verify_thm72: m >= 2 required");
    long bits = ctx.bits();
    BarnesParams p = c4_params(m, bits);
    Complex z = barnes_via_laplace(p, ctx);
    Real lhs = integrate_mixed(Real(4 * m - 3, bits), ctx).value;
    Real rhs = 4 * Real(Rational::factorial(4 * m - 3), bits) * z.re;
    return abs(lhs - rhs);
}

} // namespace berndt
