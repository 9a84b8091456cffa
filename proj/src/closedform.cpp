#include "berndt/closedform.hpp"
#include "berndt/hypseries.hpp"

namespace berndt {

namespace {

// value + d/dx pair; enough to push one derivative through products
template <typename T>
struct Dual {
    T v, d;

    friend Dual operator+(const Dual& a, const Dual& b) {
        return {a.v + b.v, a.d + b.d};
    }
    friend Dual operator-(const Dual& a, const Dual& b) {
        return {a.v - b.v, a.d - b.d};
    }
    friend Dual operator*(const Dual& a, const Dual& b) {
        return {a.v * b.v, a.v * b.d + a.d * b.v};
    }
};

template <typename T>
Dual<T> dpow(const Dual<T>& a, long e, const T& one, const T& zero) {
    Dual<T> r{one, zero};
    for (long i = 0; i < e; ++i) r = r * a;
    return r;
}

Dual<GammaPiExpr> dpow(const Dual<GammaPiExpr>& a, long e) {
    Dual<GammaPiExpr> r{GammaPiExpr::constant(Rational(1)), GammaPiExpr()};
    for (long i = 0; i < e; ++i) r = r * a;
    return r;
}

Dual<GammaPiExpr> scale(const Rational& c, const Dual<GammaPiExpr>& a) {
    return {c * a.v, c * a.d};
}

long check_p(long p) {
    if (p < 5 || p % 2 == 0)
        throw std::domain_error("odd p >= 5 required");
    return ((p - 1) / 2) % 2 ? -1 : 1; // sign (-1)^((p-1)/2)
}

} // namespace

GammaPiExpr closed_series_half(HalfTarget target, long m) {
    if (m < 2) throw std::domain_error("closed_series_half: m >= 2 required");
    long p = 4 * m - 3;
    JacobiTables t = jacobi_series(p + 1);
    using E = GammaPiExpr;
    using D = Dual<E>;

    // lemniscatic constants: Z = z(1/2), ZP = z'(1/2), both exact
    E Z = E::monomial(Rational(1, 2), 0, 2, -3);
    E ZP = E::monomial(Rational(4), 0, -2, 1);
    E inv_sqrt2 = E::monomial(Rational(1, 2), 1, 0, 0);
    E pinv = E::monomial(Rational(1), 0, 0, -2);
    D w{Z, -ZP};
    D sqx{inv_sqrt2, inv_sqrt2};
    D sq1mx{inv_sqrt2, -inv_sqrt2};
    D sqx1mx{E::constant(Rational(1, 2)), E()};
    D x1mx{E::constant(Rational(1, 4)), E()};

    // dual of Q(1-x) at x = 1/2 for a coefficient polynomial Q
    auto polyhat = [&](const PolyQ& q) {
        return D{E::constant(q.eval(Rational(1, 2))),
                 E::constant(-q.derivative().eval(Rational(1, 2)))};
    };
    auto TBblk = [&](long pp) {
        D S = polyhat(maclaurin_poly(PolyKind::S, pp - 1, t));
        return scale(Rational(-1, 2), dpow(w, pp) * sq1mx * S);
    };
    auto XDblk = [&](long pp) {
        D R = polyhat(r_poly(pp - 1, t));
        Rational c = -Rational::factorial(pp - 1) * Rational::pow2(-(pp + 1));
        return scale(c, dpow(w, pp + 1) * x1mx * R);
    };
    auto BHblk = [&](long pp) {
        D A = polyhat(maclaurin_poly(PolyKind::A, pp - 1, t));
        return scale(Rational::pow2(-pp), dpow(w, pp) * sqx * A);
    };
    auto XCblk = [&](long pp) {
        D P = polyhat(maclaurin_poly(PolyKind::P, pp, t));
        return scale(Rational(-1, 2), dpow(w, pp + 1) * sqx1mx * P);
    };
    E Z2 = Z * Z;

    switch (target) {
    case HalfTarget::C: {
        D TB = TBblk(p);
        E DTval = Rational(-1, 2) * (Z2 * TB.d);
        return -XDblk(p).v +
               (Rational(p) * Rational::pow2(-(p - 1))) * (pinv * TB.v) -
               Rational::pow2(-p) * DTval;
    }
    case HalfTarget::Cprime: {
        D S1 = XDblk(p - 2);
        E S3val = Rational(-1, 4) * (Z2 * S1.d);
        return Rational(p - 1) * (pinv * S1.v) +
               Rational::pow2(-(p - 1)) * TBblk(p).v - S3val;
    }
    case HalfTarget::Cbar: {
        D B = BHblk(p);
        E DBval = Rational(-1, 4) * (Z2 * B.d);
        return -XCblk(p).v -
               (Rational(p) * Rational::pow2(p)) * (pinv * B.v) +
               Rational::pow2(p) * DBval;
    }
    case HalfTarget::X3: {
        PolyQ R = r_poly(4 * m - 6, t);
        Rational R0 = R.eval(Rational(1, 2));
        Rational R2 = poly_deriv_at_half(R, 2);
        E pre = E::monomial(
            -Rational::factorial(4 * m - 6) * Rational::pow2(-(8 * m + 3)),
            0, (int)(8 * m), (int)(-12 * m));
        E inner =
            E::monomial(Rational(256 * (m - 1) * (4 * m - 3)) * R0, 0, -8, 8) +
            E::constant(Rational(4 * (m - 3)) * R0 + R2);
        return pre * inner;
    }
    }
    throw std::logic_error("closed_series_half: bad target");
}

BerndtCoeffs berndt_coeffs(long m) {
    if (m < 2) throw std::domain_error("berndt_coeffs: m >= 2 required");
    JacobiTables t = jacobi_series(4 * m - 2);
    PolyQ Sp = maclaurin_poly(PolyKind::S, 4 * m - 4, t);
    PolyQ Ap = maclaurin_poly(PolyKind::A, 4 * m - 4, t);
    PolyQ Pp = maclaurin_poly(PolyKind::P, 4 * m - 3, t);
    PolyQ R = r_poly(4 * m - 6, t);
    Rational S4 = Sp.eval(Rational(1, 2)), S4d = poly_deriv_at_half(Sp, 1);
    Rational A4 = Ap.eval(Rational(1, 2)), A4d = poly_deriv_at_half(Ap, 1);
    Rational P4 = Pp.eval(Rational(1, 2));
    Rational R0 = R.eval(Rational(1, 2));
    Rational R2 = poly_deriv_at_half(R, 2);
    Rational f = Rational::factorial(4 * m - 6);
    Rational sgn(m % 2 ? 1 : -1); // (-1)^(m-1)

    BerndtCoeffs c;
    c.m = m;
    c.q1 = sgn * Rational::pow2(-6 * m) *
           Rational(-8 * m * m + 14 * m - 6) * f * R0;
    c.q2 = -sgn * Rational::pow2(-6 * m) * Rational(4 * m - 3) * (A4 + S4);
    c.q3 = sgn * Rational::pow2(-(6 * m + 2)) * P4;
    c.q4 = -sgn * Rational::pow2(-(6 * m + 3)) * (S4d + S4 + A4 - A4d);
    c.q5 = sgn * Rational::pow2(-(6 * m + 7)) *
           (Rational(4 * m - 12) * R0 + R2) * f;
    return c;
}

GammaPiExpr assemble_closed_form(const BerndtCoeffs& c) {
    using E = GammaPiExpr;
    int m = (int)c.m;
    E e = E::monomial(c.q1, 0, 8 * m - 8, -(4 * m - 4)) +
          E::monomial(c.q2 / Rational(2), 1, 8 * m - 6, -(4 * m - 3)) +
          E::monomial(c.q3, 0, 8 * m - 4, -(4 * m - 2)) +
          E::monomial(c.q4 / Rational(2), 1, 8 * m - 2, -(4 * m + 1)) +
          E::monomial(c.q5, 0, 8 * m, -(4 * m + 4));
    return e;
}

GammaPiExpr berndt_closed_form(long m) {
    return assemble_closed_form(berndt_coeffs(m));
}

Real building_block_check(Block block, long p, const Rational& x,
                          const Prec& ctx) {
    check_p(p);
    if (!(Rational(0) < x && x < Rational(1)))
        throw std::domain_error("building_block_check: x in (0,1) required");
    long bits = ctx.bits();
    Real xr(x, bits);
    ModularPoint mp = modular_point(xr, ctx);
    Real pi = Real::pi(bits);
    Real w = mp.y * mp.z / pi;
    Real Y = pi * pi / mp.y;
    JacobiTables t = jacobi_series(p + 1);
    Real cx = Real(1, bits) - xr;

    Real lhs(bits), rhs(bits);
    switch (block) {
    case Block::T1:
        lhs = hyper_sum_shape({p - 1, 1, 0, 0, 0, true}, mp.y, ctx);
        rhs = -(pow(mp.z, p) * sqrt(xr) *
                maclaurin_poly(PolyKind::S, p - 1, t).eval(xr)) / 2;
        break;
    case Block::TB:
        lhs = hyper_sum_shape({p - 1, 1, 0, 0, 0, true}, Y, ctx);
        rhs = -(pow(w, p) * sqrt(cx) *
                maclaurin_poly(PolyKind::S, p - 1, t).eval(cx)) / 2;
        break;
    case Block::XD:
        lhs = hyper_sum_shape({p, 1, 0, 0, 0, false}, Y, ctx);
        rhs = -(Real(Rational::factorial(p - 1) * Rational::pow2(-(p + 1)),
                     bits) *
                pow(w, p + 1) * xr * cx * r_poly(p - 1, t).eval(cx));
        break;
    case Block::BH:
        lhs = hyper_sum_shape({p - 1, 0, 1, 0, 0, false}, Y, ctx);
        rhs = Real(Rational::pow2(-p), bits) * pow(w, p) * sqrt(xr) *
              maclaurin_poly(PolyKind::A, p - 1, t).eval(cx);
        break;
    case Block::XC:
        lhs = hyper_sum_shape({p, 0, 1, 0, 0, true}, Y, ctx);
        rhs = -(pow(w, p + 1) * sqrt(xr * cx) *
                maclaurin_poly(PolyKind::P, p, t).eval(cx)) / 2;
        break;
    }
    return abs(lhs - rhs);
}

Real verify_thm4_general_x(Thm4 which, long p, const Rational& x,
                           const Prec& ctx) {
    long sg = check_p(p);
    if (!(Rational(0) < x && x < Rational(1)))
        throw std::domain_error("verify_thm4_general_x: x in (0,1) required");
    long bits = ctx.bits();
    Real xr(x, bits);
    ModularPoint mp = modular_point(xr, ctx);
    Real pi = Real::pi(bits);
    Real y = mp.y, z = mp.z, zp = mp.zprime;
    Real cx = Real(1, bits) - xr;
    Real one(1, bits);
    JacobiTables t = jacobi_series(p + 1);
    using D = Dual<Real>;

    D w{y * z / pi, (-(one / (xr * cx * z)) + y * zp) / pi};
    D sqx{sqrt(xr), one / (2 * sqrt(xr))};
    D sq1mx{sqrt(cx), -(one / (2 * sqrt(cx)))};
    D sqx1mx{sqrt(xr * cx), (1 - 2 * xr) / (2 * sqrt(xr * cx))};
    D x1mx{xr * cx, 1 - 2 * xr};
    auto polyhat = [&](const PolyQ& q) {
        return D{q.eval(cx), -q.derivative().eval(cx)};
    };
    auto dsc = [&](const Real& c, const D& a) { return D{c * a.v, c * a.d}; };
    auto dp = [&](const D& a, long e) { return dpow(a, e, one, Real(bits)); };

    auto TBblk = [&](long pp) {
        D S = polyhat(maclaurin_poly(PolyKind::S, pp - 1, t));
        return dsc(Real(Rational(-1, 2), bits), dp(w, pp) * sq1mx * S);
    };
    auto XDblk = [&](long pp) {
        D R = polyhat(r_poly(pp - 1, t));
        Real c(-Rational::factorial(pp - 1) * Rational::pow2(-(pp + 1)), bits);
        return dsc(c, dp(w, pp + 1) * x1mx * R);
    };
    auto BHblk = [&](long pp) {
        D A = polyhat(maclaurin_poly(PolyKind::A, pp - 1, t));
        return dsc(Real(Rational::pow2(-pp), bits), dp(w, pp) * sqx * A);
    };
    auto XCblk = [&](long pp) {
        D P = polyhat(maclaurin_poly(PolyKind::P, pp, t));
        return dsc(Real(Rational(-1, 2), bits), dp(w, pp + 1) * sqx1mx * P);
    };

    Real w2 = w.v * w.v;
    Real two_pm1(Rational::pow2(p - 1), bits);
    Real two_p(Rational::pow2(p), bits);
    Real lhs(bits), rhs(bits), structured(bits);
    bool have_struct = (p == 5 || p == 9 || p == 13);

    switch (which) {
    case Thm4::DA: {
        lhs = hyper_sum_shape({p, 1, 2, 0, 0, false}, y, ctx);
        D XDd = XDblk(p);
        D TB = TBblk(p);
        Real DTv = -2 * (x1mx.v * w2 * TB.d);
        rhs = sg * (-(pow(pi, p + 1) / pow(y, p + 1)) * XDd.v +
                    Real(p, bits) * pow(pi, p) / (two_pm1 * pow(y, p + 1)) *
                        TB.v -
                    pow(pi, p + 2) / (two_p * pow(y, p + 2)) * DTv);
        if (have_struct) {
            PolyQ Sp = maclaurin_poly(PolyKind::S, p - 1, t);
            Real S = Sp.eval(cx), Sd = -Sp.derivative().eval(cx);
            Real R = r_poly(p - 1, t).eval(cx);
            Real fac(Rational::factorial(p - 1), bits);
            structured =
                sg * (fac / (2 * two_p) * pow(z, p + 1) * x1mx.v * R -
                      Real(p, bits) / two_p * x1mx.v * pow(z, p + 1) * zp *
                          sq1mx.v * S) -
                sg * (one / two_p) * xr * pow(z, p + 2) * sq1mx.v *
                    (-(S / 2) + cx * Sd);
        }
        break;
    }
    case Thm4::DE: {
        lhs = hyper_sum_shape({p - 1, 2, 1, 0, 0, false}, y, ctx);
        D S1 = XDblk(p - 2);
        D TB = TBblk(p);
        Real DXv = -(x1mx.v * w2 * S1.d);
        rhs = sg * (Real(p - 1, bits) * pow(pi, p - 1) / pow(y, p) * S1.v +
                    pow(pi, p) / (two_pm1 * pow(y, p)) * TB.v -
                    pow(pi, p + 1) / pow(y, p + 1) * DXv);
        if (have_struct) {
            Real c1(-Rational::factorial(p - 3) * Rational::pow2(-(p - 1)),
                    bits);
            PolyQ Rq = r_poly(p - 3, t);
            Real R = Rq.eval(cx), Rd = -Rq.derivative().eval(cx);
            Real S1hat = c1 * x1mx.v * R;
            Real S1hatd = c1 * (x1mx.d * R + x1mx.v * Rd);
            Real S = maclaurin_poly(PolyKind::S, p - 1, t).eval(cx);
            structured = pow(z, p) * zp * (sg * Real(p - 1, bits) * x1mx.v *
                                           S1hat) +
                         pow(z, p + 1) * (sg * x1mx.v * S1hatd) +
                         pow(z, p) * sq1mx.v * (-(sg * S) / two_p);
        }
        break;
    }
    case Thm4::DI: {
        lhs = hyper_sum_shape({p, 2, 1, 0, 0, true}, y, ctx);
        D B = BHblk(p);
        D XC = XCblk(p);
        Real DBv = -(x1mx.v * w2 * B.d);
        rhs = sg * (-(pow(pi, p + 1) / pow(y, p + 1)) * XC.v -
                    Real(p, bits) * two_p * pow(pi, p) / pow(y, p + 1) * B.v +
                    two_p * pow(pi, p + 2) / pow(y, p + 2) * DBv);
        if (have_struct) {
            PolyQ Ap = maclaurin_poly(PolyKind::A, p - 1, t);
            Real A = Ap.eval(cx), Ad = -Ap.derivative().eval(cx);
            Real P = maclaurin_poly(PolyKind::P, p, t).eval(cx);
            structured =
                sg * pow(z, p + 1) *
                (sqx1mx.v * P / 2 -
                 Real(p, bits) * x1mx.v * zp * sqx.v * A -
                 z * cx * sqx.v * (A / 2 + xr * Ad));
        }
        break;
    }
    }
    Real res = abs(lhs - rhs);
    if (have_struct) {
        Real rs = abs(lhs - structured);
        if (rs > res) res = rs;
    }
    return res;
}

} // namespace berndt
