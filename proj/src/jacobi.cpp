#include "berndt/jacobi.hpp"

#include <sstream>

namespace berndt {

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return PolyQ(std::move(c));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return PolyQ(std::move(c));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return PolyQ(std::move(c));
}

PolyQ operator*(const Rational& s, const PolyQ& a) {
    if (s.is_zero()) return PolyQ();
    std::vector<Rational> c = a.c_;
    for (auto& v : c) v *= s;
    return PolyQ(std::move(c));
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<Rational> c(c_.size() - 1, Rational(0));
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rational((long)i) * c_[i];
    return PolyQ(std::move(c));
}

PolyQ PolyQ::compose_one_minus_x() const {
    // Horner in (1 - x)
    PolyQ one_minus_x({Rational(1), Rational(-1)});
    PolyQ r;
    for (size_t i = c_.size(); i-- > 0;)
        r = r * one_minus_x + PolyQ::constant(c_[i]);
    return r;
}

Rational PolyQ::eval(const Rational& v) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
    return r;
}

Real PolyQ::eval(const Real& v) const {
    Real r(v.bits());
    for (size_t i = c_.size(); i-- > 0;) r = r * v + Real(c_[i], v.bits());
    return r;
}

bool PolyQ::integer_coeffs() const {
    for (const auto& c : c_)
        if (c.str_frac().substr(c.str_frac().find('/') + 1) != "1") return false;
    return true;
}

std::string PolyQ::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (os.tellp() > 0) os << (c_[i].sign() < 0 ? " - " : " + ");
        else if (c_[i].sign() < 0) os << "-";
        os << c_[i].abs().str();
        if (i == 1) os << "*x";
        else if (i > 1) os << "*x^" << i;
    }
    return os.str();
}

SeriesU series_mul(const SeriesU& a, const SeriesU& b, long order) {
    SeriesU r;
    r.order = std::min({order, a.order, b.order});
    r.coeffs.assign(r.order + 1, PolyQ());
    for (long i = 0; i <= r.order && i < (long)a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (long j = 0; i + j <= r.order && j < (long)b.coeffs.size(); ++j)
            r.coeffs[i + j] = r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
    }
    r.parity = Parity::None;
    if (a.parity != Parity::None && b.parity != Parity::None)
        r.parity = (a.parity == b.parity) ? Parity::Even : Parity::Odd;
    return r;
}

SeriesU series_inv(const SeriesU& a, long order) {
    long ord = std::min(order, a.order);
    if (a.coeffs.empty() || a.coeffs[0] != PolyQ::constant(Rational(1)))
        throw std::domain_error("series_inv: constant term must be 1");
    SeriesU r;
    r.order = ord;
    r.coeffs.assign(ord + 1, PolyQ());
    r.coeffs[0] = PolyQ::constant(Rational(1));
    for (long n = 1; n <= ord; ++n) {
        PolyQ s;
        for (long k = 1; k <= n && k < (long)a.coeffs.size(); ++k)
            s = s + a.coeffs[k] * r.coeffs[n - k];
        r.coeffs[n] = Rational(-1) * s;
    }
    r.parity = (a.parity == Parity::Even) ? Parity::Even : Parity::None;
    return r;
}

SeriesU series_scale_u(const SeriesU& a, long factor) {
    SeriesU r = a;
    Rational f(1);
    for (long i = 0; i < (long)r.coeffs.size(); ++i) {
        r.coeffs[i] = f * r.coeffs[i];
        f *= Rational(factor);
    }
    return r;
}

JacobiTables jacobi_series(long order) {
    if (order < 2) throw std::domain_error("jacobi_series: order >= 2 required");
    JacobiTables t;
    t.order = order;
    auto init = [&](SeriesU& s, long c0, Parity p) {
        s.order = order;
        s.coeffs.assign(order + 1, PolyQ());
        s.coeffs[0] = c0 ? PolyQ::constant(Rational(c0)) : PolyQ();
        s.parity = p;
    };
    init(t.sn, 0, Parity::Odd);
    init(t.cn, 1, Parity::Even);
    init(t.dn, 1, Parity::Even);
    PolyQ mx = Rational(-1) * PolyQ::x();
    // integrate degree by degree: coeff[d+1] = (rhs product coeff at d)/(d+1)
    for (long d = 0; d < order; ++d) {
        auto conv = [&](const SeriesU& a, const SeriesU& b) {
            PolyQ s;
            for (long k = 0; k <= d; ++k)
                s = s + a.coeffs[k] * b.coeffs[d - k];
            return s;
        };
        Rational inv(1, d + 1);
        t.sn.coeffs[d + 1] = inv * conv(t.cn, t.dn);
        t.cn.coeffs[d + 1] = Rational(-1) * inv * conv(t.sn, t.dn);
        t.dn.coeffs[d + 1] = inv * (mx * conv(t.sn, t.cn));
    }
    SeriesU dn_inv = series_inv(t.dn, order);
    t.nd = dn_inv;
    t.cd = series_mul(t.cn, dn_inv, order);
    t.sd = series_mul(t.sn, dn_inv, order);
    t.sn2 = series_mul(t.sn, t.sn, order);
    return t;
}

PolyQ maclaurin_poly(PolyKind kind, long n, const JacobiTables& t) {
    auto check = [&](long idx, bool even) {
        if (idx < 0 || idx > t.order || (even ? idx % 2 : (idx + 1) % 2))
            throw std::out_of_range("maclaurin_poly: index outside table");
    };
    switch (kind) {
    case PolyKind::S: {
        check(n, true);
        Rational f = Rational::factorial(n) * Rational(n / 2 % 2 ? -1 : 1);
        return f * t.cd.at(n);
    }
    case PolyKind::A: {
        check(n, true);
        Rational f = Rational::factorial(n) * Rational(n / 2 % 2 ? -1 : 1);
        return f * t.nd.at(n);
    }
    case PolyKind::P: {
        check(n, false);
        Rational f = Rational::factorial(n) * Rational((n - 1) / 2 % 2 ? -1 : 1);
        return f * t.sd.at(n);
    }
    case PolyKind::q: {
        check(n, true);
        return Rational::factorial(n) * t.sn2.at(n);
    }
    }
    throw std::logic_error("maclaurin_poly: bad kind");
}

PolyQ r_poly(long n, const JacobiTables& t, RConvention conv) {
    if (n < 2 || n % 2) throw std::domain_error("r_poly: even n >= 2 required");
    PolyQ q = maclaurin_poly(PolyKind::q, n, t); // degree n/2 - 1
    long half = n / 2;
    // q(arg) with arg = -t/(1-t) (Proof/Restated) or t/(1-t) (Display),
    // cleared by (t-1)^(half-1):
    //   (t-1)^(half-1) q(s*t/(1-t)) = (-1)^(half-1) sum_k c_k (s*t)^k (1-t)^(half-1-k)
    long s = (conv == RConvention::Display) ? 1 : -1;
    PolyQ tt = PolyQ::x();
    PolyQ one_minus_t({Rational(1), Rational(-1)});
    PolyQ acc;
    for (long k = 0; k <= half - 1; ++k) {
        Rational ck = q.coeff(k) * Rational(s).pow(k);
        if (ck.is_zero()) continue;
        PolyQ term = PolyQ::constant(ck);
        for (long i = 0; i < k; ++i) term = term * tt;
        for (long i = 0; i < half - 1 - k; ++i) term = term * one_minus_t;
        acc = acc + term;
    }
    Rational scale = Rational(half % 2 ? 1 : -1) / Rational::factorial(n);
    return scale * acc;
}

Rational poly_deriv_at_half(const PolyQ& p, long r) {
    if (r < 0) throw std::domain_error("poly_deriv_at_half: r >= 0 required");
    PolyQ d = p;
    for (long i = 0; i < r; ++i) d = d.derivative();
    return d.eval(Rational(1, 2));
}

Real jacobi_numeric(JacobiFn fn, const Real& u, const Real& x, const Prec& ctx) {
    long bits = ctx.bits();
    if (x.sign() <= 0 || x >= 1)
        throw std::domain_error("jacobi_numeric: x must lie in (0,1)");
    // descending AGM with the phi recursion (Abramowitz & Stegun 16.4)
    std::vector<Real> a{Real(1, bits)}, c{sqrt(x)};
    Real b = sqrt(Real(1, bits) - x);
    Real tol(1, bits);
    mpfr_mul_2si(tol.raw(), tol.raw(), -(bits / 2), MPFR_RNDN);
    while (abs(c.back()) > tol) {
        Real an = (a.back() + b) / 2;
        Real cn = (a.back() - b) / 2;
        b = sqrt(a.back() * b);
        a.push_back(an);
        c.push_back(cn);
        if (a.size() > 200) throw std::runtime_error("jacobi_numeric: no convergence");
    }
    long N = (long)a.size() - 1;
    Real phi = a[N] * u;
    mpfr_mul_2si(phi.raw(), phi.raw(), N, MPFR_RNDN);
    Real phi_next = phi;
    for (long n = N; n >= 1; --n) {
        Real arg = c[n] * sin(phi) / a[n];
        if (arg > 1) arg = Real(1, bits);
        if (arg < -1) arg = -Real(1, bits);
        phi_next = phi;
        phi = (phi + asin(arg)) / 2;
    }
    Real sn = sin(phi), cn = cos(phi);
    Real dn = cn / cos(phi_next - phi);
    if (dn.is_zero()) throw std::domain_error("jacobi_numeric: pole");
    switch (fn) {
    case JacobiFn::sn: return sn;
    case JacobiFn::cd: return cn / dn;
    case JacobiFn::nd: return Real(1, bits) / dn;
    case JacobiFn::sd: return sn / dn;
    }
    throw std::logic_error("jacobi_numeric: bad fn");
}

namespace {

// substitute exact x into a SeriesU, giving rational u-coefficients
std::vector<Rational> at_param(const SeriesU& s, const Rational& x, long order) {
    std::vector<Rational> out(order + 1, Rational(0));
    for (long i = 0; i <= order && i < (long)s.coeffs.size(); ++i)
        out[i] = s.coeffs[i].eval(x);
    return out;
}

std::vector<Rational> rat_mul(const std::vector<Rational>& a,
                              const std::vector<Rational>& b, long order) {
    std::vector<Rational> r(order + 1, Rational(0));
    for (long i = 0; i <= order && i < (long)a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; i + j <= order && j < (long)b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<Rational> rat_inv(const std::vector<Rational>& a, long order) {
    if (a.empty() || a[0].is_zero())
        throw std::domain_error("series inverse: zero constant term");
    std::vector<Rational> r(order + 1, Rational(0));
    Rational inv0 = a[0].inverse();
    r[0] = inv0;
    for (long n = 1; n <= order; ++n) {
        Rational s(0);
        for (long k = 1; k <= n && k < (long)a.size(); ++k) s += a[k] * r[n - k];
        r[n] = -s * inv0;
    }
    return r;
}

} // namespace

Rational deriv_at_zero(DerivExpr expr, long order, const Rational& x,
                       const JacobiTables& t) {
    if (order % 2 == 0 || order < 1)
        throw std::domain_error("deriv_at_zero: odd order required");
    long need = order + 2;
    if (need > t.order) throw std::out_of_range("deriv_at_zero: table too small");

    std::vector<Rational> ratio;
    if (expr == DerivExpr::sn_over_cd) {
        auto sn = at_param(t.sn, x, need);
        auto cd = at_param(t.cd, x, need);
        ratio = rat_mul(sn, rat_inv(cd, need), need);
    } else {
        // sn^2 / (cd^2 * sd(2u)); numerator starts at u^2, denominator at u^1
        auto sn2 = at_param(t.sn2, x, need);
        auto cd = at_param(t.cd, x, need);
        auto sd2 = at_param(series_scale_u(t.sd, 2), x, need);
        auto den = rat_mul(rat_mul(cd, cd, need), sd2, need);
        std::vector<Rational> num_s(sn2.begin() + 2, sn2.end()); // / u^2
        std::vector<Rational> den_s(den.begin() + 1, den.end()); // / u^1
        long ord = (long)num_s.size() - 1;
        auto red = rat_mul(num_s, rat_inv(den_s, ord), ord); // ratio / u
        ratio.assign(order + 1, Rational(0));
        for (long i = 1; i <= order && i - 1 <= ord; ++i) ratio[i] = red[i - 1];
    }
    return Rational::factorial(order) * ratio[order];
}

} // namespace berndt
