#include "berndt/verify.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "berndt/barnes.hpp"
#include "berndt/closedform.hpp"
#include "berndt/elliptic.hpp"
#include "berndt/hypseries.hpp"
#include "berndt/jacobi.hpp"
#include "berndt/quad.hpp"

namespace berndt {

bool SuiteReport::all_pass() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

std::string SuiteReport::text() const {
    std::ostringstream os;
    os << "suite " << suite << " (precision " << digits << " digits)\n";
    for (const auto& it : items) {
        char buf[32];
        snprintf(buf, sizeof(buf), "%.2f", it.seconds);
        os << (it.pass ? "PASS" : "FAIL") << "  " << it.name << "  value="
           << it.value << "  tol=" << it.tolerance << "  [" << buf << "s]\n";
    }
    os << (all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return os.str();
}

std::vector<std::string> suite_names() {
    return {"core", "thm31", "thm32", "thm33", "thm4", "thm6", "barnes",
            "all"};
}

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    SuiteReport& rep;
    const Prec& ctx;

    void residual(const std::string& name, const std::function<Real()>& f,
                  long tol_exp) {
        auto t0 = Clock::now();
        CheckItem it;
        it.name = name;
        it.tolerance = "1e-" + std::to_string(tol_exp);
        try {
            Real r = f();
            it.value = r.str(3);
            it.pass = r < Real::pow10(-tol_exp, r.bits());
        } catch (const std::exception& e) {
            it.value = std::string("error: ") + e.what();
            it.pass = false;
        }
        it.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        rep.items.push_back(std::move(it));
    }
    void boolean(const std::string& name, const std::function<bool()>& f) {
        auto t0 = Clock::now();
        CheckItem it;
        it.name = name;
        it.tolerance = "exact";
        try {
            it.pass = f();
            it.value = it.pass ? "ok" : "mismatch";
        } catch (const std::exception& e) {
            it.value = std::string("error: ") + e.what();
            it.pass = false;
        }
        it.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        rep.items.push_back(std::move(it));
    }
    void skipped(const std::string& name, const std::string& why) {
        rep.items.push_back({name, "skipped: " + why, "-", true, 0});
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    std::string s = os.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

void suite_core(Runner& r) {
    const Prec& ctx = r.ctx;
    long bits = ctx.bits();
    r.boolean("series-sn2-plus-cn2", [&] {
        JacobiTables t = jacobi_series(30);
        SeriesU s2 = series_mul(t.sn, t.sn, 30);
        SeriesU c2 = series_mul(t.cn, t.cn, 30);
        for (long k = 0; k <= 30; ++k) {
            PolyQ want = (k == 0) ? PolyQ::constant(Rational(1)) : PolyQ();
            if (s2.at(k) + c2.at(k) != want) return false;
        }
        return true;
    });
    r.boolean("series-dn2-plus-x-sn2", [&] {
        JacobiTables t = jacobi_series(30);
        SeriesU s2 = series_mul(t.sn, t.sn, 30);
        SeriesU d2 = series_mul(t.dn, t.dn, 30);
        for (long k = 0; k <= 30; ++k) {
            PolyQ want = (k == 0) ? PolyQ::constant(Rational(1)) : PolyQ();
            if (d2.at(k) + PolyQ::x() * s2.at(k) != want) return false;
        }
        return true;
    });
    r.residual("legendre-relation", [&] {
        Real worst(bits);
        Real half_pi = Real::pi(bits) / 2;
        for (long i = 1; i <= 9; ++i) {
            Real x(Rational(i, 10), bits);
            Real cx = Real(1, bits) - x;
            Real res = abs(ellE(x, ctx) * ellK(cx, ctx) +
                           ellE(cx, ctx) * ellK(x, ctx) -
                           ellK(x, ctx) * ellK(cx, ctx) - half_pi);
            if (res > worst) worst = res;
        }
        return worst;
    }, ctx.digits - 5);
    r.residual("modular-involution", [&] {
        Real worst(bits);
        Real pi2 = Real::pi(bits) * Real::pi(bits);
        for (long i = 1; i <= 9; ++i) {
            Real x(Rational(i, 10), bits);
            Real res = abs(modular_point(x, ctx).y *
                               modular_point(Real(1, bits) - x, ctx).y -
                           pi2);
            if (res > worst) worst = res;
        }
        return worst;
    }, ctx.digits - 5);
    r.residual("series-vs-closed-form-numeric", [&] {
        Real g = gamma_quarter(ctx);
        Real pi = Real::pi(bits);
        Real worst(bits);
        for (long m = 2; m <= 3; ++m) {
            long p = 4 * m - 3;
            struct Row { HalfTarget t; HypShape s; };
            Row rows[] = {
                {HalfTarget::C, {p, 1, 2, 0, 0, false}},
                {HalfTarget::Cprime, {p - 1, 2, 1, 0, 0, false}},
                {HalfTarget::Cbar, {p, 2, 1, 0, 0, true}},
                {HalfTarget::X3, {p, 3, 0, 0, 0, false}},
            };
            for (const auto& row : rows) {
                Real res = abs(hyper_sum_shape(row.s, pi, ctx) -
                               closed_series_half(row.t, m).eval(ctx, g));
                if (res > worst) worst = res;
            }
        }
        return worst;
    }, ctx.digits - 20);
    r.residual("coefficient-cross-check", [&] {
        Real g = gamma_quarter(ctx);
        Real worst(bits);
        for (long m = 2; m <= 3; ++m) {
            Real res = abs(berndt_closed_form(m).eval(ctx, g) -
                           bridge_series_rhs(4 * m - 3, ctx) / 2);
            if (res > worst) worst = res;
        }
        return worst;
    }, ctx.digits - 20);
    r.residual("series-truncation-soundness", [&] {
        Prec hi{ctx.digits + 10, ctx.guard};
        Real pi_lo = Real::pi(bits);
        Real pi_hi = Real::pi(hi.bits());
        HypShape c52{5, 1, 2, 0, 0, false};
        return abs(hyper_sum_shape(c52, pi_lo, ctx) -
                   hyper_sum_shape(c52, pi_hi, hi));
    }, ctx.digits);
    r.residual("quad-cut-independence", [&] {
        Prec q{15, 14};
        long qb = q.bits();
        QuadResult a = integrate_mixed(Real(5, qb), q, Real(20, qb));
        QuadResult b = integrate_mixed(Real(5, qb), q, Real(40, qb));
        Real budget = a.tail_bound + b.tail_bound + a.quad_error +
                      b.quad_error;
        Real diff = abs(a.value - b.value);
        // normalize: positive means within budget
        return diff < budget ? Real(0, qb) : diff;
    }, 14);
    r.boolean("bernoulli-convention", [&] {
        return bernoulli(1) == Rational(1, 2) &&
               bernoulli(6) == Rational(1, 42) &&
               bernoulli(0) == Rational(1);
    });
}

void suite_thm31(Runner& r) {
    for (long p : {5L, 9L, 13L}) {
        r.residual("integral-series-bridge-p" + std::to_string(p),
                   [&, p] { return verify_thm31(p, r.ctx); }, 30);
    }
}

void suite_thm32(Runner& r) {
    long bits = r.ctx.bits();
    struct AB { long a, b; };
    const AB abs_[] = {{1, 1}, {1, 2}, {2, 3}};
    const char* tn[] = {"CE", "CF", "CG"};
    const Rational thetas[] = {Rational(0), Rational(1, 2), Rational(1)};
    for (int id = 0; id < 3; ++id) {
        for (const auto& ab : abs_) {
            for (const auto& th : thetas) {
                std::string name = std::string("theta-") + tn[id] + "-a" +
                                   std::to_string(ab.a) + "b" +
                                   std::to_string(ab.b) + "-theta" +
                                   th.str();
                r.residual(name, [&, id, ab, th] {
                    return verify_theta_identity(
                        static_cast<ThetaIdentity>(id), Real(ab.a, bits),
                        Real(ab.b, bits), Real(th, bits), r.ctx);
                }, 40);
            }
        }
    }
}

void suite_thm33(Runner& r) {
    long bits = r.ctx.bits();
    const char* tn[] = {"CBB", "CBC", "CBD"};
    for (int id = 0; id < 3; ++id) {
        for (long p : {5L, 7L, 9L}) {
            for (int yi = 0; yi < 3; ++yi) {
                Real y = (yi == 0)   ? Real(2, bits)
                         : (yi == 1) ? Real::pi(bits)
                                     : Real(5, bits);
                const char* yn[] = {"2", "pi", "5"};
                std::string name = std::string("transform-") + tn[id] + "-p" +
                                   std::to_string(p) + "-y" + yn[yi];
                r.residual(name, [&, id, p, y] {
                    return verify_transform(static_cast<TransformIdentity>(id),
                                            p, y, r.ctx);
                }, 35);
            }
        }
    }
}

void suite_thm4(Runner& r) {
    struct BB { Block b; long p; Rational x; const char* n; };
    const BB blocks[] = {
        {Block::T1, 5, Rational(1, 2), "block-T1-p5-x1/2"},
        {Block::TB, 5, Rational(3, 10), "block-TB-p5-x0.3"},
        {Block::XD, 5, Rational(3, 10), "block-XD-p5-x0.3"},
        {Block::BH, 7, Rational(1, 4), "block-BH-p7-x0.25"},
        {Block::XC, 9, Rational(1, 2), "block-XC-p9-x1/2"},
    };
    for (const auto& b : blocks)
        r.residual(b.n, [&, b] {
            return building_block_check(b.b, b.p, b.x, r.ctx);
        }, 35);
    struct TT { Thm4 w; long p; Rational x; const char* n; };
    const TT thms[] = {
        {Thm4::DA, 5, Rational(1, 2), "second-order-DA-p5-x1/2"},
        {Thm4::DA, 9, Rational(3, 10), "second-order-DA-p9-x0.3"},
        {Thm4::DE, 5, Rational(3, 10), "second-order-DE-p5-x0.3"},
        {Thm4::DE, 9, Rational(1, 2), "second-order-DE-p9-x1/2"},
        {Thm4::DI, 5, Rational(2, 5), "second-order-DI-p5-x0.4"},
        {Thm4::DI, 9, Rational(1, 2), "second-order-DI-p9-x1/2"},
        {Thm4::DA, 13, Rational(1, 2), "second-order-DA-p13-x1/2"},
    };
    for (const auto& t : thms)
        r.residual(t.n, [&, t] {
            return verify_thm4_general_x(t.w, t.p, t.x, r.ctx);
        }, 35);
}

void suite_thm6(Runner& r, const std::string& golden_dir) {
    const char* tname[] = {"C", "Cprime", "Cbar", "X3"};
    for (long m = 2; m <= 4; ++m) {
        for (int ti = 0; ti < 4; ++ti) {
            std::string name = std::string("golden-closed-form-") +
                               tname[ti] + "-m" + std::to_string(m);
            if (golden_dir.empty()) {
                r.skipped(name, "no golden directory");
                continue;
            }
            r.boolean(name, [&, m, ti] {
                std::string want =
                    slurp(golden_dir + "/closed_form_" + tname[ti] + "_m" +
                          std::to_string(m) + ".json");
                return closed_series_half(static_cast<HalfTarget>(ti), m)
                           .json() == want;
            });
        }
        std::string bname = "golden-integral-closed-form-m" +
                            std::to_string(m);
        if (golden_dir.empty()) {
            r.skipped(bname, "no golden directory");
        } else {
            r.boolean(bname, [&, m] {
                std::string want = slurp(golden_dir + "/berndt_m" +
                                         std::to_string(m) + ".json");
                return berndt_closed_form(m).json() == want;
            });
        }
    }
    for (long m = 2; m <= 3; ++m) {
        r.residual("integral-vs-closed-form-m" + std::to_string(m), [&, m] {
            long bits = r.ctx.bits();
            Real g = gamma_quarter(r.ctx);
            return abs(integrate_mixed(Real(4 * m - 3, bits), r.ctx).value -
                       berndt_closed_form(m).eval(r.ctx, g));
        }, 30);
    }
}

void suite_barnes(Runner& r) {
    const Prec& ctx = r.ctx;
    long bits = ctx.bits();
    r.residual("one-dim-plain-zeta2", [&] {
        BarnesParams p{1, Real(2, bits),
                       {Real(1, bits), Real(0, bits)},
                       {{Real(1, bits), Real(0, bits)}},
                       {1}};
        Real pi = Real::pi(bits);
        return abs(barnes_zeta(p, ctx).re - pi * pi / 6);
    }, 20);
    r.residual("one-dim-alternating-ln2", [&] {
        BarnesParams p{1, Real(1, bits),
                       {Real(1, bits), Real(0, bits)},
                       {{Real(1, bits), Real(0, bits)}},
                       {-1}};
        return abs(barnes_zeta(p, ctx).re - log(Real(2, bits)));
    }, 20);
    r.residual("laplace-one-dim-zeta2", [&] {
        BarnesParams p{1, Real(2, bits),
                       {Real(1, bits), Real(0, bits)},
                       {{Real(1, bits), Real(0, bits)}},
                       {1}};
        Real pi = Real::pi(bits);
        return abs(barnes_via_laplace(p, ctx).re - pi * pi / 6);
    }, 20);
    r.residual("lattice-vs-laplace-m2", [&] {
        BarnesParams p = c4_params(2, bits);
        Real tail(bits);
        Complex direct = barnes_zeta(p, ctx, &tail);
        Real err(bits);
        Complex lap = barnes_via_laplace(p, ctx, &err);
        Real diff = abs(direct.re - lap.re);
        Real budget = tail + err;
        return diff < budget ? Real(0, bits) : diff;
    }, 4);
    r.residual("laplace-reality-m2", [&] {
        return abs(barnes_via_laplace(c4_params(2, bits), ctx).im);
    }, ctx.digits - 5);
    for (long m = 2; m <= 3; ++m)
        r.residual("integral-barnes-bridge-m" + std::to_string(m),
                   [&, m] { return verify_thm72(m, ctx); }, 25);
}

} // namespace

SuiteReport run_suite(const std::string& suite, const Prec& ctx,
                      const std::string& golden_dir) {
    SuiteReport rep;
    rep.suite = suite;
    rep.digits = ctx.digits;
    Runner r{rep, ctx};
    bool all = suite == "all";
    bool known = false;
    if (all || suite == "core") { suite_core(r); known = true; }
    if (all || suite == "thm31") { suite_thm31(r); known = true; }
    if (all || suite == "thm32") { suite_thm32(r); known = true; }
    if (all || suite == "thm33") { suite_thm33(r); known = true; }
    if (all || suite == "thm4") { suite_thm4(r); known = true; }
    if (all || suite == "thm6") { suite_thm6(r, golden_dir); known = true; }
    if (all || suite == "barnes") { suite_barnes(r); known = true; }
    if (!known) throw std::invalid_argument("unknown suite: " + suite);
    return rep;
}

} // namespace berndt
