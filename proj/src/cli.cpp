#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "berndt/barnes.hpp"
#include "berndt/closedform.hpp"
#include "berndt/elliptic.hpp"
#include "berndt/hypseries.hpp"
#include "berndt/quad.hpp"
#include "berndt/verify.hpp"

using namespace berndt;

namespace {

long default_digits() {
    if (const char* e = std::getenv("BERNDT_PREC")) {
        long d = std::atol(e);
        if (d >= 10) return d;
    }
    return 60;
}

Real parse_y(const std::string& s, long bits) {
    if (s == "pi") return Real::pi(bits);
    return Real(s, bits);
}

int emit(const std::string& text, const std::string& out_file) {
    std::cout << text;
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) {
            std::cerr << "cannot write " << out_file << "\n";
            return 2;
        }
        f << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified evaluation of lemniscatic hyperbolic series, "
                 "their Gamma(1/4)-pi closed forms, the associated "
                 "integrals, and Barnes multiple zeta values"};
    app.require_subcommand(1);
    app.fallthrough();
    long digits = default_digits();
    std::string out_file;
    app.add_option("--prec", digits, "working precision in decimal digits");
    app.add_option("--out", out_file, "also write the report to FILE");

    // closed-form
    auto* cf = app.add_subcommand("closed-form",
                                  "exact five-term closed form of the mixed "
                                  "integral at s = 4m-3");
    long cf_m = 2;
    bool cf_json = false;
    cf->add_option("--m", cf_m, "order parameter m >= 2")->required();
    cf->add_flag("--json", cf_json, "print canonical JSON");

    // series
    auto* se = app.add_subcommand("series",
                                  "certified alternating hyperbolic series "
                                  "evaluation");
    std::string se_family = "C", se_y = "pi";
    long se_p = 5, se_m = 2, se_digits = 0;
    se->add_option("--family", se_family,
                   "C X DX Cprime Cbar T DT Xprime DXprime B DB");
    se->add_option("--p", se_p, "exponent parameter");
    se->add_option("--m", se_m, "denominator order");
    se->add_option("--y", se_y, "argument (number or 'pi')");
    se->add_option("--digits", se_digits, "certified output digits");

    // verify
    auto* ve = app.add_subcommand("verify", "run a verification suite");
    std::string ve_suite = "all";
    ve->add_option("--suite", ve_suite,
                   "core thm31 thm32 thm33 thm4 thm6 barnes all");

    // integral
    auto* in = app.add_subcommand("integral", "certified quadrature");
    std::string in_s, in_sign;
    long in_m = 1;
    in->add_option("--s", in_s, "exponent s")->required();
    in->add_option("--sign", in_sign,
                   "'+' or '-' selects the BI family; omit for the mixed "
                   "integral");
    in->add_option("--order", in_m, "denominator order m for the BI family");

    // barnes
    auto* ba = app.add_subcommand("barnes",
                                  "four-weight multiple zeta value and its "
                                  "integral bridge residual");
    long ba_m = 2;
    ba->add_option("--m", ba_m, "order parameter m >= 2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Prec ctx{digits, 14};
    long bits = ctx.bits();
    std::ostringstream os;
    try {
        if (cf->parsed()) {
            if (cf_m < 2) throw std::domain_error("m >= 2 required");
            GammaPiExpr e = berndt_closed_form(cf_m);
            os << "closed form (m=" << cf_m << ", s=" << 4 * cf_m - 3
               << "): " << e.pretty() << "\n";
            if (cf_json) os << e.json() << "\n";
            os << "value = " << e.eval(ctx, gamma_quarter(ctx)).str(digits)
               << "\n";
        } else if (se->parsed()) {
            static const std::map<std::string, Family> fams = {
                {"C", Family::C},           {"X", Family::X},
                {"DX", Family::DX},         {"Cprime", Family::Cprime},
                {"Cbar", Family::Cbar},     {"T", Family::T},
                {"DT", Family::DT},         {"Xprime", Family::Xprime},
                {"DXprime", Family::DXprime}, {"B", Family::B},
                {"DB", Family::DB}};
            auto it = fams.find(se_family);
            if (it == fams.end())
                throw std::domain_error("unknown family " + se_family);
            long d = se_digits > 0 ? se_digits : digits;
            Prec sctx{d, 14};
            Real y = parse_y(se_y, sctx.bits());
            Real v = hyper_sum({it->second, se_p, se_m}, y, sctx);
            os << "sum(" << se_family << ", p=" << se_p << ", m=" << se_m
               << ", y=" << se_y << ") = " << v.str(d)
               << "  (certified to 1e-" << d << ")\n";
        } else if (ve->parsed()) {
            const char* gd = std::getenv("BERNDT_GOLDEN_DIR");
            SuiteReport rep = run_suite(ve_suite, ctx, gd ? gd : "");
            int rc = emit(rep.text(), out_file);
            if (rc) return rc;
            return rep.all_pass() ? 0 : 1;
        } else if (in->parsed()) {
            Real s(in_s, bits);
            QuadResult q;
            if (in_sign.empty()) {
                q = integrate_mixed(s, ctx);
                os << "mixed integral, s=" << in_s;
            } else if (in_sign == "+" || in_sign == "-") {
                q = integrate_BI(in_sign == "+" ? BISign::Plus : BISign::Minus,
                                 s, in_m, ctx);
                os << "BI" << in_sign << ", s=" << in_s << ", m=" << in_m;
            } else {
                throw std::domain_error("--sign must be '+' or '-'");
            }
            os << "\nvalue      = " << q.value.str(digits)
               << "\ntail bound = " << q.tail_bound.str(3)
               << "\nquad error = " << q.quad_error.str(3)
               << "\ncut        = " << q.cut.str(6)
               << "\nnodes      = " << q.nodes << "\n";
        } else if (ba->parsed()) {
            if (ba_m < 2) throw std::domain_error("m >= 2 required");
            Real err(bits);
            Complex z = barnes_via_laplace(c4_params(ba_m, bits), ctx, &err);
            os << "zeta4(" << 4 * ba_m - 2 << ", 3 | c4) = "
               << z.re.str(digits) << "\nerror bound = " << err.str(3)
               << "\nbridge residual = " << verify_thm72(ba_m, ctx).str(3)
               << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return emit(os.str(), out_file);
}
