#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "berndt/barnes.hpp"
#include "berndt/closedform.hpp"
#include "berndt/elliptic.hpp"
#include "printed_forms.hpp"

using namespace berndt;

namespace {

const Prec ctx{30, 14};
const long bits = ctx.bits();

BarnesParams one_dim(const Real& s, int sign) {
    BarnesParams p;
    p.N = 1;
    p.s = s;
    p.omega = Complex(Real(1, bits), Real(0, bits));
    p.weights = {Complex(Real(1, bits), Real(0, bits))};
    p.signs = {sign};
    return p;
}

} // namespace

TEST_CASE("one dimensional plain case sums the zeta series") {
    Real tail(bits);
    Complex v = barnes_zeta(one_dim(Real(2, bits), 1), ctx, &tail);
    Real pi = Real::pi(bits);
    CHECK(abs(v.re - pi * pi / Real(6, bits)) < Real("1e-25", bits));
    CHECK(abs(v.im) < Real("1e-28", bits));
    CHECK(tail < Real("1e-28", bits));
}

TEST_CASE("one dimensional alternating case converges below N") {
    // sum over n >= 0 of (-1)^n/(1+n) = ln 2; allowed since Re(s) > N-1
    Complex v = barnes_zeta(one_dim(Real(1, bits), -1), ctx);
    CHECK(abs(v.re - log(Real(2, bits))) < Real("1e-25", bits));
}

TEST_CASE("validation gates") {
    CHECK_THROWS_AS(barnes_zeta(one_dim(Real(1, bits), 1), ctx),
                    std::domain_error);
    BarnesParams p = c4_params(2, bits);
    CHECK(p.N == 4);
    CHECK(p.conjugate_closed());
    CHECK_NOTHROW(p.validate());
    p.s = Real(3, bits);
    CHECK_THROWS_AS(p.validate(), std::domain_error);
}

TEST_CASE("laplace route reproduces the one dimensional value") {
    Real err(bits);
    Complex v = barnes_via_laplace(one_dim(Real(2, bits), 1), ctx, &err);
    Real pi = Real::pi(bits);
    CHECK(abs(v.re - pi * pi / Real(6, bits)) < Real("1e-20", bits));
    CHECK(err < Real("1e-20", bits));
}

TEST_CASE("shell tail bound is honest and shrinks") {
    BarnesParams p = c4_params(2, bits);
    Real t50(bits), t100(bits);
    Complex v50 = barnes_shell_sum(p, 50, ctx, &t50);
    Complex v100 = barnes_shell_sum(p, 100, ctx, &t100);
    CHECK(t100 < t50);
    // the two partial sums must agree within the larger tail bound
    CHECK(abs(v50.re - v100.re) < t50 + t100);
    // and the deeper sum must sit within its own bound of the laplace value
    Real err(bits);
    Complex lap = barnes_via_laplace(p, ctx, &err);
    CHECK(abs(v100.re - lap.re) < t100 + err);
    CHECK(abs(lap.im) < Real("1e-24", bits));
}

TEST_CASE("exact lattice zeta identity against the published table") {
    for (long m : {2L, 3L, 4L}) {
        Rational scale = Rational(1, 4) /
                         Rational::factorial((unsigned long)(4 * m - 3));
        CHECK(scale * berndt_closed_form(m) == printed::zeta4(m));
    }
}

TEST_CASE("laplace value matches the closed form numerically") {
    Real g = gamma_quarter(ctx);
    for (long m : {2L, 3L}) {
        Real err(bits);
        Complex lap = barnes_via_laplace(c4_params(m, bits), ctx, &err);
        Real closed = (Rational(1, 4) /
                       Rational::factorial((unsigned long)(4 * m - 3)) *
                       berndt_closed_form(m))
                          .eval(ctx, g);
        CHECK(abs(lap.re - closed) < Real("1e-25", bits));
    }
}

TEST_CASE("integral bridge at reduced precision") {
    Prec k{25, 14};
    CHECK(verify_thm72(2, k) < Real("1e-20", k.bits()));
}
