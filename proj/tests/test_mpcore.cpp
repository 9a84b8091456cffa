#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "berndt/gammapi.hpp"
#include "berndt/rational.hpp"
#include "berndt/real.hpp"

using namespace berndt;

TEST_CASE("rational canonical arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2).pow(-3) == Rational(8));
    CHECK(Rational::factorial(6) == Rational(720));
    CHECK(Rational::binomial(7, 3) == Rational(35));
    CHECK(Rational::pow2(-5) == Rational(1, 32));
    CHECK(Rational(12, 5).two_adic_valuation() == 2);
    CHECK(Rational(5, 12).two_adic_valuation() == -2);
    CHECK(Rational(7).str_frac() == "7/1");
    CHECK(Rational("-15/8192").str() == "-15/8192");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("real precision and functions") {
    Prec ctx{40, 14};
    long bits = ctx.bits();
    Real pi = Real::pi(bits);
    CHECK(pi.str(30).substr(0, 12) == "3.1415926535");
    Real two(2, bits);
    CHECK(abs(sqrt(two) * sqrt(two) - two) < Real("1e-38", bits));
    // round trip through the decimal printer
    Real x("0.125", bits);
    CHECK(Real(x.str(30), bits) == x);
    // upper incomplete gamma at a = 1 is exp(-x)
    Real three(3, bits);
    CHECK(abs(gamma_inc(Real(1, bits), three) - exp(-three)) <
          Real("1e-38", bits));
    CHECK(floor(Real("2.75", bits)) == two);
}

TEST_CASE("complex principal power and exp") {
    long bits = 200;
    Complex z(Real(1, bits), Real(1, bits));
    Complex w = z.pow_negs(Real(2, bits)); // (1+i)^-2 = -i/2
    CHECK(abs(w.re) < Real("1e-55", bits));
    CHECK(abs(w.im + Real(1, bits) / Real(2, bits)) < Real("1e-55", bits));
    Complex e = Complex(Real(0, bits), Real::pi(bits)).cexp();
    CHECK(abs(e.re + Real(1, bits)) < Real("1e-55", bits));
    CHECK(abs(e.im) < Real("1e-55", bits));
}

TEST_CASE("gammapi canonical form") {
    // whole powers of sqrt2 fold into the coefficient
    CHECK(GammaPiExpr::monomial(Rational(3), 2, 1, 1) ==
          GammaPiExpr::monomial(Rational(6), 0, 1, 1));
    CHECK(GammaPiExpr::monomial(Rational(1), -1, 0, 0) ==
          GammaPiExpr::monomial(Rational(1, 2), 1, 0, 0));
    // exact cancellation drops the term
    GammaPiExpr a = GammaPiExpr::monomial(Rational(1, 3), 0, 8, -4);
    CHECK((a - a).empty());
    GammaPiExpr prod =
        GammaPiExpr::monomial(Rational(2), 1, 3, 1) *
        GammaPiExpr::monomial(Rational(5), 1, -1, 2);
    CHECK(prod == GammaPiExpr::monomial(Rational(20), 0, 2, 3));
    CHECK(a.pow(2) == GammaPiExpr::monomial(Rational(1, 9), 0, 16, -8));
    CHECK(a.inverse() * a == GammaPiExpr::constant(Rational(1)));
}

TEST_CASE("gammapi json round trip and eval") {
    GammaPiExpr e = GammaPiExpr::monomial(Rational(5, 1024), 0, 8, -4) +
                    GammaPiExpr::monomial(Rational(-15, 16384), 1, 10, -5);
    std::string j = e.json();
    CHECK(GammaPiExpr::from_json(j) == e);
    CHECK(GammaPiExpr::from_json(j).json() == j);
    CHECK(e.pretty().find("G^8") != std::string::npos);

    Prec ctx{40, 14};
    long bits = ctx.bits();
    // sqrt2 * pi as a monomial
    Real v = GammaPiExpr::monomial(Rational(1), 1, 0, 2)
                 .eval(ctx, Real(1, bits));
    CHECK(abs(v - sqrt(Real(2, bits)) * Real::pi(bits)) <
          Real("1e-38", bits));
    // odd negative pi_halves exercises the sqrt(pi) correction
    Real w = GammaPiExpr::monomial(Rational(1), 0, 0, -1)
                 .eval(ctx, Real(1, bits));
    CHECK(abs(w * sqrt(Real::pi(bits)) - Real(1, bits)) <
          Real("1e-38", bits));
}
