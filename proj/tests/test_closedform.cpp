#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "berndt/closedform.hpp"
#include "printed_forms.hpp"

using namespace berndt;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    std::string s = os.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

std::string golden(const std::string& name) {
    return slurp(std::string(BERNDT_GOLDEN_DIR) + "/" + name);
}

} // namespace

TEST_CASE("integral coefficients are the exact published rationals") {
    for (long m : {2L, 3L, 4L}) {
        BerndtCoeffs c = berndt_coeffs(m);
        auto ref = printed::integral_coeffs(m);
        CHECK(c.q1 == ref[0]);
        CHECK(c.q2 == ref[1]);
        CHECK(c.q3 == ref[2]);
        CHECK(c.q4 == ref[3]);
        CHECK(c.q5 == ref[4]);
    }
}

TEST_CASE("series closed forms equal the published expressions") {
    for (long m : {2L, 3L, 4L}) {
        CHECK(closed_series_half(HalfTarget::C, m) == printed::series_C(m));
        CHECK(closed_series_half(HalfTarget::Cprime, m) ==
              printed::series_Cprime(m));
        CHECK(closed_series_half(HalfTarget::Cbar, m) ==
              printed::series_Cbar(m));
    }
}

TEST_CASE("canonical JSON matches the golden files byte for byte") {
    const struct { HalfTarget t; const char* n; } ts[] = {
        {HalfTarget::C, "C"},
        {HalfTarget::Cprime, "Cprime"},
        {HalfTarget::Cbar, "Cbar"},
        {HalfTarget::X3, "X3"}};
    for (long m : {2L, 3L, 4L}) {
        std::string ms = std::to_string(m);
        for (const auto& t : ts)
            CHECK(closed_series_half(t.t, m).json() ==
                  golden("closed_form_" + std::string(t.n) + "_m" + ms +
                         ".json"));
        CHECK(berndt_closed_form(m).json() == golden("berndt_m" + ms + ".json"));
        Rational scale = Rational(1, 4) /
                         Rational::factorial((unsigned long)(4 * m - 3));
        CHECK((scale * berndt_closed_form(m)).json() ==
              golden("zeta4_m" + ms + ".json"));
    }
}

TEST_CASE("building block identities at generic parameters") {
    Prec ctx{40, 14};
    const struct { Block b; long p; Rational x; } cases[] = {
        {Block::T1, 5, Rational(1, 2)},  {Block::T1, 9, Rational(3, 10)},
        {Block::TB, 5, Rational(2, 5)},  {Block::XD, 7, Rational(1, 2)},
        {Block::XD, 11, Rational(3, 10)}, {Block::BH, 5, Rational(2, 5)},
        {Block::BH, 9, Rational(1, 2)},  {Block::XC, 5, Rational(1, 2)},
        {Block::XC, 9, Rational(7, 10)}};
    for (const auto& c : cases) {
        Real res = building_block_check(c.b, c.p, c.x, ctx);
        CHECK(res < Real("1e-35", ctx.bits()));
    }
}

TEST_CASE("second order closed forms at general x") {
    Prec hi{50, 14};
    CHECK(verify_thm4_general_x(Thm4::DA, 5, Rational(1, 2), hi) <
          Real("1e-40", hi.bits()));
    CHECK(verify_thm4_general_x(Thm4::DE, 5, Rational(3, 10), hi) <
          Real("1e-35", hi.bits()));
    CHECK(verify_thm4_general_x(Thm4::DI, 9, Rational(1, 2), hi) <
          Real("1e-40", hi.bits()));
}

TEST_CASE("domain gates") {
    CHECK_THROWS_AS(berndt_coeffs(1), std::domain_error);
    CHECK_THROWS_AS(closed_series_half(HalfTarget::C, 1), std::domain_error);
    CHECK_THROWS_AS(verify_thm4_general_x(Thm4::DA, 6, Rational(1, 2),
                                          Prec{20, 14}),
                    std::domain_error);
}
