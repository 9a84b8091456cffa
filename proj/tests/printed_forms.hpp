#pragma once

// Reference constants typed directly from the published tables, kept
// separate from the library so the assembled expressions are compared
// against an independent transcription.

#include <array>
#include <stdexcept>

#include "berndt/gammapi.hpp"

namespace printed {

using berndt::GammaPiExpr;
using berndt::Rational;

inline GammaPiExpr mono(const Rational& c, int tw, int g, int ph) {
    return GammaPiExpr::monomial(c, tw, g, ph);
}

// Closed forms of the three second-order lemniscatic series, m = 2, 3, 4.
inline GammaPiExpr series_C(long m) {
    switch (m) {
    case 2:
        return mono(Rational(15, 16384), 1, 10, -17) +
               mono(Rational(-7, 131072), 1, 14, -21);
    case 3:
        return mono(Rational(-3969, 16777216), 1, 18, -29) +
               mono(Rational(1809, 134217728), 1, 22, -33);
    case 4:
        return mono(Rational("5756751/17179869184"), 1, 26, -41) +
               mono(Rational("-2630583/137438953472"), 1, 30, -45);
    }
    throw std::domain_error("series_C: m out of range");
}

inline GammaPiExpr series_Cprime(long m) {
    switch (m) {
    case 2:
        return mono(Rational(-1, 256), 0, 8, -14) +
               mono(Rational(3, 8192), 1, 10, -15);
    case 3:
        return mono(Rational(9, 16384), 0, 16, -26) +
               mono(Rational(-441, 8388608), 1, 18, -27);
    case 4:
        return mono(Rational(-567, 1048576), 0, 24, -38) +
               mono(Rational("442827/8589934592"), 1, 26, -39);
    }
    throw std::domain_error("series_Cprime: m out of range");
}

inline GammaPiExpr series_Cbar(long m) {
    switch (m) {
    case 2:
        return mono(Rational(15, 512), 1, 10, -17) +
               mono(Rational(-3, 256), 0, 12, -18) +
               mono(Rational(7, 4096), 1, 14, -21);
    case 3:
        return mono(Rational(-3969, 32768), 1, 18, -29) +
               mono(Rational(189, 4096), 0, 20, -30) +
               mono(Rational(-1809, 262144), 1, 22, -33);
    case 4:
        return mono(Rational(5756751, 2097152), 1, 26, -41) +
               mono(Rational(-68607, 65536), 0, 28, -42) +
               mono(Rational(2630583, 16777216), 1, 30, -45);
    }
    throw std::domain_error("series_Cbar: m out of range");
}

// Integral coefficients (q1..q5) for s = 4m-3.
inline std::array<Rational, 5> integral_coeffs(long m) {
    switch (m) {
    case 2:
        return {Rational(5, 1024), Rational(-15, 8192), Rational(3, 16384),
                Rational(-7, 65536), Rational(1, 65536)};
    case 3:
        return {Rational(81, 16384), Rational(-3969, 2097152),
                Rational(189, 1048576), Rational(-1809, 16777216),
                Rational(17, 1048576)};
    case 4:
        return {Rational(7371, 262144), Rational("-5756751/536870912"),
                Rational("68607/67108864"), Rational("-2630583/4294967296"),
                Rational(1539, 16777216)};
    }
    throw std::domain_error("integral_coeffs: m out of range");
}

// Four-weight multiple zeta values zeta4(4m-2, 3 | c4), m = 2, 3, 4.
inline GammaPiExpr zeta4(long m) {
    switch (m) {
    case 2:
        return mono(Rational(1, 98304), 0, 8, -4) +
               mono(Rational(-1, 524288), 1, 10, -5) +
               mono(Rational(1, 2621440), 0, 12, -6) +
               mono(Rational(-7, 62914560), 1, 14, -9) +
               mono(Rational(1, 31457280), 0, 16, -12);
    case 3:
        return mono(Rational(1, 293601280), 0, 16, -8) +
               mono(Rational("-7/10737418240"), 1, 18, -9) +
               mono(Rational("1/8053063680"), 0, 20, -10) +
               mono(Rational("-67/1803886264320"), 1, 22, -13) +
               mono(Rational("17/1522029035520"), 0, 24, -16);
    case 4:
        return mono(Rational("1/885837004800"), 0, 24, -12) +
               mono(Rational("-71/329853488332800"), 1, 26, -13) +
               mono(Rational("11/268005959270400"), 0, 28, -14) +
               mono(Rational("-97429/7924400203707187200"), 1, 30, -17) +
               mono(Rational("19/5159114715955200"), 0, 32, -20);
    }
    throw std::domain_error("zeta4: m out of range");
}

} // namespace printed
