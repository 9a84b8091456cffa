#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "berndt/barnes.hpp"
#include "berndt/closedform.hpp"
#include "berndt/elliptic.hpp"
#include "berndt/hypseries.hpp"
#include "berndt/quad.hpp"
#include "berndt/verify.hpp"

namespace py = pybind11;
using namespace berndt;

namespace {

Prec ctx_of(long digits) { return Prec{digits, 14}; }

Real real_of(const std::string& s, long digits) {
    return Real(s, ctx_of(digits).bits());
}

std::string fmt(const Real& v, long digits) { return v.str(digits); }

HalfTarget target_of(const std::string& name) {
    if (name == "C") return HalfTarget::C;
    if (name == "Cprime") return HalfTarget::Cprime;
    if (name == "Cbar") return HalfTarget::Cbar;
    if (name == "X3") return HalfTarget::X3;
    throw std::invalid_argument("unknown target " + name);
}

Family family_of(const std::string& name) {
    static const std::map<std::string, Family> fams = {
        {"C", Family::C},       {"X", Family::X},
        {"DX", Family::DX},     {"Cprime", Family::Cprime},
        {"Cbar", Family::Cbar}, {"T", Family::T},
        {"DT", Family::DT},     {"Xprime", Family::Xprime},
        {"DXprime", Family::DXprime}, {"B", Family::B},
        {"DB", Family::DB}};
    auto it = fams.find(name);
    if (it == fams.end()) throw std::invalid_argument("unknown family " + name);
    return it->second;
}

} // namespace

PYBIND11_MODULE(_berndt, m) {
    m.doc() = "lemniscatic hyperbolic series, their exact Gamma(1/4)-pi "
              "closed forms, certified integrals, and Barnes zeta values";

    m.def("closed_form_json",
          [](long mm) { return berndt_closed_form(mm).json(); },
          py::arg("m"));
    m.def("closed_form_pretty",
          [](long mm) { return berndt_closed_form(mm).pretty(); },
          py::arg("m"));
    m.def("closed_series_json",
          [](const std::string& target, long mm) {
              return closed_series_half(target_of(target), mm).json();
          },
          py::arg("target"), py::arg("m"));
    m.def("coefficients",
          [](long mm) {
              BerndtCoeffs c = berndt_coeffs(mm);
              return std::vector<std::string>{c.q1.str_frac(), c.q2.str_frac(),
                                              c.q3.str_frac(), c.q4.str_frac(),
                                              c.q5.str_frac()};
          },
          py::arg("m"));
    m.def("closed_form_value",
          [](long mm, long digits) {
              Prec ctx = ctx_of(digits);
              return fmt(berndt_closed_form(mm).eval(ctx, gamma_quarter(ctx)),
                         digits);
          },
          py::arg("m"), py::arg("digits") = 40);
    m.def("hyper_sum",
          [](const std::string& family, long p, long mm, const std::string& y,
             long digits) {
              Prec ctx = ctx_of(digits);
              Real yr = (y == "pi") ? Real::pi(ctx.bits())
                                    : Real(y, ctx.bits());
              return fmt(hyper_sum({family_of(family), p, mm}, yr, ctx),
                         digits);
          },
          py::arg("family"), py::arg("p"), py::arg("m"), py::arg("y") = "pi",
          py::arg("digits") = 40);
    m.def("integrate_mixed",
          [](const std::string& s, long digits) {
              Prec ctx = ctx_of(digits);
              QuadResult q = integrate_mixed(real_of(s, digits), ctx);
              return py::make_tuple(fmt(q.value, digits),
                                    fmt(q.tail_bound + q.quad_error, 3));
          },
          py::arg("s"), py::arg("digits") = 40);
    m.def("gamma_quarter",
          [](long digits) {
              return fmt(gamma_quarter(ctx_of(digits)), digits);
          },
          py::arg("digits") = 40);
    m.def("ramanujan_sine",
          [](long n, long digits) {
              return fmt(ramanujan_sine(n, ctx_of(digits)), digits);
          },
          py::arg("n"), py::arg("digits") = 25);
    m.def("barnes_value",
          [](long mm, long digits) {
              Prec ctx = ctx_of(digits);
              Complex z = barnes_via_laplace(c4_params(mm, ctx.bits()), ctx);
              return fmt(z.re, digits);
          },
          py::arg("m"), py::arg("digits") = 30);
    m.def("run_suite",
          [](const std::string& suite, long digits) {
              SuiteReport rep = run_suite(suite, ctx_of(digits));
              return py::make_tuple(rep.all_pass(), rep.text());
          },
          py::arg("suite"), py::arg("digits") = 30);
}
