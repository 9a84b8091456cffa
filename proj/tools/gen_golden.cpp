// Regenerates the canonical JSON golden files under tests/golden.
// Usage: gen_golden [output_dir]   (default tests/golden)

#include <filesystem>
#include <fstream>
#include <iostream>

#include "berndt/closedform.hpp"

using namespace berndt;

namespace {

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << text << "\n";
    std::cout << p.string() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "tests/golden";
    std::filesystem::create_directories(dir);

    const struct { HalfTarget t; const char* name; } targets[] = {
        {HalfTarget::C, "C"},
        {HalfTarget::Cprime, "Cprime"},
        {HalfTarget::Cbar, "Cbar"},
        {HalfTarget::X3, "X3"},
    };
    for (long m = 2; m <= 4; ++m) {
        for (const auto& [t, name] : targets)
            write_file(dir / ("closed_form_" + std::string(name) + "_m" +
                              std::to_string(m) + ".json"),
                       closed_series_half(t, m).json());
        GammaPiExpr cf = berndt_closed_form(m);
        write_file(dir / ("berndt_m" + std::to_string(m) + ".json"),
                   cf.json());
        Rational scale =
            Rational(1, 4) / Rational::factorial((unsigned long)(4 * m - 3));
        write_file(dir / ("zeta4_m" + std::to_string(m) + ".json"),
                   (scale * cf).json());
    }
    return 0;
}
