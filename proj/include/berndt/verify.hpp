#pragma once

#include <string>
#include <vector>
#include "berndt/real.hpp"

namespace berndt {

struct CheckItem {
    std::string name;
    std::string value; // residual or status
    std::string tolerance;
    bool pass = false;
    double seconds = 0;
};

struct SuiteReport {
    std::string suite;
    long digits = 0;
    std::vector<CheckItem> items;

    bool all_pass() const;
    std::string text() const; // deterministic plain-text report
};

std::vector<std::string> suite_names();

// golden_dir: directory with the canonical closed-form JSON files; when
// empty, golden comparisons are reported as skipped.
SuiteReport run_suite(const std::string& suite, const Prec& ctx,
                      const std::string& golden_dir = "");

} // namespace berndt
