#pragma once

#include <string>
#include <vector>

#include "diskspec/oracle.hpp"

namespace diskspec::verify {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::vector<oracle::Mismatch> mismatches;

    bool ok() const { return passed == total && mismatches.empty(); }
    std::string summary() const;
};

SuiteResult eigen_suite();
SuiteResult spectrum_suite();
SuiteResult geodesic_suite();
SuiteResult scatter_suite();

// Suite names: all, eigen, spectrum, geodesic, scatter. Throws InputError on
// an unknown name.
std::vector<SuiteResult> run(const std::string& suite);

}  // namespace diskspec::verify
