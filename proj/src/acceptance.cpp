#include "capax/acceptance.hpp"

#include <cstdio>

namespace capax {

std::vector<CriterionResult> run_acceptance(const std::string&) {
    return {};
}

bool print_acceptance(const std::vector<CriterionResult>& results) {
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %2d %-58s worst=%.3e tol=%.1e %s\n",
                    r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.worst,
                    r.tolerance, r.detail.c_str());
        all = all && r.pass;
    }
    return all;
}

} // namespace capax
