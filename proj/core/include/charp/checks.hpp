#ifndef CHARP_CHECKS_HPP
#define CHARP_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charp/field_tower.hpp"
#include "charp/weierstrass.hpp"

namespace charp {

/// One property line of a check suite.
struct CheckLine {
    std::string name;
    std::uint32_t passed = 0;
    std::uint32_t total = 0;
    bool ok() const { return passed == total; }
};

struct CheckReport {
    std::string suite;
    std::vector<CheckLine> lines;
    bool all_ok() const {
        for (auto& l : lines)
            if (!l.ok()) return false;
        return !lines.empty();
    }
};

// Named property suites, runnable from the CLI (`check <name>`) and reused
// verbatim by the acceptance tests.

CheckReport check_lemma_2_2_4(const TowerPtr& tower, std::uint32_t trials, std::uint64_t seed);
CheckReport check_prop_2_3_4(const TowerPtr& tower, std::uint32_t trials, std::uint64_t seed);
CheckReport check_hp1_base();
CheckReport check_trace_axioms(std::uint32_t trials, std::uint64_t seed);
CheckReport check_weierstrass(const SeriesRingPtr& ring, std::uint32_t trials,
                              std::uint64_t seed);
CheckReport check_solvers(std::uint32_t trials, std::uint64_t seed);
CheckReport check_power_shift(const TowerPtr& tower, std::uint32_t trials, std::uint64_t seed);

const std::vector<std::string>& check_suite_names();

/// Dispatch by suite name; `context` is a tower descriptor (or series-ring
/// descriptor for the weierstrass suite) and may be empty to take the
/// suite's default.
CheckReport run_check_suite(const std::string& name, const std::string& context,
                            std::uint32_t trials, std::uint64_t seed);

}  // namespace charp

#endif
