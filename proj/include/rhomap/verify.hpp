// One-shot verification suites: every module's invariant sweep as a named
// check with a pass/fail status and a counterexample description on failure.
#ifndef RHOMAP_VERIFY_HPP
#define RHOMAP_VERIFY_HPP

#include <string>
#include <vector>

namespace rhomap {

enum class Budget { small, full };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample or measured value
};

std::vector<CheckResult> verify_words(Budget b = Budget::small);
std::vector<CheckResult> verify_map(Budget b = Budget::small);
std::vector<CheckResult> verify_fibers(Budget b = Budget::small);
std::vector<CheckResult> verify_graph(Budget b = Budget::small);
std::vector<CheckResult> verify_chaos(Budget b = Budget::small);
std::vector<CheckResult> verify_all(Budget b = Budget::small);

}  // namespace rhomap

#endif  // RHOMAP_VERIFY_HPP
