// Acceptance suite: runs every verification experiment at its stated
// tolerance and prints one pass/fail line per criterion. Exit code 0 iff
// all pass. Optional argv[1] overrides the golden bounds-table path.

#include "semistrong/repro.hpp"

#include <cstdio>

int main(int argc, char** argv) {
    semistrong::repro::Options opt;
    if (argc > 1) opt.golden_path = argv[1];

    bool all_passed = true;
    for (int i = 1; i <= 10; ++i) {
        const auto r = semistrong::repro::run_criterion(i, opt);
        std::printf("[%s] %-4s %s  (%s)\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        all_passed = all_passed && r.passed;
    }
    std::printf("%s\n", all_passed ? "acceptance: all criteria passed"
                                   : "acceptance: FAILURES present");
    return all_passed ? 0 : 1;
}
