// Runs the acceptance criteria and prints one line per criterion.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "crystal_lr/suites.hpp"

int main(int argc, char** argv) {
    clr::SuiteConfig cfg;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--quick")) cfg.quick = true;
        else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) cfg.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) cfg.threads = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--quick] [--seed N] [--threads N]\n", argv[0]);
            return 2;
        }
    }
    int failed = 0;
    for (auto& r : clr::acceptance_checks(cfg)) {
        std::printf("%s  [%2d] %-16s %lld cases, %lld failures, %.2fs  (%s)\n", r.pass ? "PASS" : "FAIL", r.criterion,
                    r.name.c_str(), r.cases, r.failures, r.seconds, r.note.c_str());
        if (!r.pass) {
            ++failed;
            std::printf("      first counterexample: %s\n", r.counterexample.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("%d of 13 criteria failed\n", failed);
    return failed ? 1 : 0;
}
