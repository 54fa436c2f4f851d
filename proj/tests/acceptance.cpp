// Acceptance suite: runs the numbered verification criteria at full desk
// scale and prints one pass/fail line per criterion. With an argument it runs
// a single criterion (used by ctest to surface each line separately).

#include <cstdio>
#include <cstdlib>

#include "sqfpairs/checks.hpp"

namespace {

int run_one(int id) {
    auto r = sqf::run_check(id, sqf::Scale::desk);
    std::printf("[%s] criterion %2d: %s — %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    return r.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        int id = std::atoi(argv[1]);
        if (id < 1 || id > 11) {
            std::fprintf(stderr, "usage: %s [criterion 1..11]\n", argv[0]);
            return 2;
        }
        return run_one(id);
    }
    int failures = 0;
    for (int id = 1; id <= 11; ++id) failures += run_one(id);
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
