// Acceptance suite: runs every criterion and prints one pass/fail line each.
// All expected values are integer counts pinned in code; the tolerance is
// exact equality throughout.

#include <counterpoint/verify.hpp>

#include <cstdio>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv) {
    int jobs = 2;
    for (int i = 1; i < argc - 1; ++i)
        if (std::strcmp(argv[i], "--jobs") == 0) jobs = std::atoi(argv[i + 1]);

    const auto results = counterpoint::run_verification(jobs);
    int failures = 0;
    for (const counterpoint::CheckResult& r : results) {
        if (!r.passed) ++failures;
        std::printf("[%s] criterion %2d: %s — %s\n", r.passed ? "PASS" : "FAIL", r.criterion,
                    r.name.c_str(), r.detail.c_str());
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria FAILED\n", failures, results.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", results.size());
    return 0;
}
