// Acceptance suite: one pass/fail line per criterion; exit code 0 iff all pass.

#include <chrono>
#include <cstdio>

#include "hstar/reproduce.hpp"

int main(int argc, char** argv) {
    std::optional<int> only;
    if (argc > 1) only = std::atoi(argv[1]);
    bool all_ok = true;
    auto t0 = std::chrono::steady_clock::now();
    auto results = hstar::run_acceptance(only);
    for (const auto& r : results) {
        std::printf("[%s] criterion %02d: %s%s%s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.title.c_str(), r.detail.empty() ? "" : " -- ", r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) all_ok = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    std::printf("%zu criteria, %s, %.1fs total\n", results.size(),
                all_ok ? "all passed" : "FAILURES PRESENT",
                std::chrono::duration<double>(t1 - t0).count());
    return all_ok ? 0 : 1;
}
