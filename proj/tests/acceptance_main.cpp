// Acceptance battery: runs every verification criterion at full scope
// (rank 4 brings in the million-subset brute force) and prints one
// PASS/FAIL line per criterion.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "biclosed/verify.hpp"

int main(int argc, char** argv) {
    int jobs = 0; // hardware concurrency
    for (int i = 1; i < argc; ++i)
        if (std::strncmp(argv[i], "--jobs=", 7) == 0)
            jobs = std::atoi(argv[i] + 7);

    const biclosed::VerificationReport report = biclosed::run_verification(4, jobs);
    std::fputs(biclosed::format_report_lines(report).c_str(), stdout);
    std::printf("%s: %zu/%zu criteria passed\n", report.all_passed ? "OK" : "FAILED",
                static_cast<std::size_t>(
                    std::count_if(report.results.begin(), report.results.end(),
                                  [](const biclosed::CriterionResult& c) { return c.passed; })),
                report.results.size());
    return report.all_passed ? 0 : 1;
}
