#ifndef BICLOSED_VERIFY_HPP
#define BICLOSED_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace biclosed {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail; // counts checked, or the failure reason
    double seconds = 0.0;
    double budget_seconds = 0.0; // 0 = untimed
};

struct VerificationReport {
    int max_rank = 0;
    bool all_passed = false;
    std::vector<CriterionResult> results;
};

// Runs the full verification battery with every per-criterion scope clamped
// to max_rank (tables up to max_rank + 1 elements). Rank 3 covers every
// always-on check; rank 4 additionally cross-validates the million-subset
// brute force. Criteria with a stated budget also fail when they overrun it.
VerificationReport run_verification(int max_rank, int jobs = 1);

nlohmann::json to_json(const VerificationReport& report);

// "PASS criterion 3: ..." lines, one per criterion.
std::string format_report_lines(const VerificationReport& report);

} // namespace biclosed

#endif
