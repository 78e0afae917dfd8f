#ifndef ABEL_REPORT_HPP
#define ABEL_REPORT_HPP

#include <string>

namespace abel {

enum class Verdict { Pass, Fail, Skipped };

// Result of one named verification: the region actually compared, the
// verdict, and on failure a locator for the first discrepancy.
struct VerifyReport {
    std::string check;
    std::string region;
    Verdict verdict = Verdict::Skipped;
    std::string locator;      // nonempty iff verdict == Fail
    std::string skip_reason;  // nonempty iff verdict == Skipped

    bool passed() const { return verdict == Verdict::Pass; }
};

}  // namespace abel

#endif
