#ifndef PARCERT_VERDICT_HPP
#define PARCERT_VERDICT_HPP

#include <optional>
#include <string>
#include <vector>

namespace parcert {

enum class VerdictStatus { verified, refuted, inconclusive };

// A concrete failing (or unresolved) instance: single index `a`, or a pair
// (a, b) with b <= a. lhs/rhs hold exact decimals or outward-rounded
// interval endpoints, depending on the check.
struct Witness {
    unsigned long a = 0;
    std::optional<unsigned long> b;
    std::string lhs, rhs;
    std::string note;
};

// Outcome of one finite check. `verified` never claims more than the range
// [checked_lo, checked_hi] that was actually scanned; `refuted` always
// carries at least one witness; unresolved comparisons (precision cap hit)
// are listed separately and force `inconclusive` at best.
struct Verdict {
    std::string label;
    VerdictStatus status = VerdictStatus::verified;
    unsigned long checked_lo = 0;
    unsigned long checked_hi = 0;
    std::vector<Witness> witnesses;
    std::vector<Witness> unresolved;
    std::optional<unsigned long> discovered_threshold;
    std::string note;

    bool ok() const { return status == VerdictStatus::verified; }
};

inline VerdictStatus combine(VerdictStatus x, VerdictStatus y) {
    if (x == VerdictStatus::refuted || y == VerdictStatus::refuted)
        return VerdictStatus::refuted;
    if (x == VerdictStatus::inconclusive || y == VerdictStatus::inconclusive)
        return VerdictStatus::inconclusive;
    return VerdictStatus::verified;
}

inline const char* to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::verified:
        return "verified";
    case VerdictStatus::refuted:
        return "refuted";
    case VerdictStatus::inconclusive:
        return "inconclusive";
    }
    return "?";
}

} // namespace parcert

#endif
