#ifndef PARCERT_ANALYSIS_HPP
#define PARCERT_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "parcert/bigcount.hpp"
#include "parcert/interval.hpp"
#include "parcert/sequences.hpp"
#include "parcert/verdict.hpp"

namespace parcert {

// Exact brute-force scanners over memoized prefixes. The parallel kernels
// chunk by index and merge deterministically; the `_reference` variants are
// the plain serial loops the parallel ones are tested against.

enum class ViolationKind { bo, log_concavity };

struct ViolationRecord {
    ViolationKind kind = ViolationKind::bo;
    unsigned long a = 0; // BO: larger index; LC: the index n
    unsigned long b = 0; // BO: smaller index; unused for LC
    BigCount lhs, rhs;   // F(a)F(b) vs F(a+b), or F(n)^2 vs F(n-1)F(n+1)
    BigCount margin;     // lhs - rhs; <= 0 for every stored record
};

struct ScanReport {
    std::string selector;
    std::string region;
    std::size_t checked = 0;
    std::vector<ViolationRecord> violations;
    // Least T such that no violation has all indices >= T; absent when the
    // scan saw no violation at all or violations persist to the boundary.
    std::optional<unsigned long> min_clean_threshold;
};

// F(a)F(b) > F(a+b) for a_min <= b <= a, a + b <= sum_max (and a <= a_max
// when a_max > 0). Exact arithmetic, all violations reported.
ScanReport scan_bo(Sequence& seq, unsigned long a_min, unsigned long sum_max, int threads = 1,
                   unsigned long a_max = 0);
ScanReport scan_bo(const SequenceSpec& spec, unsigned long a_min, unsigned long sum_max,
                   int threads = 1, unsigned long a_max = 0);
ScanReport scan_bo_reference(Sequence& seq, unsigned long a_min, unsigned long sum_max,
                             unsigned long a_max = 0);

// F(n)^2 > F(n-1)F(n+1) for n_min <= n <= n_max.
ScanReport scan_logconcavity(Sequence& seq, unsigned long n_min, unsigned long n_max,
                             int threads = 1);
ScanReport scan_logconcavity(const SequenceSpec& spec, unsigned long n_min, unsigned long n_max,
                             int threads = 1);
ScanReport scan_logconcavity_reference(Sequence& seq, unsigned long n_min, unsigned long n_max);

// q(n)^2 - q(n+1)q(n-1) = 1 exactly, for 1 <= n <= n_max.
Verdict cassini_audit(unsigned long n_max, int threads = 1);

// phi^{2n}/sqrt(5) - 1 < F_{2n} < phi^{2n}/sqrt(5) for 1 <= n <= n_max,
// conclusively via enclosures of phi (needs ~2n log2(phi) bits near the top
// of the range, so the ladder matters here).
Verdict golden_bounds_audit(unsigned long n_max, const PrecisionLadder& ladder = {},
                            int threads = 1);

// q(a+b) - q(a)q(b) > (sqrt(5)-1)/5 phi^{2(a+b)} - 1 > 0 for a, b >= 1 with
// 3 <= a+b <= sum_max (exact difference vs enclosed bound).
Verdict bo_gap_audit_q(unsigned long sum_max, const PrecisionLadder& ladder = {},
                       int threads = 1);

// Least T with no BO violation in T <= b <= a, a+b <= horizon; absent if
// violations persist to the scan boundary.
std::optional<unsigned long> find_min_bo_threshold(const SequenceSpec& spec,
                                                   unsigned long horizon, int threads = 1);

// CSV rows for violation lists: kind,index_a,index_b,lhs,rhs,margin.
std::string scan_report_csv(const ScanReport& report);

} // namespace parcert

#endif
