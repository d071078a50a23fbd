#ifndef PARCERT_CRITERIA_HPP
#define PARCERT_CRITERIA_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "parcert/config.hpp"
#include "parcert/envelopes.hpp"
#include "parcert/interval.hpp"
#include "parcert/sequences.hpp"
#include "parcert/verdict.hpp"

namespace parcert {

// Executable criteria. The envelope-based conditions are checked with
// rigorous intervals and per-comparison precision escalation; every
// conclusion-level statement (Bessenrodt-Ono products, log-concavity,
// ratio descent) is verified with exact integer arithmetic only.

struct BOCriterionInputs {
    BoundEnvelope env;
    EnvMap g, h;
    unsigned long n1 = 1; // condition 1 claimed from here
    unsigned long n2 = 1; // condition 2 claimed from here
    // Claimed start for condition 3 (the check also discovers the actual
    // minimal threshold within the horizon).
    std::optional<unsigned long> n3_claimed;
};

struct LCCriterionInputs {
    BoundEnvelope env;
    EnvMap h;
    unsigned long n1 = 1;
    unsigned long n2 = 1;
    // Optional sufficient closing inequality lhs(n) >= rhs(n) tied to a
    // preset, with its own threshold discovery.
    EnvMap closing_lhs, closing_rhs;
    unsigned long closing_scan_lo = 2;
    std::optional<unsigned long> closing_claimed;
};

// Condition 1: f(a) + f(b) - f(a+b) >= g(b) for all n1 <= b <= a <= horizon.
Verdict check_bo_condition1(const BOCriterionInputs& in, unsigned long horizon,
                            const PrecisionLadder& ladder = {}, int threads = 1);

// Condition 2: c2(a+b)/c1(a) <= h(b) for all n2 <= b <= a <= horizon.
Verdict check_bo_condition2(const BOCriterionInputs& in, unsigned long horizon,
                            const PrecisionLadder& ladder = {}, int threads = 1);

// Condition 3: g(n) >= log h(n) - log c1(n), checked on the claimed range
// and minimal-threshold-searched over [1, horizon]: discovered_threshold is
// the least T whose whole suffix [T, horizon] conclusively passes.
Verdict check_bo_condition3(const BOCriterionInputs& in, unsigned long horizon,
                            const PrecisionLadder& ladder = {}, int threads = 1);
Tri check_bo_condition3_at(const BOCriterionInputs& in, unsigned long n,
                           const PrecisionLadder& ladder = {});

struct BOCriterionReport {
    std::string id;
    Verdict cond1, cond2, cond3;
    CertificationReport cert;
    unsigned long combined_threshold = 0; // max{N0, N1, N2, discovered N3}
    Verdict conclusion;                   // exact F(a)F(b) > F(a+b) scan
    VerdictStatus overall = VerdictStatus::inconclusive;
};

// Runs conditions 1-3, certifies the envelope (over its window when the
// calibration is finite), then exhaustively re-verifies the product
// inequality with exact arithmetic for all combined <= b <= a <= horizon.
BOCriterionReport run_bo_criterion(const BOCriterionInputs& in, const SequenceSpec& spec,
                                   unsigned long horizon, const PrecisionLadder& ladder = {},
                                   int threads = 1);

struct LCCriterionReport {
    std::string id;
    Verdict cond1; // h(n) <= 2f(n) - f(n-1) - f(n+1)
    Verdict cond2; // c2(n+1)c2(n-1)/c1(n)^2 <= e^{h(n)}
    std::optional<Verdict> closing;
    CertificationReport cert;
    unsigned long combined_threshold = 0;
    Verdict conclusion;                            // exact F(n)^2 > F(n-1)F(n+1)
    std::optional<unsigned long> exact_min_clean;  // from the full exact scan
    VerdictStatus overall = VerdictStatus::inconclusive;
};

LCCriterionReport run_lc_criterion(const LCCriterionInputs& in, const SequenceSpec& spec,
                                   unsigned long horizon, const PrecisionLadder& ladder = {},
                                   int threads = 1);

// Exact ratio descent F(n)/F(n-1) > F(n+1)/F(n) for n0 < n <= horizon,
// verified with exact rational comparisons.
Verdict check_ratio_descent(const SequenceSpec& spec, unsigned long n0, unsigned long horizon);

struct AnchoredImplicationReport {
    Verdict hypothesis; // F(n) F(n0) > F(n+n0) for n0 <= n <= horizon
    Verdict conclusion; // F(a) F(b) > F(a+b) for n0 <= b <= a <= horizon - n0
    VerdictStatus overall = VerdictStatus::inconclusive;
};
AnchoredImplicationReport check_anchored_implication(const SequenceSpec& spec, unsigned long n0, unsigned long horizon);

struct SeededImplicationReport {
    BigCount f0;
    bool f0_at_least_one = false;
    Verdict log_concavity; // strict, on [1, horizon]
    Verdict conclusion;    // F(a)F(b) > F(a+b) for 1 <= b <= a, a+b <= horizon
    VerdictStatus overall = VerdictStatus::inconclusive;
};
SeededImplicationReport check_seeded_implication(const SequenceSpec& spec, unsigned long horizon);

// Finite probe of limsup f(n+n0)/f(n) < f(n0): exact rational ratios over
// (n0, horizon], maxima over consecutive trailing windows. Explicitly not a
// decision procedure; the status speaks only about the scanned range.
enum class ProbeStatus { plausible, violated_on_window, inconclusive };

struct ProbeReport {
    ProbeStatus status = ProbeStatus::inconclusive;
    unsigned long n0 = 0, horizon = 0, window_size = 0;
    Rational f_n0;
    Rational trailing_max;
    std::optional<Rational> previous_max;
    std::vector<Rational> window_maxima; // oldest window first
    std::string note;
};

ProbeReport limsup_probe(const SequenceSpec& spec, unsigned long n0, unsigned long horizon,
                         double window_fraction = 0.25);
ProbeReport limsup_probe_fn(const std::function<BigCount(std::size_t)>& f, unsigned long n0,
                            unsigned long horizon, double window_fraction = 0.25);

// Named instances wiring envelopes, g, h and thresholds together.
struct BOPreset {
    std::string id;
    SequenceSpec seq;
    BOCriterionInputs inputs;
};
struct LCPreset {
    std::string id;
    SequenceSpec seq;
    LCCriterionInputs inputs;
};
using CriterionPreset = std::variant<BOPreset, LCPreset>;

// Known ids: bo-euler-example21, bo-planepartition, bo-mary, lc-chen.
// mary_base selects m for bo-mary; cfg may override calibrations.
CriterionPreset make_preset(const std::string& id, const Config& cfg = {},
                            unsigned long mary_base = 2);
std::vector<std::string> preset_ids();

} // namespace parcert

#endif
