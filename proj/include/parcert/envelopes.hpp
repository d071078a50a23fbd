#ifndef PARCERT_ENVELOPES_HPP
#define PARCERT_ENVELOPES_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parcert/config.hpp"
#include "parcert/interval.hpp"
#include "parcert/sequences.hpp"

namespace parcert {

// Analytic sandwich bounds c1(n) e^{f(n)} < F(n) < c2(n) e^{f(n)} evaluated
// as rigorous enclosures, plus certification of the bounds against exact
// sequence values.

using EnvMap = std::function<Interval(unsigned long n, mpfr_prec_t prec)>;

struct BoundEnvelope {
    std::string label;
    unsigned long n0 = 1; // claimed validity start
    // Containment certified only up to here (finite-window calibrations,
    // e.g. the Mahler constants); no value means "up to any horizon".
    std::optional<unsigned long> cert_window_hi;
    EnvMap f, c1, c2;

    Interval lower(unsigned long n, mpfr_prec_t prec) const;
    Interval upper(unsigned long n, mpfr_prec_t prec) const;
};

// mu(n) = pi/6 sqrt(24n - 1)
Interval chen_mu(unsigned long n, mpfr_prec_t prec);

// Lehmer-type bounds for p(n):
//   sqrt(3)/(12n) (1 -+ 1/sqrt(n)) e^{mu(n)}.
// The lower factor is exactly 0 at n = 1.
std::pair<Interval, Interval> lehmer_envelope(unsigned long n, mpfr_prec_t prec);

// Chen-Jia-Wang-type bounds for p(n):
//   sqrt(12)/(24n-1) (1 - 1/mu(n) -+ 1/mu(n)^3) e^{mu(n)},  valid from n = 37.
std::pair<Interval, Interval> chen_envelope(unsigned long n, mpfr_prec_t prec);

// Generalized-binomial bracket t_{-j}(n) < sqrt(n+j) < t_{+j}(n) with
//   t_{+-j}(n) = n^{1/2} + j/2 n^{-1/2} - j^2/8 n^{-3/2} -+ 2|j|^3 n^{-5/2}.
// Requires |j| < n. At j = 0 both sides collapse to sqrt(n).
std::pair<Interval, Interval> binomial_bracket(long j, unsigned long n, mpfr_prec_t prec);

// Wright-form bounds for pp(n):
//   alpha n^{-25/36} (1 -+ beta/sqrt(n)) e^{gamma n^{2/3}}  for n >= n0.
// alpha/beta/gamma are calibration data (exact rationals), certified
// against exact pp values on [n0, 2000]; see config/calibration.cfg.
struct WrightParams {
    Rational alpha, beta, gamma;
    unsigned long n0 = 5;
    static WrightParams defaults();
    static WrightParams from_config(const Config& cfg);
};
std::pair<Interval, Interval> wright_envelope(const WrightParams& params, unsigned long n,
                                              mpfr_prec_t prec);

// Mahler-form bounds for b_m(n): c e^{(log n)^2 / (2 log m)} with constant
// c1/c2 factors. The (1/2, 2) defaults only contain b_m on a short initial
// window; calibrate_window finds it, fit_mahler_constants fits constants
// that work on a requested range instead.
struct MahlerParams {
    unsigned long base = 2;
    Rational c1, c2;
    unsigned long window_lo = 1;
    unsigned long window_hi = 0; // 0 = not yet calibrated
    static MahlerParams defaults(unsigned long m);
    static MahlerParams from_config(const Config& cfg, unsigned long m);
};
std::pair<Interval, Interval> mahler_envelope(const MahlerParams& params, unsigned long n,
                                              mpfr_prec_t prec);

BoundEnvelope make_lehmer_envelope();
BoundEnvelope make_chen_envelope();
BoundEnvelope make_wright_envelope(const WrightParams& params);
BoundEnvelope make_mahler_envelope(const MahlerParams& params);

enum class CheckOutcome { pass, fail, inconclusive };

struct IndexIssue {
    unsigned long n = 0;
    CheckOutcome lower = CheckOutcome::pass;
    CheckOutcome upper = CheckOutcome::pass;
    std::string lower_bound, upper_bound, value; // outward-rounded / exact decimals
};

struct CertificationReport {
    std::string label;
    std::string selector;
    unsigned long n_lo = 0, n_hi = 0;
    bool all_pass = false;
    std::size_t checked = 0;
    std::vector<IndexIssue> issues; // failures and inconclusive indices only
    std::optional<unsigned long> first_failure;
};

// Conclusively verifies lower < F(n) < upper for every n in [n_lo, n_hi],
// escalating precision per index. An index that stays unresolved at the
// precision cap is reported inconclusive, never guessed.
CertificationReport certify_envelope(const BoundEnvelope& env, Sequence& seq, unsigned long n_lo,
                                     unsigned long n_hi, const PrecisionLadder& ladder = {},
                                     int threads = 1);
CertificationReport certify_envelope(const BoundEnvelope& env, const SequenceSpec& spec,
                                     unsigned long n_lo, unsigned long n_hi,
                                     const PrecisionLadder& ladder = {}, int threads = 1);
// Plain serial kernel kept as the reference for the parallel one.
CertificationReport certify_envelope_reference(const BoundEnvelope& env, Sequence& seq,
                                               unsigned long n_lo, unsigned long n_hi,
                                               const PrecisionLadder& ladder = {});

// Largest k <= hi_limit such that containment holds on all of [lo, k];
// nullopt if it already fails at lo.
std::optional<unsigned long> containment_window_end(const BoundEnvelope& env, Sequence& seq,
                                                    unsigned long lo, unsigned long hi_limit,
                                                    const PrecisionLadder& ladder = {});

// Fits constant c1/c2 Mahler factors from exact b_m values on [lo, hi]
// (strictly below the min / above the max of b_m(n) e^{-f(n)}).
MahlerParams fit_mahler_constants(unsigned long m, unsigned long lo, unsigned long hi,
                                  mpfr_prec_t prec = 128);

} // namespace parcert

#endif
