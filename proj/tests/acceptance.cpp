// Acceptance suite: one line per criterion, full stated scale.
// Exit code is the number of failing criteria.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "parcert/analysis.hpp"
#include "parcert/criteria.hpp"
#include "parcert/envelopes.hpp"
#include "parcert/report.hpp"
#include "parcert/sequences.hpp"

using namespace parcert;
namespace oracle = parcert::testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void run(const char* name, const std::function<Outcome()>& fn) {
    Outcome out;
    try {
        out = fn();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    if (!out.pass) ++g_failures;
    std::printf("[%s] %s%s%s\n", out.pass ? "PASS" : "FAIL", name,
                out.detail.empty() ? "" : " — ", out.detail.c_str());
    std::fflush(stdout);
}

bool contained_in(const Interval& inner, const Interval& outer) {
    return mpfr_cmp(outer.lo().raw(), inner.lo().raw()) <= 0 &&
           mpfr_cmp(inner.hi().raw(), outer.hi().raw()) <= 0;
}

constexpr int kThreads = 4;

} // namespace

int main() {
    Sequence euler(SequenceSpec::euler(), kThreads);
    euler.ensure(2000);
    Sequence plane(SequenceSpec::plane(), kThreads); // fill runs the dual routes

    run("C1 exact values (p(26), enumeration oracle to 100, plane dual to 2000)", [&] {
        Outcome o;
        if (euler.at(26) != 2436) {
            o.detail = "p(26) = " + to_decimal(euler.at(26));
            return o;
        }
        auto expected = oracle::partition_counts_by_largest_part(100);
        for (std::size_t n = 0; n <= 100; ++n)
            if (euler.at(n) != expected[n]) {
                o.detail = "p(" + std::to_string(n) + ") mismatch vs oracle";
                return o;
            }
        plane.ensure(2000); // internal cross-check of both routes
        auto sigma = plane_prefix_sigma(2000);
        for (std::size_t n = 0; n <= 2000; ++n)
            if (plane.at(n) != sigma[n]) {
                o.detail = "pp(" + std::to_string(n) + ") route disagreement";
                return o;
            }
        o.pass = true;
        o.detail = "pp(2000) has " + std::to_string(to_decimal(plane.at(2000)).size()) +
                   " digits, routes agree";
        return o;
    });

    run("C2 BO boundary for p: violations exactly in a+b <= 9", [&] {
        Outcome o;
        auto rep = scan_bo(euler, 2, 100, kThreads);
        if (rep.violations.empty()) {
            o.detail = "no violations found";
            return o;
        }
        for (const auto& v : rep.violations)
            if (v.a + v.b > 9) {
                o.detail = "violation beyond the line at (" + std::to_string(v.a) + "," +
                           std::to_string(v.b) + ")";
                return o;
            }
        // and the full corner is accounted for: re-derive from exact values
        std::size_t corner = 0;
        for (unsigned long b = 2; b <= 4; ++b)
            for (unsigned long a = b; a + b <= 9; ++a)
                if (!(euler.at(a) * euler.at(b) > euler.at(a + b))) ++corner;
        if (corner != rep.violations.size()) {
            o.detail = "violation set does not match the exact corner";
            return o;
        }
        o.pass = true;
        o.detail = std::to_string(rep.violations.size()) + " violations, all with a+b <= 9";
        return o;
    });

    run("C3 euler condition-3 minimal threshold 15 within horizon 500, failing at 14", [&] {
        Outcome o;
        auto preset = std::get<BOPreset>(make_preset("bo-euler-example21"));
        auto v = check_bo_condition3(preset.inputs, 500);
        bool fails_at_14 = check_bo_condition3_at(preset.inputs, 14) == Tri::no;
        bool threshold_is_15 = v.discovered_threshold && *v.discovered_threshold == 15;
        std::ostringstream os;
        os << "discovered threshold "
           << (v.discovered_threshold ? std::to_string(*v.discovered_threshold) : "none")
           << " (required 15), condition at n=14 " << (fails_at_14 ? "fails" : "does not fail");
        o.detail = os.str();
        o.pass = threshold_is_15 && fails_at_14;
        return o;
    });

    run("C4 envelope certification: chen on [37,1000], lehmer on [2,1000]", [&] {
        Outcome o;
        auto chen = certify_envelope(make_chen_envelope(), euler, 37, 1000, {}, kThreads);
        auto lehmer = certify_envelope(make_lehmer_envelope(), euler, 2, 1000, {}, kThreads);
        o.pass = chen.all_pass && lehmer.all_pass;
        o.detail = "chen " + std::string(chen.all_pass ? "pass" : "FAIL") + ", lehmer " +
                   (lehmer.all_pass ? "pass" : "FAIL");
        return o;
    });

    run("C5 log-concavity of p: scan threshold 26; lc-chen closing holds on [94,500]", [&] {
        Outcome o;
        auto scan = scan_logconcavity(euler, 2, 500, kThreads);
        bool scan_ok = scan.min_clean_threshold && *scan.min_clean_threshold == 26;
        auto preset = std::get<LCPreset>(make_preset("lc-chen"));
        auto rep = run_lc_criterion(preset.inputs, preset.seq, 500, {}, kThreads);
        bool closing_ok = rep.closing && rep.closing->ok() && rep.closing->discovered_threshold &&
                          *rep.closing->discovered_threshold == 94;
        Tri below = resolve(PrecisionLadder{}, [&](mpfr_prec_t p) {
            return ge(preset.inputs.closing_lhs(93, p), preset.inputs.closing_rhs(93, p));
        });
        bool fails_below = below == Tri::no;
        bool exact_ok = rep.exact_min_clean && *rep.exact_min_clean == 26 &&
                        rep.conclusion.ok() && rep.overall == VerdictStatus::verified;
        o.pass = scan_ok && closing_ok && fails_below && exact_ok;
        std::ostringstream os;
        os << "scan threshold "
           << (scan.min_clean_threshold ? std::to_string(*scan.min_clean_threshold) : "none")
           << ", closing threshold "
           << (rep.closing && rep.closing->discovered_threshold
                   ? std::to_string(*rep.closing->discovered_threshold)
                   : "none")
           << ", fails at 93: " << (fails_below ? "yes" : "no");
        o.detail = os.str();
        return o;
    });

    run("C6 fibonacci suite: cassini 10^4, golden bounds 500, bo-gap 40", [&] {
        Outcome o;
        auto cassini = cassini_audit(10000, kThreads);
        auto golden = golden_bounds_audit(500, {}, kThreads);
        auto gap = bo_gap_audit_q(40, {}, kThreads);
        o.pass = cassini.ok() && golden.ok() && gap.ok();
        o.detail = std::string("cassini ") + to_string(cassini.status) + ", golden " +
                   to_string(golden.status) + ", gap " + to_string(gap.status);
        return o;
    });

    run("C7 m-ary suite: violations at n = -1 mod m; min BO threshold for m=2", [&] {
        Outcome o;
        for (unsigned long m : {2ul, 3ul, 5ul}) {
            auto rep = scan_logconcavity(SequenceSpec::mary(m), 2, 1000, kThreads);
            std::vector<bool> violated(1001, false);
            for (const auto& v : rep.violations)
                violated[v.a] = true;
            for (unsigned long n = 2; n <= 1000; ++n)
                if (n % m == m - 1 && !violated[n]) {
                    o.detail = "missing violation at n = " + std::to_string(n) +
                               " for m = " + std::to_string(m);
                    return o;
                }
        }
        auto t = find_min_bo_threshold(SequenceSpec::mary(2), 2000, kThreads);
        if (!t) {
            o.detail = "no finite threshold for m = 2";
            return o;
        }
        if (*t != 4) { // pinned after first computation
            o.detail = "threshold " + std::to_string(*t) + " != pinned 4";
            return o;
        }
        auto above = scan_bo(SequenceSpec::mary(2), *t, 2000, kThreads);
        o.pass = above.violations.empty();
        o.detail = "threshold 4, violations above: " + std::to_string(above.violations.size());
        return o;
    });

    run("C8 implications: seeded check on shift(p,26) and fib-even, anchored on (p,26)", [&] {
        Outcome o;
        auto shifted = check_seeded_implication(SequenceSpec::shifted(SequenceSpec::euler(), 26), 400);
        bool shifted_ok = shifted.f0_at_least_one && shifted.overall == VerdictStatus::verified;
        auto fib = check_seeded_implication(SequenceSpec::fib_even(), 400);
        bool fib_ok = !fib.f0_at_least_one && fib.conclusion.status == VerdictStatus::refuted;
        auto prop = check_anchored_implication(SequenceSpec::euler(), 26, 400);
        bool prop_ok = prop.overall == VerdictStatus::verified;
        o.pass = shifted_ok && fib_ok && prop_ok;
        o.detail = std::string("shift ") + (shifted_ok ? "ok" : "FAIL") + ", fib hypothesis " +
                   (fib.f0_at_least_one ? "not refuted" : "refuted") + " with failing conclusion " +
                   (fib.conclusion.status == VerdictStatus::refuted ? "yes" : "no") + ", anchored " +
                   (prop_ok ? "ok" : "FAIL");
        return o;
    });

    run("C9 property suites: nesting, agreement, determinism, probes, calibrations", [&] {
        Outcome o;

        // interval nesting under precision doubling
        WrightParams w = WrightParams::defaults();
        MahlerParams mp = MahlerParams::defaults(2);
        std::vector<std::function<Interval(mpfr_prec_t)>> exprs = {
            [](mpfr_prec_t p) { return lehmer_envelope(77, p).first; },
            [](mpfr_prec_t p) { return chen_envelope(123, p).second; },
            [w](mpfr_prec_t p) { return wright_envelope(w, 500, p).first; },
            [mp](mpfr_prec_t p) { return mahler_envelope(mp, 33, p).second; },
            [](mpfr_prec_t p) { return Interval::golden_ratio(p).pow_ui(200); },
        };
        for (const auto& expr : exprs) {
            Interval prev = expr(64);
            for (mpfr_prec_t p = 128; p <= 1024; p *= 2) {
                Interval cur = expr(p);
                if (!contained_in(cur, prev)) {
                    o.detail = "nesting violated";
                    return o;
                }
                prev = cur;
            }
        }

        // scanner/criteria agreement on the overlapping region
        auto preset = std::get<BOPreset>(make_preset("bo-euler-example21"));
        auto crit = run_bo_criterion(preset.inputs, preset.seq, 200, {}, kThreads);
        Sequence fresh(SequenceSpec::euler());
        auto scan = scan_bo_reference(fresh, crit.combined_threshold, 400, 200);
        if (crit.conclusion.witnesses.size() != scan.violations.size()) {
            o.detail = "criterion conclusion and scanner disagree";
            return o;
        }

        // report determinism + byte-identical round-trip
        auto mk = [&] {
            ReportEnvelope env;
            env.command = "scan";
            env.include_timing = false;
            auto s = scan_bo(SequenceSpec::euler(), 2, 100);
            env.add(to_json(s), VerdictStatus::refuted);
            return emit_json(env);
        };
        std::string a = mk(), b = mk();
        if (a != b || reemit_json(a) != a) {
            o.detail = "report not deterministic or round-trip not byte-identical";
            return o;
        }

        // finite-horizon probes for the asymptotic statements
        auto eu = limsup_probe(SequenceSpec::euler(), 26, 500);
        auto fib = limsup_probe(SequenceSpec::fib_even(), 2, 200);
        if (eu.status != ProbeStatus::plausible || fib.status != ProbeStatus::violated_on_window) {
            o.detail = "probe statuses off";
            return o;
        }

        // calibrated envelopes on their certified windows
        auto wright = certify_envelope(make_wright_envelope(w), plane, w.n0, 2000, {}, kThreads);
        if (!wright.all_pass) {
            o.detail = "wright calibration failed certification";
            return o;
        }
        Sequence m2(SequenceSpec::mary(2));
        auto wend = containment_window_end(make_mahler_envelope(mp), m2, 1, 64);
        if (!wend || *wend != 6) {
            o.detail = "mahler (1/2,2) window is not [1,6]";
            return o;
        }
        auto fitted = fit_mahler_constants(2, 2, 100);
        auto fit_cert = certify_envelope(make_mahler_envelope(fitted), m2, 2, 100);
        if (!fit_cert.all_pass) {
            o.detail = "fitted mahler constants failed certification";
            return o;
        }

        // slow-convergence diagnostic for the m-ary exponent
        Sequence big(SequenceSpec::mary(2));
        big.ensure(1000000);
        Interval logb = Interval::from_integer(big.at(1000000), 128).log();
        Interval f = Interval::exact_ui(1000000, 128).log().pow_ui(2) /
                     (Interval::exact_ui(2, 128) * Interval::exact_ui(2, 128).log());
        Interval ratio = logb / f;
        o.pass = true;
        o.detail = "log b_2(10^6) / ((log 10^6)^2 / (2 log 2)) in [" + ratio.str_lo(10) + ", " +
                   ratio.str_hi(10) + "]";
        return o;
    });

    std::printf("%s: %d criterion(s) failing\n", g_failures == 0 ? "ALL PASS" : "RESULT",
                g_failures);
    return g_failures;
}
