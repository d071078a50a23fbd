#include "parcert/criteria.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "parcert/analysis.hpp"
#include "parcert/errors.hpp"

namespace parcert {

namespace {

int effective_threads(int threads) {
#ifdef _OPENMP
    if (threads <= 0) return omp_get_max_threads();
    return threads;
#else
    (void)threads;
    return 1;
#endif
}

struct Decided {
    Tri tri = Tri::unknown;
    std::string lhs, rhs; // bracketed enclosures at the deciding precision
};

std::string enclosure_str(const Interval& x) {
    return "[" + x.str_lo(12) + ", " + x.str_hi(12) + "]";
}

// Escalates make(prec) -> (lhs, rhs) until rel(lhs, rhs) is conclusive.
// DomainError during evaluation (e.g. log over an enclosure that has not
// separated from 0 yet) counts as unresolved at that precision.
template <typename Make>
Decided decide_rel(const PrecisionLadder& ladder, Tri (*rel)(const Interval&, const Interval&),
                   Make&& make) {
    for (mpfr_prec_t p = ladder.start;; p *= 2) {
        std::optional<std::pair<Interval, Interval>> lr;
        try {
            lr.emplace(make(p));
        } catch (const DomainError&) {
        }
        Tri t = lr ? rel(lr->first, lr->second) : Tri::unknown;
        if (t != Tri::unknown || p >= ladder.cap) {
            Decided d;
            d.tri = t;
            if (t != Tri::yes && lr) {
                d.lhs = enclosure_str(lr->first);
                d.rhs = enclosure_str(lr->second);
            }
            return d;
        }
    }
}

void require_positive(const EnvMap& fn, unsigned long n, const PrecisionLadder& ladder,
                      const char* what) {
    Tri pos = resolve(ladder, [&](mpfr_prec_t p) {
        Interval v = fn(n, p);
        if (v.strictly_positive()) return Tri::yes;
        if (!v.is_nan() && mpfr_sgn(v.hi().raw()) <= 0) return Tri::no;
        return Tri::unknown;
    });
    if (pos != Tri::yes)
        throw InvalidSpec(std::string(what) + " must be positive at n = " + std::to_string(n));
}

Verdict finish_pair_verdict(Verdict v) {
    v.status = !v.witnesses.empty()    ? VerdictStatus::refuted
               : !v.unresolved.empty() ? VerdictStatus::inconclusive
                                       : VerdictStatus::verified;
    return v;
}

} // namespace

Verdict check_bo_condition1(const BOCriterionInputs& in, unsigned long horizon,
                            const PrecisionLadder& ladder, int threads) {
    if (horizon < in.n1) throw DomainError("check_bo_condition1: horizon below N1");
    require_positive(in.g, in.n1, ladder, "g");
    threads = effective_threads(threads);

    // f over [1, 2*horizon] and g over [n1, horizon] at the base precision;
    // escalation re-evaluates locally.
    std::vector<Interval> f;
    f.reserve(2 * horizon);
    for (unsigned long i = 1; i <= 2 * horizon; ++i)
        f.push_back(in.env.f(i, ladder.start));
    std::vector<Interval> g;
    g.reserve(horizon - in.n1 + 1);
    for (unsigned long b = in.n1; b <= horizon; ++b)
        g.push_back(in.g(b, ladder.start));
    auto f_at = [&](unsigned long i) -> const Interval& { return f[i - 1]; };
    auto g_at = [&](unsigned long b) -> const Interval& { return g[b - in.n1]; };

    Verdict v;
    v.label = "bo-condition1";
    v.checked_lo = in.n1;
    v.checked_hi = horizon;

    const long rows = static_cast<long>(horizon - in.n1 + 1);
    std::vector<std::vector<Witness>> fails(static_cast<std::size_t>(rows));
    std::vector<std::vector<Witness>> open(static_cast<std::size_t>(rows));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads) if (threads > 1)
#endif
    for (long i = 0; i < rows; ++i) {
        const unsigned long b = in.n1 + static_cast<unsigned long>(i);
        for (unsigned long a = b; a <= horizon; ++a) {
            Tri fast = ge(f_at(a) + f_at(b) - f_at(a + b), g_at(b));
            if (fast == Tri::yes) continue;
            Decided d = decide_rel(ladder, &ge, [&](mpfr_prec_t p) {
                return std::pair{in.env.f(a, p) + in.env.f(b, p) - in.env.f(a + b, p), in.g(b, p)};
            });
            if (d.tri == Tri::yes) continue;
            Witness w;
            w.a = a;
            w.b = b;
            w.lhs = d.lhs;
            w.rhs = d.rhs;
            (d.tri == Tri::no ? fails[i] : open[i]).push_back(std::move(w));
        }
    }
    for (long i = 0; i < rows; ++i) {
        for (auto& w : fails[i])
            v.witnesses.push_back(std::move(w));
        for (auto& w : open[i])
            v.unresolved.push_back(std::move(w));
    }
    return finish_pair_verdict(std::move(v));
}

Verdict check_bo_condition2(const BOCriterionInputs& in, unsigned long horizon,
                            const PrecisionLadder& ladder, int threads) {
    if (horizon < in.n2) throw DomainError("check_bo_condition2: horizon below N2");
    require_positive(in.h, in.n2, ladder, "h");
    threads = effective_threads(threads);

    std::vector<Interval> c1, c2, h;
    c1.reserve(horizon - in.n2 + 1);
    h.reserve(horizon - in.n2 + 1);
    for (unsigned long a = in.n2; a <= horizon; ++a) {
        c1.push_back(in.env.c1(a, ladder.start));
        h.push_back(in.h(a, ladder.start));
    }
    c2.reserve(2 * horizon - 2 * in.n2 + 1);
    for (unsigned long s = 2 * in.n2; s <= 2 * horizon; ++s)
        c2.push_back(in.env.c2(s, ladder.start));
    auto c1_at = [&](unsigned long a) -> const Interval& { return c1[a - in.n2]; };
    auto c2_at = [&](unsigned long s) -> const Interval& { return c2[s - 2 * in.n2]; };
    auto h_at = [&](unsigned long b) -> const Interval& { return h[b - in.n2]; };

    Verdict v;
    v.label = "bo-condition2";
    v.checked_lo = in.n2;
    v.checked_hi = horizon;

    const long rows = static_cast<long>(horizon - in.n2 + 1);
    std::vector<std::vector<Witness>> fails(static_cast<std::size_t>(rows));
    std::vector<std::vector<Witness>> open(static_cast<std::size_t>(rows));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads) if (threads > 1)
#endif
    for (long i = 0; i < rows; ++i) {
        const unsigned long b = in.n2 + static_cast<unsigned long>(i);
        for (unsigned long a = b; a <= horizon; ++a) {
            Tri fast = le(c2_at(a + b) / c1_at(a), h_at(b));
            if (fast == Tri::yes) continue;
            Decided d = decide_rel(ladder, &le, [&](mpfr_prec_t p) {
                return std::pair{in.env.c2(a + b, p) / in.env.c1(a, p), in.h(b, p)};
            });
            if (d.tri == Tri::yes) continue;
            Witness w;
            w.a = a;
            w.b = b;
            w.lhs = d.lhs;
            w.rhs = d.rhs;
            (d.tri == Tri::no ? fails[i] : open[i]).push_back(std::move(w));
        }
    }
    for (long i = 0; i < rows; ++i) {
        for (auto& w : fails[i])
            v.witnesses.push_back(std::move(w));
        for (auto& w : open[i])
            v.unresolved.push_back(std::move(w));
    }
    return finish_pair_verdict(std::move(v));
}

namespace {

Decided cond3_decide(const BOCriterionInputs& in, unsigned long n, const PrecisionLadder& ladder) {
    return decide_rel(ladder, &ge, [&](mpfr_prec_t p) {
        return std::pair{in.g(n, p), in.h(n, p).log() - in.env.c1(n, p).log()};
    });
}

} // namespace

Tri check_bo_condition3_at(const BOCriterionInputs& in, unsigned long n,
                           const PrecisionLadder& ladder) {
    return cond3_decide(in, n, ladder).tri;
}

Verdict check_bo_condition3(const BOCriterionInputs& in, unsigned long horizon,
                            const PrecisionLadder& ladder, int threads) {
    if (horizon < 1) throw DomainError("check_bo_condition3: empty horizon");
    threads = effective_threads(threads);

    std::vector<Decided> res(horizon + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads) if (threads > 1)
#endif
    for (long n = 1; n <= static_cast<long>(horizon); ++n)
        res[static_cast<std::size_t>(n)] = cond3_decide(in, static_cast<unsigned long>(n), ladder);

    // minimal threshold: start of the maximal conclusive-pass suffix
    std::optional<unsigned long> discovered;
    for (unsigned long n = horizon; n >= 1; --n) {
        if (res[n].tri != Tri::yes) break;
        discovered = n;
        if (n == 1) break;
    }

    Verdict v;
    v.label = "bo-condition3";
    const unsigned long claimed = in.n3_claimed.value_or(discovered.value_or(horizon + 1));
    v.checked_lo = std::min(claimed, horizon);
    v.checked_hi = horizon;
    v.discovered_threshold = discovered;
    for (unsigned long n = claimed; n <= horizon; ++n) {
        if (res[n].tri == Tri::yes) continue;
        Witness w;
        w.a = n;
        w.lhs = res[n].lhs;
        w.rhs = res[n].rhs;
        (res[n].tri == Tri::no ? v.witnesses : v.unresolved).push_back(std::move(w));
    }
    if (discovered) {
        v.note = "holds conclusively for all n in [" + std::to_string(*discovered) + ", " +
                 std::to_string(horizon) + "]";
    } else {
        v.note = "no conclusive-pass suffix within the horizon";
        if (v.witnesses.empty() && v.unresolved.empty()) {
            Witness w;
            w.a = horizon;
            w.lhs = res[horizon].lhs;
            w.rhs = res[horizon].rhs;
            (res[horizon].tri == Tri::no ? v.witnesses : v.unresolved).push_back(std::move(w));
        }
    }
    if (in.n3_claimed) v.note += "; claimed start " + std::to_string(*in.n3_claimed);
    return finish_pair_verdict(std::move(v));
}

namespace {

Verdict verdict_from_scan(const ScanReport& scan, std::string label) {
    Verdict v;
    v.label = std::move(label);
    for (const auto& viol : scan.violations) {
        Witness w;
        w.a = viol.a;
        if (viol.kind == ViolationKind::bo) w.b = viol.b;
        w.lhs = to_decimal(viol.lhs);
        w.rhs = to_decimal(viol.rhs);
        v.witnesses.push_back(std::move(w));
    }
    v.status = v.witnesses.empty() ? VerdictStatus::verified : VerdictStatus::refuted;
    return v;
}

} // namespace

BOCriterionReport run_bo_criterion(const BOCriterionInputs& in, const SequenceSpec& spec,
                                   unsigned long horizon, const PrecisionLadder& ladder,
                                   int threads) {
    BOCriterionReport rep;
    rep.cond1 = check_bo_condition1(in, horizon, ladder, threads);
    rep.cond2 = check_bo_condition2(in, horizon, ladder, threads);
    rep.cond3 = check_bo_condition3(in, horizon, ladder, threads);

    Sequence seq(spec, threads);
    const unsigned long cert_hi =
        std::min(horizon, in.env.cert_window_hi.value_or(horizon));
    rep.cert = certify_envelope(in.env, seq, in.env.n0, cert_hi, ladder, threads);

    const unsigned long n3_eff = rep.cond3.discovered_threshold.value_or(horizon);
    rep.combined_threshold = std::max({in.env.n0, in.n1, in.n2, n3_eff});

    ScanReport scan = scan_bo(seq, rep.combined_threshold, 2 * horizon, threads, horizon);
    rep.conclusion = verdict_from_scan(scan, "exact-bo-conclusion");
    rep.conclusion.checked_lo = rep.combined_threshold;
    rep.conclusion.checked_hi = horizon;
    rep.conclusion.note = "F(a)F(b) > F(a+b) for all " + std::to_string(rep.combined_threshold) +
                          " <= b <= a <= " + std::to_string(horizon);

    VerdictStatus parts = combine(rep.cond1.status, rep.cond2.status);
    VerdictStatus cond3_eff = rep.cond3.discovered_threshold ? VerdictStatus::verified
                                                             : VerdictStatus::inconclusive;
    VerdictStatus cert_st = rep.cert.all_pass        ? VerdictStatus::verified
                            : rep.cert.first_failure ? VerdictStatus::refuted
                                                     : VerdictStatus::inconclusive;
    rep.overall =
        combine(combine(parts, cond3_eff), combine(cert_st, rep.conclusion.status));
    return rep;
}

LCCriterionReport run_lc_criterion(const LCCriterionInputs& in, const SequenceSpec& spec,
                                   unsigned long horizon, const PrecisionLadder& ladder,
                                   int threads) {
    const unsigned long scan_lo = std::max(in.n1, in.n2);
    if (horizon < scan_lo + 1) throw DomainError("run_lc_criterion: horizon too small");
    require_positive(in.h, scan_lo, ladder, "h");
    threads = effective_threads(threads);

    LCCriterionReport rep;

    // condition 1: h(n) <= 2f(n) - f(n-1) - f(n+1) on [n1, horizon]
    {
        Verdict v;
        v.label = "lc-condition1";
        v.checked_lo = in.n1;
        v.checked_hi = horizon;
        const long count = static_cast<long>(horizon - in.n1 + 1);
        std::vector<Decided> res(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads) if (threads > 1)
#endif
        for (long i = 0; i < count; ++i) {
            const unsigned long n = in.n1 + static_cast<unsigned long>(i);
            res[i] = decide_rel(ladder, &le, [&](mpfr_prec_t p) {
                Interval two = Interval::exact_ui(2, p);
                return std::pair{in.h(n, p),
                                 two * in.env.f(n, p) - in.env.f(n - 1, p) - in.env.f(n + 1, p)};
            });
        }
        for (long i = 0; i < count; ++i) {
            if (res[i].tri == Tri::yes) continue;
            Witness w;
            w.a = in.n1 + static_cast<unsigned long>(i);
            w.lhs = res[i].lhs;
            w.rhs = res[i].rhs;
            (res[i].tri == Tri::no ? v.witnesses : v.unresolved).push_back(std::move(w));
        }
        rep.cond1 = finish_pair_verdict(std::move(v));
    }

    // condition 2: c2(n+1) c2(n-1) / c1(n)^2 <= e^{h(n)} on [n2, horizon]
    {
        Verdict v;
        v.label = "lc-condition2";
        v.checked_lo = in.n2;
        v.checked_hi = horizon;
        const long count = static_cast<long>(horizon - in.n2 + 1);
        std::vector<Decided> res(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads) if (threads > 1)
#endif
        for (long i = 0; i < count; ++i) {
            const unsigned long n = in.n2 + static_cast<unsigned long>(i);
            res[i] = decide_rel(ladder, &le, [&](mpfr_prec_t p) {
                Interval ratio = in.env.c2(n + 1, p) * in.env.c2(n - 1, p) /
                                 in.env.c1(n, p).pow_ui(2);
                return std::pair{ratio, in.h(n, p).exp()};
            });
        }
        for (long i = 0; i < count; ++i) {
            if (res[i].tri == Tri::yes) continue;
            Witness w;
            w.a = in.n2 + static_cast<unsigned long>(i);
            w.lhs = res[i].lhs;
            w.rhs = res[i].rhs;
            (res[i].tri == Tri::no ? v.witnesses : v.unresolved).push_back(std::move(w));
        }
        rep.cond2 = finish_pair_verdict(std::move(v));
    }

    // preset closing inequality with threshold discovery
    if (in.closing_lhs && in.closing_rhs) {
        Verdict v;
        v.label = "lc-closing";
        const long count = static_cast<long>(horizon - in.closing_scan_lo + 1);
        std::vector<Decided> res(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads) if (threads > 1)
#endif
        for (long i = 0; i < count; ++i) {
            const unsigned long n = in.closing_scan_lo + static_cast<unsigned long>(i);
            res[i] = decide_rel(ladder, &ge, [&](mpfr_prec_t p) {
                return std::pair{in.closing_lhs(n, p), in.closing_rhs(n, p)};
            });
        }
        std::optional<unsigned long> discovered;
        for (long i = count - 1; i >= 0; --i) {
            if (res[i].tri != Tri::yes) break;
            discovered = in.closing_scan_lo + static_cast<unsigned long>(i);
        }
        v.discovered_threshold = discovered;
        const unsigned long claimed =
            in.closing_claimed.value_or(discovered.value_or(horizon + 1));
        v.checked_lo = std::min(claimed, horizon);
        v.checked_hi = horizon;
        for (long i = 0; i < count; ++i) {
            const unsigned long n = in.closing_scan_lo + static_cast<unsigned long>(i);
            if (n < claimed || res[i].tri == Tri::yes) continue;
            Witness w;
            w.a = n;
            w.lhs = res[i].lhs;
            w.rhs = res[i].rhs;
            (res[i].tri == Tri::no ? v.witnesses : v.unresolved).push_back(std::move(w));
        }
        if (discovered) {
            v.note = "holds conclusively for all n in [" + std::to_string(*discovered) + ", " +
                     std::to_string(horizon) + "]";
        } else {
            v.note = "no conclusive-pass suffix within the horizon";
            if (v.witnesses.empty() && v.unresolved.empty()) {
                Witness w;
                w.a = horizon;
                w.lhs = res[count - 1].lhs;
                w.rhs = res[count - 1].rhs;
                (res[count - 1].tri == Tri::no ? v.witnesses : v.unresolved)
                    .push_back(std::move(w));
            }
        }
        rep.closing = finish_pair_verdict(std::move(v));
    }

    Sequence seq(spec, threads);
    const unsigned long cert_hi =
        std::min(horizon, in.env.cert_window_hi.value_or(horizon));
    rep.cert = certify_envelope(in.env, seq, in.env.n0, cert_hi, ladder, threads);

    rep.combined_threshold = std::max({in.env.n0, in.n1, in.n2});

    ScanReport concl = scan_logconcavity(seq, rep.combined_threshold, horizon, threads);
    rep.conclusion = verdict_from_scan(concl, "exact-lc-conclusion");
    rep.conclusion.checked_lo = rep.combined_threshold;
    rep.conclusion.checked_hi = horizon;

    ScanReport full = scan_logconcavity(seq, spec.positivity_start() + 1, horizon, threads);
    rep.exact_min_clean = full.min_clean_threshold;

    VerdictStatus cert_st = rep.cert.all_pass        ? VerdictStatus::verified
                            : rep.cert.first_failure ? VerdictStatus::refuted
                                                     : VerdictStatus::inconclusive;
    rep.overall = combine(combine(rep.cond1.status, rep.cond2.status),
                          combine(cert_st, rep.conclusion.status));
    return rep;
}

Verdict check_ratio_descent(const SequenceSpec& spec, unsigned long n0, unsigned long horizon) {
    if (horizon <= n0 + 1) throw DomainError("check_ratio_descent: requires horizon > n0 + 1");
    if (n0 < std::max(1ul, spec.positivity_start()))
        throw DomainError("check_ratio_descent: n0 below the sequence's positive range");
    Sequence seq(spec);
    seq.ensure(horizon + 1);

    Verdict v;
    v.label = "ratio-descent";
    v.checked_lo = n0 + 1;
    v.checked_hi = horizon;
    for (unsigned long n = n0; n <= horizon; ++n)
        if (seq.at(n) == 0)
            throw DomainError("check_ratio_descent: zero value at n = " + std::to_string(n) +
                              "; ratios are undefined there");
    for (unsigned long n = n0 + 1; n <= horizon; ++n) {
        Rational left(seq.at(n), seq.at(n - 1));
        Rational right(seq.at(n + 1), seq.at(n));
        left.canonicalize();
        right.canonicalize();
        if (left > right) continue;
        Witness w;
        w.a = n;
        w.lhs = to_decimal(left);
        w.rhs = to_decimal(right);
        v.witnesses.push_back(std::move(w));
    }
    v.status = v.witnesses.empty() ? VerdictStatus::verified : VerdictStatus::refuted;
    return v;
}

AnchoredImplicationReport check_anchored_implication(const SequenceSpec& spec, unsigned long n0, unsigned long horizon) {
    if (n0 < 1) throw DomainError("check_anchored_implication: n0 must be >= 1");
    if (horizon < 2 * n0) throw DomainError("check_anchored_implication: requires horizon >= 2*n0");
    Sequence seq(spec);
    seq.ensure(horizon + n0);

    AnchoredImplicationReport rep;
    rep.hypothesis.label = "anchored-hypothesis";
    rep.hypothesis.checked_lo = n0;
    rep.hypothesis.checked_hi = horizon;
    const BigCount& fn0 = seq.at(n0);
    for (unsigned long n = n0; n <= horizon; ++n) {
        if (seq.at(n) * fn0 > seq.at(n + n0)) continue;
        Witness w;
        w.a = n;
        w.lhs = to_decimal(BigCount(seq.at(n) * fn0));
        w.rhs = to_decimal(seq.at(n + n0));
        rep.hypothesis.witnesses.push_back(std::move(w));
    }
    rep.hypothesis.status =
        rep.hypothesis.witnesses.empty() ? VerdictStatus::verified : VerdictStatus::refuted;

    ScanReport scan = scan_bo_reference(seq, n0, 2 * (horizon - n0), horizon - n0);
    rep.conclusion = verdict_from_scan(scan, "anchored-conclusion");
    rep.conclusion.checked_lo = n0;
    rep.conclusion.checked_hi = horizon - n0;
    rep.overall = combine(rep.hypothesis.status, rep.conclusion.status);
    return rep;
}

SeededImplicationReport check_seeded_implication(const SequenceSpec& spec, unsigned long horizon) {
    if (horizon < 2) throw DomainError("check_seeded_implication: horizon must be >= 2");
    Sequence seq(spec);
    seq.ensure(horizon + 1);

    SeededImplicationReport rep;
    rep.f0 = seq.at(0);
    rep.f0_at_least_one = rep.f0 >= 1;

    rep.log_concavity.label = "seeded-logconcavity";
    rep.log_concavity.checked_lo = 1;
    rep.log_concavity.checked_hi = horizon;
    for (unsigned long n = 1; n <= horizon; ++n) {
        if (seq.at(n) * seq.at(n) > seq.at(n - 1) * seq.at(n + 1)) continue;
        Witness w;
        w.a = n;
        w.lhs = to_decimal(BigCount(seq.at(n) * seq.at(n)));
        w.rhs = to_decimal(BigCount(seq.at(n - 1) * seq.at(n + 1)));
        rep.log_concavity.witnesses.push_back(std::move(w));
    }
    rep.log_concavity.status =
        rep.log_concavity.witnesses.empty() ? VerdictStatus::verified : VerdictStatus::refuted;

    rep.conclusion.label = "seeded-conclusion";
    rep.conclusion.checked_lo = 1;
    rep.conclusion.checked_hi = horizon;
    for (unsigned long b = 1; 2 * b <= horizon; ++b) {
        for (unsigned long a = b; a + b <= horizon; ++a) {
            if (seq.at(a) * seq.at(b) > seq.at(a + b)) continue;
            Witness w;
            w.a = a;
            w.b = b;
            w.lhs = to_decimal(BigCount(seq.at(a) * seq.at(b)));
            w.rhs = to_decimal(seq.at(a + b));
            rep.conclusion.witnesses.push_back(std::move(w));
        }
    }
    rep.conclusion.status =
        rep.conclusion.witnesses.empty() ? VerdictStatus::verified : VerdictStatus::refuted;

    VerdictStatus hyp =
        rep.f0_at_least_one ? rep.log_concavity.status : VerdictStatus::refuted;
    rep.overall = combine(hyp, rep.conclusion.status);
    return rep;
}

ProbeReport limsup_probe_fn(const std::function<BigCount(std::size_t)>& f, unsigned long n0,
                            unsigned long horizon, double window_fraction) {
    if (n0 < 1) throw DomainError("limsup_probe: n0 must be >= 1");
    if (horizon <= 2 * n0) throw DomainError("limsup_probe: requires horizon > 2*n0");
    if (!(window_fraction > 0.0) || window_fraction > 1.0)
        throw DomainError("limsup_probe: window fraction must be in (0, 1]");

    const unsigned long count = horizon - n0;
    const unsigned long window =
        std::max<unsigned long>(1, static_cast<unsigned long>(
                                       static_cast<double>(count) * window_fraction));

    ProbeReport rep;
    rep.n0 = n0;
    rep.horizon = horizon;
    rep.window_size = window;

    BigCount fn0 = f(n0);
    if (fn0 <= 0) throw DomainError("limsup_probe: f(n0) must be positive");
    rep.f_n0 = Rational(fn0);

    // ratios r(n) = f(n+n0)/f(n) for n in (n0, horizon], windowed from the end
    std::vector<Rational> ratios;
    ratios.reserve(count);
    for (unsigned long n = n0 + 1; n <= horizon; ++n) {
        BigCount den = f(n);
        if (den <= 0) throw DomainError("limsup_probe: zero value inside the scan range");
        Rational r(f(n + n0), den);
        r.canonicalize();
        ratios.push_back(std::move(r));
    }

    std::size_t end = ratios.size();
    std::vector<Rational> maxima_rev;
    while (end > 0) {
        std::size_t begin = end >= window ? end - window : 0;
        Rational m = ratios[begin];
        for (std::size_t i = begin + 1; i < end; ++i)
            m = std::max(m, ratios[i]);
        maxima_rev.push_back(std::move(m));
        end = begin;
    }
    rep.window_maxima.assign(maxima_rev.rbegin(), maxima_rev.rend());
    rep.trailing_max = rep.window_maxima.back();
    if (rep.window_maxima.size() >= 2)
        rep.previous_max = rep.window_maxima[rep.window_maxima.size() - 2];

    std::size_t trailing_start = ratios.size() >= window ? ratios.size() - window : 0;
    std::size_t violations = 0;
    for (std::size_t i = trailing_start; i < ratios.size(); ++i)
        if (ratios[i] >= rep.f_n0) ++violations;
    const std::size_t trailing_len = ratios.size() - trailing_start;

    if (2 * violations >= trailing_len) {
        rep.status = ProbeStatus::violated_on_window;
    } else if (rep.trailing_max < rep.f_n0 &&
               (!rep.previous_max || rep.trailing_max <= *rep.previous_max)) {
        rep.status = ProbeStatus::plausible;
    } else {
        rep.status = ProbeStatus::inconclusive;
    }
    rep.note = "finite probe over (" + std::to_string(n0) + ", " + std::to_string(horizon) +
               "]; no claim beyond the horizon";
    return rep;
}

ProbeReport limsup_probe(const SequenceSpec& spec, unsigned long n0, unsigned long horizon,
                         double window_fraction) {
    if (n0 < std::max(1ul, spec.positivity_start()))
        throw DomainError("limsup_probe: n0 below the sequence's positive range");
    Sequence seq(spec);
    seq.ensure(horizon + n0);
    return limsup_probe_fn([&seq](std::size_t n) { return seq.at(n); }, n0, horizon,
                           window_fraction);
}

namespace {

unsigned long ceil_rational(const Rational& q) {
    BigCount num = q.get_num(), den = q.get_den();
    BigCount r = (num + den - 1) / den;
    return static_cast<unsigned long>(r.get_ui());
}

BOPreset make_bo_euler() {
    BOPreset p;
    p.id = "bo-euler-example21";
    p.seq = SequenceSpec::euler();
    p.inputs.env = make_lehmer_envelope();
    p.inputs.g = [](unsigned long b, mpfr_prec_t prec) {
        // pi/12 sqrt(24b - 1) - 1/24
        Interval root = Interval::exact_ui(24 * b - 1, prec).sqrt();
        return Interval::pi(prec) * root / Interval::exact_ui(12, prec) -
               Interval::from_rational(Rational(1, 24), prec);
    };
    p.inputs.h = [](unsigned long, mpfr_prec_t prec) { return Interval::exact_ui(2, prec); };
    p.inputs.n1 = 1;
    p.inputs.n2 = 9;
    p.inputs.n3_claimed = 15;
    return p;
}

BOPreset make_bo_plane(const Config& cfg) {
    BOPreset p;
    p.id = "bo-planepartition";
    p.seq = SequenceSpec::plane();
    WrightParams w = WrightParams::from_config(cfg);
    p.inputs.env = make_wright_envelope(w);
    const Rational gamma3 = w.gamma / 3;
    p.inputs.g = [gamma3](unsigned long n, mpfr_prec_t prec) {
        BigCount n2;
        mpz_ui_pow_ui(n2.get_mpz_t(), n, 2);
        return Interval::from_rational(gamma3, prec) *
               Interval::from_integer(n2, prec).rootn_ui(3);
    };
    const Rational hconst = 2 * w.beta + 1;
    p.inputs.h = [hconst](unsigned long, mpfr_prec_t prec) {
        return Interval::from_rational(hconst, prec);
    };
    p.inputs.n1 = 1;
    p.inputs.n2 = std::max(w.n0, ceil_rational((w.beta + 1) * (w.beta + 1)));
    return p;
}

BOPreset make_bo_mary(const Config& cfg, unsigned long m) {
    BOPreset p;
    p.id = "bo-mary";
    p.seq = SequenceSpec::mary(m);
    MahlerParams mp = MahlerParams::from_config(cfg, m);
    if (mp.window_hi == 0) {
        // containment window of the (1/2, 2) constants, found by scan
        BoundEnvelope probe = make_mahler_envelope(mp);
        Sequence seq(p.seq);
        auto end = containment_window_end(probe, seq, mp.window_lo, 256);
        mp.window_hi = end.value_or(mp.window_lo);
    }
    p.inputs.env = make_mahler_envelope(mp);
    p.inputs.g = [m](unsigned long n, mpfr_prec_t prec) {
        // ((log n - 2 log 2) log n - 3/2) / (2 log m)
        Interval logn = Interval::exact_ui(n, prec).log();
        Interval log2 = Interval::exact_ui(2, prec).log();
        Interval two = Interval::exact_ui(2, prec);
        Interval num = (logn - two * log2) * logn - Interval::from_rational(Rational(3, 2), prec);
        return num / (two * Interval::exact_ui(m, prec).log());
    };
    p.inputs.h = [](unsigned long, mpfr_prec_t prec) { return Interval::exact_ui(4, prec); };
    p.inputs.n1 = 9; // first index with g > 0
    p.inputs.n2 = 1;
    return p;
}

LCPreset make_lc_chen() {
    LCPreset p;
    p.id = "lc-chen";
    p.seq = SequenceSpec::euler();
    p.inputs.env = make_chen_envelope();
    // h0(n) = sqrt(24) pi / 6 (n^{-3/2}/4 - (55588/13824) n^{-5/2})
    p.inputs.h = [](unsigned long n, mpfr_prec_t prec) {
        Interval ninv = Interval::exact_ui(n, prec).recip();
        Interval inv12 = Interval::sqrt_ui(n, prec).recip(); // n^{-1/2}
        Interval inv32 = inv12 * ninv;
        Interval inv52 = inv32 * ninv;
        Interval lead = Interval::sqrt_ui(24, prec) * Interval::pi(prec) /
                        Interval::exact_ui(6, prec);
        return lead * (inv32 / Interval::exact_ui(4, prec) -
                       Interval::from_rational(Rational(55588, 13824), prec) * inv52);
    };
    p.inputs.n1 = 94;
    p.inputs.n2 = 94;
    p.inputs.closing_lhs = [h = p.inputs.h](unsigned long n, mpfr_prec_t prec) {
        return Interval::exact_ui(1, prec) + h(n, prec);
    };
    p.inputs.closing_rhs = [](unsigned long n, mpfr_prec_t prec) {
        // (1 + 576/((24n-1)^2 - 576))^{5/2} (1 + 24 sqrt(6)/(7 pi^3) n^{-3/2})
        Interval one = Interval::exact_ui(1, prec);
        BigCount d = BigCount(24 * n - 1) * (24 * n - 1) - 576;
        Interval lead = one + Interval::exact_ui(576, prec) / Interval::from_integer(d, prec);
        Interval pow52 = lead.pow_ui(5).sqrt();
        Interval ninv = Interval::exact_ui(n, prec).recip();
        Interval inv32 = Interval::sqrt_ui(n, prec).recip() * ninv;
        Interval coeff = Interval::exact_ui(24, prec) * Interval::sqrt_ui(6, prec) /
                         (Interval::exact_ui(7, prec) * Interval::pi(prec).pow_ui(3));
        return pow52 * (one + coeff * inv32);
    };
    p.inputs.closing_scan_lo = 2;
    p.inputs.closing_claimed = 94;
    return p;
}

} // namespace

namespace {

// criterion.n1 / n2 / n3 / closing config keys override the preset's
// claimed thresholds (the envelope constants come from their own keys).
void apply_overrides(BOPreset& p, const Config& cfg) {
    p.inputs.n1 = cfg.get_uint("criterion.n1", p.inputs.n1);
    p.inputs.n2 = cfg.get_uint("criterion.n2", p.inputs.n2);
    if (cfg.has("criterion.n3"))
        p.inputs.n3_claimed = cfg.get_uint("criterion.n3", 0);
}

void apply_overrides(LCPreset& p, const Config& cfg) {
    p.inputs.n1 = cfg.get_uint("criterion.n1", p.inputs.n1);
    p.inputs.n2 = cfg.get_uint("criterion.n2", p.inputs.n2);
    if (cfg.has("criterion.closing"))
        p.inputs.closing_claimed = cfg.get_uint("criterion.closing", 0);
}

} // namespace

CriterionPreset make_preset(const std::string& id, const Config& cfg, unsigned long mary_base) {
    if (id == "bo-euler-example21") {
        BOPreset p = make_bo_euler();
        apply_overrides(p, cfg);
        return p;
    }
    if (id == "bo-planepartition") {
        BOPreset p = make_bo_plane(cfg);
        apply_overrides(p, cfg);
        return p;
    }
    if (id == "bo-mary") {
        BOPreset p = make_bo_mary(cfg, mary_base);
        apply_overrides(p, cfg);
        return p;
    }
    if (id == "lc-chen") {
        LCPreset p = make_lc_chen();
        apply_overrides(p, cfg);
        return p;
    }
    throw InvalidSpec("unknown criterion preset: '" + id + "'");
}

std::vector<std::string> preset_ids() {
    return {"bo-euler-example21", "bo-planepartition", "bo-mary", "lc-chen"};
}

} // namespace parcert
