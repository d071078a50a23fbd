#include "parcert/analysis.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

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

std::optional<unsigned long> bo_clean_threshold(const std::vector<ViolationRecord>& violations,
                                                unsigned long sum_max) {
    if (violations.empty()) return std::nullopt;
    unsigned long maxb = 0;
    for (const auto& v : violations)
        maxb = std::max(maxb, v.b);
    const unsigned long t = maxb + 1;
    if (2 * t > sum_max) return std::nullopt; // nothing left above the violations
    return t;
}

void scan_bo_row(Sequence& seq, unsigned long b, unsigned long a_hi,
                 std::vector<ViolationRecord>& out, std::size_t& checked) {
    BigCount prod;
    for (unsigned long a = b; a <= a_hi; ++a) {
        prod = seq.at(a) * seq.at(b);
        ++checked;
        if (prod > seq.at(a + b)) continue;
        ViolationRecord v;
        v.kind = ViolationKind::bo;
        v.a = a;
        v.b = b;
        v.lhs = prod;
        v.rhs = seq.at(a + b);
        v.margin = v.lhs - v.rhs;
        out.push_back(std::move(v));
    }
}

std::string bo_region(unsigned long a_min, unsigned long sum_max, unsigned long a_max) {
    std::ostringstream os;
    os << a_min << " <= b <= a, a+b <= " << sum_max;
    if (a_max > 0) os << ", a <= " << a_max;
    return os.str();
}

} // namespace

ScanReport scan_bo_reference(Sequence& seq, unsigned long a_min, unsigned long sum_max,
                             unsigned long a_max) {
    if (a_min < 1 || sum_max < 2 * a_min) throw DomainError("scan_bo: requires sum_max >= 2*a_min");
    seq.ensure(sum_max);
    ScanReport rep;
    rep.selector = seq.spec().selector();
    rep.region = bo_region(a_min, sum_max, a_max);
    for (unsigned long b = a_min; 2 * b <= sum_max; ++b) {
        unsigned long a_hi = sum_max - b;
        if (a_max > 0) a_hi = std::min(a_hi, a_max);
        if (a_hi < b) continue;
        scan_bo_row(seq, b, a_hi, rep.violations, rep.checked);
    }
    rep.min_clean_threshold = bo_clean_threshold(rep.violations, sum_max);
    return rep;
}

ScanReport scan_bo(Sequence& seq, unsigned long a_min, unsigned long sum_max, int threads,
                   unsigned long a_max) {
    threads = effective_threads(threads);
    if (threads == 1) return scan_bo_reference(seq, a_min, sum_max, a_max);
    if (a_min < 1 || sum_max < 2 * a_min) throw DomainError("scan_bo: requires sum_max >= 2*a_min");
    seq.ensure(sum_max);

    ScanReport rep;
    rep.selector = seq.spec().selector();
    rep.region = bo_region(a_min, sum_max, a_max);

    const unsigned long b_hi = sum_max / 2;
    const long rows = b_hi >= a_min ? static_cast<long>(b_hi - a_min + 1) : 0;
    std::vector<std::vector<ViolationRecord>> row_violations(static_cast<std::size_t>(rows));
    std::vector<std::size_t> row_checked(static_cast<std::size_t>(rows), 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#endif
    for (long i = 0; i < rows; ++i) {
        const unsigned long b = a_min + static_cast<unsigned long>(i);
        unsigned long a_hi = sum_max - b;
        if (a_max > 0) a_hi = std::min(a_hi, a_max);
        if (a_hi < b) continue;
        scan_bo_row(seq, b, a_hi, row_violations[i], row_checked[i]);
    }
    for (long i = 0; i < rows; ++i) {
        rep.checked += row_checked[i];
        for (auto& v : row_violations[i])
            rep.violations.push_back(std::move(v));
    }
    rep.min_clean_threshold = bo_clean_threshold(rep.violations, sum_max);
    return rep;
}

ScanReport scan_bo(const SequenceSpec& spec, unsigned long a_min, unsigned long sum_max,
                   int threads, unsigned long a_max) {
    Sequence seq(spec, threads);
    return scan_bo(seq, a_min, sum_max, threads, a_max);
}

namespace {

void scan_lc_range(Sequence& seq, unsigned long lo, unsigned long hi,
                   std::vector<ViolationRecord>& out) {
    BigCount sq, cross;
    for (unsigned long n = lo; n <= hi; ++n) {
        sq = seq.at(n) * seq.at(n);
        cross = seq.at(n - 1) * seq.at(n + 1);
        if (sq > cross) continue;
        ViolationRecord v;
        v.kind = ViolationKind::log_concavity;
        v.a = n;
        v.lhs = sq;
        v.rhs = cross;
        v.margin = v.lhs - v.rhs;
        out.push_back(std::move(v));
    }
}

std::optional<unsigned long> lc_clean_threshold(const std::vector<ViolationRecord>& violations,
                                                unsigned long n_max) {
    if (violations.empty()) return std::nullopt;
    unsigned long maxn = 0;
    for (const auto& v : violations)
        maxn = std::max(maxn, v.a);
    if (maxn >= n_max) return std::nullopt; // persists to the boundary
    return maxn + 1;
}

} // namespace

ScanReport scan_logconcavity_reference(Sequence& seq, unsigned long n_min, unsigned long n_max) {
    if (n_min < seq.spec().positivity_start() + 1)
        throw DomainError("scan_logconcavity: n_min below the sequence's positive range");
    if (n_max < n_min) throw DomainError("scan_logconcavity: empty range");
    seq.ensure(n_max + 1);
    ScanReport rep;
    rep.selector = seq.spec().selector();
    rep.region = std::to_string(n_min) + " <= n <= " + std::to_string(n_max);
    rep.checked = n_max - n_min + 1;
    scan_lc_range(seq, n_min, n_max, rep.violations);
    rep.min_clean_threshold = lc_clean_threshold(rep.violations, n_max);
    return rep;
}

ScanReport scan_logconcavity(Sequence& seq, unsigned long n_min, unsigned long n_max,
                             int threads) {
    threads = effective_threads(threads);
    if (threads == 1) return scan_logconcavity_reference(seq, n_min, n_max);
    if (n_min < seq.spec().positivity_start() + 1)
        throw DomainError("scan_logconcavity: n_min below the sequence's positive range");
    if (n_max < n_min) throw DomainError("scan_logconcavity: empty range");
    seq.ensure(n_max + 1);

    ScanReport rep;
    rep.selector = seq.spec().selector();
    rep.region = std::to_string(n_min) + " <= n <= " + std::to_string(n_max);
    rep.checked = n_max - n_min + 1;

    // block-chunked so that per-index bookkeeping does not dominate the
    // (cheap) exact comparisons; blocks merge in index order
    const unsigned long total = n_max - n_min + 1;
    const long nblocks = static_cast<long>(
        std::min<unsigned long>(total, static_cast<unsigned long>(threads) * 8));
    const unsigned long block_len = (total + nblocks - 1) / nblocks;
    std::vector<std::vector<ViolationRecord>> partial(static_cast<std::size_t>(nblocks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long blk = 0; blk < nblocks; ++blk) {
        const unsigned long lo = n_min + static_cast<unsigned long>(blk) * block_len;
        const unsigned long hi = std::min(n_max, lo + block_len - 1);
        scan_lc_range(seq, lo, hi, partial[blk]);
    }
    for (auto& part : partial)
        for (auto& v : part)
            rep.violations.push_back(std::move(v));
    rep.min_clean_threshold = lc_clean_threshold(rep.violations, n_max);
    return rep;
}

ScanReport scan_logconcavity(const SequenceSpec& spec, unsigned long n_min, unsigned long n_max,
                             int threads) {
    Sequence seq(spec, threads);
    return scan_logconcavity(seq, n_min, n_max, threads);
}

Verdict cassini_audit(unsigned long n_max, int threads) {
    if (n_max < 2) throw DomainError("cassini_audit: n_max must be >= 2");
    Sequence q(SequenceSpec::fib_even());
    q.ensure(n_max + 1);
    Verdict v;
    v.label = "cassini";
    v.checked_lo = 1;
    v.checked_hi = n_max;
    threads = effective_threads(threads);

    const long count = static_cast<long>(n_max);
    std::vector<unsigned char> ok(static_cast<std::size_t>(count), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
#endif
    for (long i = 0; i < count; ++i) {
        const unsigned long n = static_cast<unsigned long>(i) + 1;
        BigCount lhs = q.at(n) * q.at(n) - q.at(n + 1) * q.at(n - 1);
        ok[i] = (lhs == 1) ? 1 : 0;
    }
    for (long i = 0; i < count; ++i) {
        if (ok[i]) continue;
        const unsigned long n = static_cast<unsigned long>(i) + 1;
        Witness w;
        w.a = n;
        w.lhs = to_decimal(BigCount(q.at(n) * q.at(n) - q.at(n + 1) * q.at(n - 1)));
        w.rhs = "1";
        v.witnesses.push_back(std::move(w));
    }
    v.status = v.witnesses.empty() ? VerdictStatus::verified : VerdictStatus::refuted;
    v.note = "margin is exactly 1 at every index";
    return v;
}

namespace {

// phi^{2n}/sqrt(5) at working precision
Interval golden_power_term(unsigned long n, mpfr_prec_t prec) {
    Interval phi = Interval::golden_ratio(prec);
    return phi.pow_ui(2 * n) / Interval::sqrt_ui(5, prec);
}

} // namespace

Verdict golden_bounds_audit(unsigned long n_max, const PrecisionLadder& ladder, int threads) {
    if (n_max < 1) throw DomainError("golden_bounds_audit: n_max must be >= 1");
    Sequence q(SequenceSpec::fib_even());
    q.ensure(n_max);
    threads = effective_threads(threads);

    Verdict v;
    v.label = "golden-bounds";
    v.checked_lo = 1;
    v.checked_hi = n_max;

    const long count = static_cast<long>(n_max);
    // 0 = pass, 1 = fail, 2 = unresolved
    std::vector<unsigned char> res(static_cast<std::size_t>(count), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) if (threads > 1)
#endif
    for (long i = 0; i < count; ++i) {
        const unsigned long n = static_cast<unsigned long>(i) + 1;
        const BigCount& f2n = q.at(n);
        Tri upper = resolve(ladder, [&](mpfr_prec_t p) {
            return gt_value(golden_power_term(n, p), f2n); // F < phi^{2n}/sqrt5
        });
        Tri lower = resolve(ladder, [&](mpfr_prec_t p) {
            Interval b = golden_power_term(n, p) - Interval::exact_ui(1, p);
            return lt_value(b, f2n); // phi^{2n}/sqrt5 - 1 < F
        });
        if (upper == Tri::yes && lower == Tri::yes)
            res[i] = 0;
        else if (upper == Tri::no || lower == Tri::no)
            res[i] = 1;
        else
            res[i] = 2;
    }
    for (long i = 0; i < count; ++i) {
        if (res[i] == 0) continue;
        Witness w;
        w.a = static_cast<unsigned long>(i) + 1;
        w.lhs = to_decimal(q.at(w.a));
        w.note = res[i] == 1 ? "bound violated" : "unresolved at precision cap";
        (res[i] == 1 ? v.witnesses : v.unresolved).push_back(std::move(w));
    }
    v.status = !v.witnesses.empty()    ? VerdictStatus::refuted
               : !v.unresolved.empty() ? VerdictStatus::inconclusive
                                       : VerdictStatus::verified;
    return v;
}

Verdict bo_gap_audit_q(unsigned long sum_max, const PrecisionLadder& ladder, int threads) {
    if (sum_max < 3) throw DomainError("bo_gap_audit_q: sum_max must be >= 3");
    Sequence q(SequenceSpec::fib_even());
    q.ensure(sum_max);
    threads = effective_threads(threads);

    Verdict v;
    v.label = "bo-gap-q";
    v.checked_lo = 3;
    v.checked_hi = sum_max;

    const long count = static_cast<long>(sum_max - 2); // sums 3..sum_max
    std::vector<std::vector<Witness>> bad(static_cast<std::size_t>(count));
    std::vector<std::vector<Witness>> open(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads) if (threads > 1)
#endif
    for (long i = 0; i < count; ++i) {
        const unsigned long s = static_cast<unsigned long>(i) + 3;
        for (unsigned long b = 1; 2 * b <= s; ++b) {
            const unsigned long a = s - b;
            BigCount diff = q.at(s) - q.at(a) * q.at(b);
            // (sqrt5 - 1)/5 phi^{2s} - 1
            auto bound = [&](mpfr_prec_t p) {
                Interval c = (Interval::sqrt_ui(5, p) - Interval::exact_ui(1, p)) /
                             Interval::exact_ui(5, p);
                return c * Interval::golden_ratio(p).pow_ui(2 * s) - Interval::exact_ui(1, p);
            };
            Tri above = resolve(ladder, [&](mpfr_prec_t p) { return lt_value(bound(p), diff); });
            Tri positive = resolve(ladder, [&](mpfr_prec_t p) {
                return gt_value(bound(p), BigCount(0));
            });
            if (above == Tri::yes && positive == Tri::yes && diff > 0) continue;
            Witness w;
            w.a = a;
            w.b = b;
            w.lhs = to_decimal(diff);
            w.note = (above == Tri::no || positive == Tri::no || diff <= 0)
                         ? "gap bound violated"
                         : "unresolved at precision cap";
            (w.note[0] == 'g' ? bad[i] : open[i]).push_back(std::move(w));
        }
    }
    for (long i = 0; i < count; ++i) {
        for (auto& w : bad[i])
            v.witnesses.push_back(std::move(w));
        for (auto& w : open[i])
            v.unresolved.push_back(std::move(w));
    }
    v.status = !v.witnesses.empty()    ? VerdictStatus::refuted
               : !v.unresolved.empty() ? VerdictStatus::inconclusive
                                       : VerdictStatus::verified;
    v.note = "confirms q(a+b) > q(a)q(b) through the golden-ratio gap bound";
    return v;
}

std::optional<unsigned long> find_min_bo_threshold(const SequenceSpec& spec,
                                                   unsigned long horizon, int threads) {
    if (horizon < 4) throw DomainError("find_min_bo_threshold: horizon must be >= 4");
    return scan_bo(spec, 1, horizon, threads).min_clean_threshold;
}

std::string scan_report_csv(const ScanReport& report) {
    std::ostringstream os;
    os << "kind,index_a,index_b,lhs,rhs,margin\n";
    for (const auto& v : report.violations) {
        os << (v.kind == ViolationKind::bo ? "bo" : "log_concavity") << ',' << v.a << ',';
        if (v.kind == ViolationKind::bo) os << v.b;
        os << ',' << to_decimal(v.lhs) << ',' << to_decimal(v.rhs) << ',' << to_decimal(v.margin)
           << '\n';
    }
    return os.str();
}

} // namespace parcert
