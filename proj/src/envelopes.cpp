#include "parcert/envelopes.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "parcert/errors.hpp"

namespace parcert {

Interval BoundEnvelope::lower(unsigned long n, mpfr_prec_t prec) const {
    return c1(n, prec) * f(n, prec).exp();
}

Interval BoundEnvelope::upper(unsigned long n, mpfr_prec_t prec) const {
    return c2(n, prec) * f(n, prec).exp();
}

Interval chen_mu(unsigned long n, mpfr_prec_t prec) {
    Interval root = Interval::exact_ui(24 * n - 1, prec).sqrt();
    return Interval::pi(prec) * root / Interval::exact_ui(6, prec);
}

namespace {

// sqrt(3)/(12n) (1 -+ 1/sqrt(n))
std::pair<Interval, Interval> lehmer_factors(unsigned long n, mpfr_prec_t prec) {
    Interval common = Interval::sqrt_ui(3, prec) / Interval::exact_ui(12 * n, prec);
    Interval one = Interval::exact_ui(1, prec);
    Interval rsqrt = one / Interval::sqrt_ui(n, prec);
    return {common * (one - rsqrt), common * (one + rsqrt)};
}

// sqrt(12)/(24n-1) (1 - 1/mu -+ 1/mu^3)
std::pair<Interval, Interval> chen_factors(unsigned long n, mpfr_prec_t prec) {
    Interval common = Interval::sqrt_ui(12, prec) / Interval::exact_ui(24 * n - 1, prec);
    Interval one = Interval::exact_ui(1, prec);
    Interval mu = chen_mu(n, prec);
    Interval inv_mu = one / mu;
    Interval inv_mu3 = one / mu.pow_ui(3);
    return {common * (one - inv_mu - inv_mu3), common * (one - inv_mu + inv_mu3)};
}

} // namespace

std::pair<Interval, Interval> lehmer_envelope(unsigned long n, mpfr_prec_t prec) {
    if (n < 1) throw DomainError("lehmer_envelope: n must be >= 1");
    auto [c1, c2] = lehmer_factors(n, prec);
    Interval ef = chen_mu(n, prec).exp();
    return {c1 * ef, c2 * ef};
}

std::pair<Interval, Interval> chen_envelope(unsigned long n, mpfr_prec_t prec) {
    if (n < 1) throw DomainError("chen_envelope: n must be >= 1");
    auto [c1, c2] = chen_factors(n, prec);
    Interval ef = chen_mu(n, prec).exp();
    return {c1 * ef, c2 * ef};
}

std::pair<Interval, Interval> binomial_bracket(long j, unsigned long n, mpfr_prec_t prec) {
    const unsigned long aj = static_cast<unsigned long>(j < 0 ? -j : j);
    if (aj >= n) throw DomainError("binomial_bracket: requires |j| < n");

    Interval sq = Interval::sqrt_ui(n, prec); // n^{1/2}
    Interval inv = sq.recip();                // n^{-1/2}
    Interval ninv = Interval::exact_ui(n, prec).recip();
    Interval inv3 = inv * ninv;               // n^{-3/2}
    Interval inv5 = inv3 * ninv;              // n^{-5/2}

    Interval mid = sq + Interval::exact_si(j, prec) * inv / Interval::exact_ui(2, prec) -
                   Interval::exact_ui(aj * aj, prec) * inv3 / Interval::exact_ui(8, prec);
    Interval tail = Interval::exact_ui(2 * aj * aj * aj, prec) * inv5;
    return {mid - tail, mid + tail};
}

WrightParams WrightParams::defaults() {
    WrightParams w;
    w.alpha = parse_exact_number("0.231516813449");
    w.beta = parse_exact_number("1/2");
    w.gamma = parse_exact_number("2.00944566088");
    w.n0 = 5;
    return w;
}

WrightParams WrightParams::from_config(const Config& cfg) {
    WrightParams w = defaults();
    w.alpha = cfg.get_rational("wright.alpha", w.alpha);
    w.beta = cfg.get_rational("wright.beta", w.beta);
    w.gamma = cfg.get_rational("wright.gamma", w.gamma);
    w.n0 = cfg.get_uint("wright.n0", w.n0);
    return w;
}

std::pair<Interval, Interval> wright_envelope(const WrightParams& params, unsigned long n,
                                              mpfr_prec_t prec) {
    if (n < 1) throw DomainError("wright_envelope: n must be >= 1");
    Interval one = Interval::exact_ui(1, prec);
    Interval alpha = Interval::from_rational(params.alpha, prec);
    Interval beta = Interval::from_rational(params.beta, prec);

    // n^{-25/36} = 1 / (n^25)^{1/36}, with n^25 exact
    BigCount n25;
    mpz_ui_pow_ui(n25.get_mpz_t(), n, 25);
    Interval pow_term = Interval::from_integer(n25, prec).rootn_ui(36).recip();

    BigCount n2;
    mpz_ui_pow_ui(n2.get_mpz_t(), n, 2);
    Interval f = Interval::from_rational(params.gamma, prec) *
                 Interval::from_integer(n2, prec).rootn_ui(3);
    Interval ef = f.exp();
    Interval rel = beta / Interval::sqrt_ui(n, prec);
    Interval common = alpha * pow_term * ef;
    return {common * (one - rel), common * (one + rel)};
}

MahlerParams MahlerParams::defaults(unsigned long m) {
    MahlerParams p;
    p.base = m;
    p.c1 = Rational(1, 2);
    p.c2 = 2;
    return p;
}

MahlerParams MahlerParams::from_config(const Config& cfg, unsigned long m) {
    MahlerParams p = defaults(m);
    p.c1 = cfg.get_rational("mahler.c1", p.c1);
    p.c2 = cfg.get_rational("mahler.c2", p.c2);
    p.window_lo = cfg.get_uint("mahler.window_lo", p.window_lo);
    p.window_hi = cfg.get_uint("mahler.window_hi", p.window_hi);
    return p;
}

namespace {

// (log n)^2 / (2 log m)
Interval mahler_exponent(unsigned long base, unsigned long n, mpfr_prec_t prec) {
    Interval logn = Interval::exact_ui(n, prec).log();
    Interval logm = Interval::exact_ui(base, prec).log();
    return logn.pow_ui(2) / (Interval::exact_ui(2, prec) * logm);
}

} // namespace

std::pair<Interval, Interval> mahler_envelope(const MahlerParams& params, unsigned long n,
                                              mpfr_prec_t prec) {
    if (n < 1) throw DomainError("mahler_envelope: n must be >= 1");
    Interval ef = mahler_exponent(params.base, n, prec).exp();
    return {Interval::from_rational(params.c1, prec) * ef,
            Interval::from_rational(params.c2, prec) * ef};
}

BoundEnvelope make_lehmer_envelope() {
    BoundEnvelope env;
    env.label = "lehmer";
    env.n0 = 1;
    env.f = [](unsigned long n, mpfr_prec_t p) { return chen_mu(n, p); };
    env.c1 = [](unsigned long n, mpfr_prec_t p) { return lehmer_factors(n, p).first; };
    env.c2 = [](unsigned long n, mpfr_prec_t p) { return lehmer_factors(n, p).second; };
    return env;
}

BoundEnvelope make_chen_envelope() {
    BoundEnvelope env;
    env.label = "chen";
    env.n0 = 37;
    env.f = [](unsigned long n, mpfr_prec_t p) { return chen_mu(n, p); };
    env.c1 = [](unsigned long n, mpfr_prec_t p) { return chen_factors(n, p).first; };
    env.c2 = [](unsigned long n, mpfr_prec_t p) { return chen_factors(n, p).second; };
    return env;
}

BoundEnvelope make_wright_envelope(const WrightParams& params) {
    BoundEnvelope env;
    env.label = "wright";
    env.n0 = params.n0;
    env.f = [params](unsigned long n, mpfr_prec_t p) {
        BigCount n2;
        mpz_ui_pow_ui(n2.get_mpz_t(), n, 2);
        return Interval::from_rational(params.gamma, p) *
               Interval::from_integer(n2, p).rootn_ui(3);
    };
    env.c1 = [params](unsigned long n, mpfr_prec_t p) {
        BigCount n25;
        mpz_ui_pow_ui(n25.get_mpz_t(), n, 25);
        Interval one = Interval::exact_ui(1, p);
        return Interval::from_rational(params.alpha, p) *
               Interval::from_integer(n25, p).rootn_ui(36).recip() *
               (one - Interval::from_rational(params.beta, p) / Interval::sqrt_ui(n, p));
    };
    env.c2 = [params](unsigned long n, mpfr_prec_t p) {
        BigCount n25;
        mpz_ui_pow_ui(n25.get_mpz_t(), n, 25);
        Interval one = Interval::exact_ui(1, p);
        return Interval::from_rational(params.alpha, p) *
               Interval::from_integer(n25, p).rootn_ui(36).recip() *
               (one + Interval::from_rational(params.beta, p) / Interval::sqrt_ui(n, p));
    };
    return env;
}

BoundEnvelope make_mahler_envelope(const MahlerParams& params) {
    BoundEnvelope env;
    env.label = "mahler:" + std::to_string(params.base);
    env.n0 = params.window_lo;
    if (params.window_hi > 0) env.cert_window_hi = params.window_hi;
    const unsigned long base = params.base;
    env.f = [base](unsigned long n, mpfr_prec_t p) { return mahler_exponent(base, n, p); };
    env.c1 = [params](unsigned long, mpfr_prec_t p) {
        return Interval::from_rational(params.c1, p);
    };
    env.c2 = [params](unsigned long, mpfr_prec_t p) {
        return Interval::from_rational(params.c2, p);
    };
    return env;
}

namespace {

struct IndexCheck {
    CheckOutcome lower = CheckOutcome::inconclusive;
    CheckOutcome upper = CheckOutcome::inconclusive;
    std::string lower_str, upper_str;
};

CheckOutcome to_outcome(Tri t) {
    switch (t) {
    case Tri::yes:
        return CheckOutcome::pass;
    case Tri::no:
        return CheckOutcome::fail;
    default:
        return CheckOutcome::inconclusive;
    }
}

IndexCheck certify_index(const BoundEnvelope& env, const BigCount& value, unsigned long n,
                         const PrecisionLadder& ladder) {
    IndexCheck out;
    for (mpfr_prec_t p = ladder.start;; p *= 2) {
        Interval lo = env.lower(n, p);
        Interval hi = env.upper(n, p);
        if (out.lower == CheckOutcome::inconclusive)
            out.lower = to_outcome(lt_value(lo, value)); // lower < F(n)
        if (out.upper == CheckOutcome::inconclusive)
            out.upper = to_outcome(gt_value(hi, value)); // F(n) < upper
        bool done = out.lower != CheckOutcome::inconclusive &&
                    out.upper != CheckOutcome::inconclusive;
        if (done || p >= ladder.cap) {
            out.lower_str = lo.str_hi();
            out.upper_str = hi.str_lo();
            return out;
        }
    }
}

CertificationReport assemble_report(const BoundEnvelope& env, Sequence& seq, unsigned long n_lo,
                                    unsigned long n_hi, const std::vector<IndexCheck>& checks) {
    CertificationReport rep;
    rep.label = env.label;
    rep.selector = seq.spec().selector();
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    rep.checked = checks.size();
    rep.all_pass = true;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const IndexCheck& c = checks[i];
        if (c.lower == CheckOutcome::pass && c.upper == CheckOutcome::pass) continue;
        rep.all_pass = false;
        const unsigned long n = n_lo + static_cast<unsigned long>(i);
        IndexIssue issue;
        issue.n = n;
        issue.lower = c.lower;
        issue.upper = c.upper;
        issue.lower_bound = c.lower_str;
        issue.upper_bound = c.upper_str;
        issue.value = to_decimal(seq.at(n));
        if ((c.lower == CheckOutcome::fail || c.upper == CheckOutcome::fail) &&
            !rep.first_failure)
            rep.first_failure = n;
        rep.issues.push_back(std::move(issue));
    }
    return rep;
}

} // namespace

CertificationReport certify_envelope_reference(const BoundEnvelope& env, Sequence& seq,
                                               unsigned long n_lo, unsigned long n_hi,
                                               const PrecisionLadder& ladder) {
    if (n_lo < 1 || n_hi < n_lo) throw DomainError("certify_envelope: bad range");
    seq.ensure(n_hi);
    std::vector<IndexCheck> checks(n_hi - n_lo + 1);
    for (unsigned long n = n_lo; n <= n_hi; ++n)
        checks[n - n_lo] = certify_index(env, seq.at(n), n, ladder);
    return assemble_report(env, seq, n_lo, n_hi, checks);
}

CertificationReport certify_envelope(const BoundEnvelope& env, Sequence& seq, unsigned long n_lo,
                                     unsigned long n_hi, const PrecisionLadder& ladder,
                                     int threads) {
    if (n_lo < 1 || n_hi < n_lo) throw DomainError("certify_envelope: bad range");
    seq.ensure(n_hi);
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    threads = 1;
#endif
    if (threads == 1) return certify_envelope_reference(env, seq, n_lo, n_hi, ladder);

    std::vector<IndexCheck> checks(n_hi - n_lo + 1);
    const long count = static_cast<long>(checks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#endif
    for (long i = 0; i < count; ++i) {
        const unsigned long n = n_lo + static_cast<unsigned long>(i);
        checks[i] = certify_index(env, seq.at(n), n, ladder);
    }
    return assemble_report(env, seq, n_lo, n_hi, checks);
}

CertificationReport certify_envelope(const BoundEnvelope& env, const SequenceSpec& spec,
                                     unsigned long n_lo, unsigned long n_hi,
                                     const PrecisionLadder& ladder, int threads) {
    Sequence seq(spec, threads);
    return certify_envelope(env, seq, n_lo, n_hi, ladder, threads);
}

std::optional<unsigned long> containment_window_end(const BoundEnvelope& env, Sequence& seq,
                                                    unsigned long lo, unsigned long hi_limit,
                                                    const PrecisionLadder& ladder) {
    seq.ensure(hi_limit);
    std::optional<unsigned long> last;
    for (unsigned long n = lo; n <= hi_limit; ++n) {
        IndexCheck c = certify_index(env, seq.at(n), n, ladder);
        if (c.lower != CheckOutcome::pass || c.upper != CheckOutcome::pass) break;
        last = n;
    }
    return last;
}

MahlerParams fit_mahler_constants(unsigned long m, unsigned long lo, unsigned long hi,
                                  mpfr_prec_t prec) {
    if (lo < 1 || hi < lo) throw DomainError("fit_mahler_constants: bad range");
    MahlerParams params = MahlerParams::defaults(m);
    params.window_lo = lo;
    params.window_hi = hi;

    Sequence seq(SequenceSpec::mary(m));
    seq.ensure(hi);
    Real min_lo(prec), max_hi(prec);
    mpfr_set_inf(min_lo.raw(), +1);
    mpfr_set_inf(max_hi.raw(), -1);
    for (unsigned long n = lo; n <= hi; ++n) {
        Interval ratio = Interval::from_integer(seq.at(n), prec) /
                         mahler_exponent(m, n, prec).exp();
        mpfr_min(min_lo.raw(), min_lo.raw(), ratio.lo().raw(), MPFR_RNDD);
        mpfr_max(max_hi.raw(), max_hi.raw(), ratio.hi().raw(), MPFR_RNDU);
    }
    // nudge strictly outside the observed ratio range
    Real c1(prec), c2(prec);
    mpfr_mul_d(c1.raw(), min_lo.raw(), 1.0 - 1e-6, MPFR_RNDD);
    mpfr_mul_d(c2.raw(), max_hi.raw(), 1.0 + 1e-6, MPFR_RNDU);
    mpfr_get_q(params.c1.get_mpq_t(), c1.raw());
    mpfr_get_q(params.c2.get_mpq_t(), c2.raw());
    params.c1.canonicalize();
    params.c2.canonicalize();
    return params;
}

} // namespace parcert
