#include "parcert/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "parcert/errors.hpp"

namespace parcert {

SequenceSpec SequenceSpec::euler() { return SequenceSpec{SequenceKind::euler, {}, 0, 0, nullptr}; }

SequenceSpec SequenceSpec::restricted(std::vector<unsigned long> parts) {
    SequenceSpec s{SequenceKind::restricted, std::move(parts), 0, 0, nullptr};
    s.validate();
    return s;
}

SequenceSpec SequenceSpec::plane() { return SequenceSpec{SequenceKind::plane, {}, 0, 0, nullptr}; }

SequenceSpec SequenceSpec::mary(unsigned long m) {
    SequenceSpec s{SequenceKind::mary, {}, m, 0, nullptr};
    s.validate();
    return s;
}

SequenceSpec SequenceSpec::fib_even() {
    return SequenceSpec{SequenceKind::fib_even, {}, 0, 0, nullptr};
}

SequenceSpec SequenceSpec::shifted(SequenceSpec inner, unsigned long j) {
    SequenceSpec s;
    s.kind = SequenceKind::shifted;
    s.shift = j;
    s.inner = std::make_shared<const SequenceSpec>(std::move(inner));
    return s;
}

void SequenceSpec::validate() const {
    switch (kind) {
    case SequenceKind::restricted:
        if (parts.empty()) throw InvalidSpec("restricted: part set must be non-empty");
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw InvalidSpec("restricted: parts must be >= 1");
            if (i > 0 && parts[i] <= parts[i - 1])
                throw InvalidSpec("restricted: parts must be strictly increasing");
        }
        break;
    case SequenceKind::mary:
        if (base < 2) throw InvalidSpec("mary: base must be >= 2");
        break;
    case SequenceKind::shifted:
        if (!inner) throw InvalidSpec("shift: missing inner sequence");
        inner->validate();
        break;
    default:
        break;
    }
}

unsigned long SequenceSpec::positivity_start() const {
    switch (kind) {
    case SequenceKind::fib_even:
        return 1;
    case SequenceKind::shifted: {
        unsigned long in = inner->positivity_start();
        return in > shift ? in - shift : 0;
    }
    default:
        return 0;
    }
}

namespace {

unsigned long parse_ulong(const std::string& s, const char* what) {
    unsigned long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw InvalidSpec(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

} // namespace

SequenceSpec SequenceSpec::parse(const std::string& selector) {
    if (selector == "euler") return euler();
    if (selector == "plane") return plane();
    if (selector == "fib-even") return fib_even();
    if (selector.rfind("mary:", 0) == 0) return mary(parse_ulong(selector.substr(5), "mary base"));
    if (selector.rfind("restricted:", 0) == 0) {
        std::vector<unsigned long> parts;
        std::stringstream ss(selector.substr(11));
        std::string item;
        while (std::getline(ss, item, ','))
            parts.push_back(parse_ulong(item, "part"));
        return restricted(std::move(parts));
    }
    if (selector.rfind("shift:", 0) == 0) {
        std::string rest = selector.substr(6);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw InvalidSpec("shift: expected shift:J:<inner>");
        unsigned long j = parse_ulong(rest.substr(0, colon), "shift");
        return shifted(parse(rest.substr(colon + 1)), j);
    }
    throw InvalidSpec("unknown sequence selector: '" + selector + "'");
}

std::string SequenceSpec::selector() const {
    switch (kind) {
    case SequenceKind::euler:
        return "euler";
    case SequenceKind::plane:
        return "plane";
    case SequenceKind::fib_even:
        return "fib-even";
    case SequenceKind::mary:
        return "mary:" + std::to_string(base);
    case SequenceKind::restricted: {
        std::string s = "restricted:";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts[i]);
        }
        return s;
    }
    case SequenceKind::shifted:
        return "shift:" + std::to_string(shift) + ":" + inner->selector();
    }
    return "?";
}

Sequence::Sequence(SequenceSpec spec, int threads) : spec_(std::move(spec)), threads_(threads) {
    spec_.validate();
    if (spec_.kind == SequenceKind::shifted)
        inner_ = std::make_unique<Sequence>(*spec_.inner, threads);
}

std::size_t Sequence::filled() const {
    return spec_.kind == SequenceKind::shifted ? inner_->filled() : vals_.size();
}

const BigCount& Sequence::at(std::size_t n) const {
    if (spec_.kind == SequenceKind::shifted) return inner_->at(n + spec_.shift);
    return vals_.at(n);
}

const BigCount& Sequence::operator()(std::size_t n) {
    ensure(n);
    return at(n);
}

void Sequence::ensure(std::size_t n) {
    if (spec_.kind == SequenceKind::shifted) {
        inner_->ensure(n + spec_.shift);
        return;
    }
    if (vals_.size() > n) return;
    switch (spec_.kind) {
    case SequenceKind::euler:
        fill_euler(n);
        break;
    case SequenceKind::mary:
        fill_mary(n);
        break;
    case SequenceKind::fib_even:
        fill_fib(n);
        break;
    case SequenceKind::restricted:
        refill_restricted(n);
        break;
    case SequenceKind::plane:
        refill_plane(n);
        break;
    case SequenceKind::shifted:
        break;
    }
}

// p(n) by the pentagonal-number recurrence:
//   p(n) = sum_{k>=1} (-1)^{k+1} (p(n - k(3k-1)/2) + p(n - k(3k+1)/2)).
// O(n^{3/2}) total for the prefix; validated against an independent
// largest-part DP in the test suite.
void Sequence::fill_euler(std::size_t upto) {
    if (vals_.empty()) vals_.emplace_back(1);
    vals_.reserve(upto + 1);
    mpz_class s;
    for (std::size_t n = vals_.size(); n <= upto; ++n) {
        s = 0;
        for (unsigned long k = 1;; ++k) {
            unsigned long g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            unsigned long g2 = k * (3 * k + 1) / 2;
            if (k % 2 == 1) {
                s += vals_[n - g1];
                if (g2 <= n) s += vals_[n - g2];
            } else {
                s -= vals_[n - g1];
                if (g2 <= n) s -= vals_[n - g2];
            }
        }
        vals_.emplace_back(s);
    }
}

// b_m(0) = 1, b_m(mn+i) = b_m(mn) for 0 < i < m, b_m(mn) = b_m(mn-1) + b_m(n).
void Sequence::fill_mary(std::size_t upto) {
    const unsigned long m = spec_.base;
    if (vals_.empty()) vals_.emplace_back(1);
    vals_.reserve(upto + 1);
    for (std::size_t j = vals_.size(); j <= upto; ++j) {
        if (j % m == 0)
            vals_.emplace_back(vals_[j - 1] + vals_[j / m]);
        else
            vals_.emplace_back(vals_[j - 1]);
    }
}

// q(n) = F_{2n}: q(0) = 0, q(1) = 1, q(n+1) = 3 q(n) - q(n-1).
void Sequence::fill_fib(std::size_t upto) {
    if (vals_.empty()) {
        vals_.emplace_back(0);
        vals_.emplace_back(1);
    }
    vals_.reserve(upto + 1);
    for (std::size_t n = vals_.size(); n <= upto; ++n)
        vals_.emplace_back(3 * vals_[n - 1] - vals_[n - 2]);
}

namespace {

std::vector<BigCount> restricted_prefix(const std::vector<unsigned long>& parts, std::size_t n) {
    std::vector<BigCount> c(n + 1);
    c[0] = 1;
    for (unsigned long a : parts)
        for (std::size_t i = a; i <= n; ++i)
            c[i] += c[i - a];
    return c;
}

void check_extension(const std::vector<BigCount>& before, const std::vector<BigCount>& after) {
    for (std::size_t i = 0; i < before.size(); ++i)
        if (before[i] != after[i])
            throw InternalInconsistency("memoized prefix changed on refill at index " +
                                        std::to_string(i));
}

} // namespace

// The part-loop DP cannot be extended in place (it needs the per-part
// intermediate states), so growth recomputes the whole prefix and checks it
// against the previously cached values.
void Sequence::refill_restricted(std::size_t upto) {
    std::size_t target = std::max(upto, vals_.empty() ? upto : 2 * vals_.size());
    auto fresh = restricted_prefix(spec_.parts, target);
    check_extension(vals_, fresh);
    vals_ = std::move(fresh);
}

void Sequence::refill_plane(std::size_t upto) {
    std::size_t target = std::max(upto, vals_.empty() ? upto : 2 * vals_.size());
    auto a = plane_prefix_sigma(target);
    auto b = plane_prefix_dp(target, threads_);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            throw InternalInconsistency("plane-partition routes disagree at n = " +
                                        std::to_string(i));
    check_extension(vals_, a);
    vals_ = std::move(a);
}

void Sequence::adopt_prefix(std::vector<BigCount> values, bool validate) {
    if (spec_.kind == SequenceKind::shifted)
        throw InvalidSpec("adopt_prefix: load the inner sequence instead of a shifted view");
    if (validate && !values.empty()) {
        Sequence fresh(spec_, threads_);
        fresh.ensure(values.size() - 1);
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] != fresh.at(i))
                throw InternalInconsistency("loaded prefix disagrees at index " +
                                            std::to_string(i));
    }
    if (values.size() > vals_.size()) vals_ = std::move(values);
}

// pp(n) from n pp(n) = sum_{k=1}^{n} sigma_2(k) pp(n-k); the division is
// exact for every n, enforced below.
std::vector<BigCount> plane_prefix_sigma(std::size_t n) {
    std::vector<unsigned long> sigma2(n + 1, 0);
    for (std::size_t d = 1; d <= n; ++d)
        for (std::size_t k = d; k <= n; k += d)
            sigma2[k] += d * d;

    std::vector<BigCount> pp(n + 1);
    pp[0] = 1;
    mpz_class acc, q, r;
    for (std::size_t i = 1; i <= n; ++i) {
        acc = 0;
        for (std::size_t k = 1; k <= i; ++k)
            mpz_addmul_ui(acc.get_mpz_t(), pp[i - k].get_mpz_t(), sigma2[k]);
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), i);
        if (r != 0)
            throw InternalInconsistency("plane recurrence: inexact division at n = " +
                                        std::to_string(i));
        pp[i] = q;
    }
    return pp;
}

// pp(n) by multiplying out prod_k (1 - x^k)^{-k} with the negative-binomial
// expansion (1 - y)^{-k} = sum_j C(k+j-1, j) y^j, truncated at x^n. The
// per-coefficient update is independent across n, which is what the
// parallel kernel exploits.
std::vector<BigCount> plane_prefix_dp(std::size_t n, int threads) {
    std::vector<BigCount> cur(n + 1), next(n + 1);
    cur[0] = 1;
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    threads = 1;
#endif
    std::vector<BigCount> binom;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t jmax = n / k;
        binom.resize(jmax + 1);
        for (std::size_t j = 1; j <= jmax; ++j) {
            mpz_bin_uiui(binom[j].get_mpz_t(), k + j - 1, j);
        }
        // accumulate in place (next[i] keeps its buffer across rounds);
        // rows with few terms are cheaper serial than forked
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 32) num_threads(threads) if (threads > 1 && jmax >= 2)
#endif
        for (std::size_t i = 0; i <= n; ++i) {
            mpz_ptr acc = next[i].get_mpz_t();
            mpz_set(acc, cur[i].get_mpz_t()); // j = 0 term
            for (std::size_t j = 1; j * k <= i; ++j)
                mpz_addmul(acc, binom[j].get_mpz_t(), cur[i - j * k].get_mpz_t());
        }
        cur.swap(next);
    }
    return cur;
}

BigCount eval(const SequenceSpec& spec, std::size_t n) {
    Sequence s(spec);
    return s(n);
}

BigCount euler_p(std::size_t n) { return eval(SequenceSpec::euler(), n); }

BigCount restricted_p(const std::vector<unsigned long>& parts, std::size_t n) {
    return eval(SequenceSpec::restricted(parts), n);
}

BigCount plane_p(std::size_t n) { return eval(SequenceSpec::plane(), n); }

BigCount mary_p(unsigned long m, std::size_t n) { return eval(SequenceSpec::mary(m), n); }

BigCount fib_even(std::size_t n) { return eval(SequenceSpec::fib_even(), n); }

BigCount extended_p(const std::vector<unsigned long>& partition) {
    for (unsigned long part : partition)
        if (part < 1) throw InvalidSpec("extended_p: parts must be >= 1");
    if (partition.empty()) return 1;
    Sequence p(SequenceSpec::euler());
    p.ensure(*std::max_element(partition.begin(), partition.end()));
    BigCount prod = 1;
    for (unsigned long part : partition)
        prod *= p.at(part);
    return prod;
}

MaxProductTrace max_partition_product_trace(std::size_t n) {
    if (n < 1) throw DomainError("max_partition_product: n must be >= 1");
    Sequence p(SequenceSpec::euler());
    p.ensure(n);
    std::vector<MaxProductTrace> m(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        m[i].value = p.at(i);
        m[i].split = std::nullopt;
        for (std::size_t k = 1; k <= i / 2; ++k) {
            BigCount cand = m[k].value * m[i - k].value;
            if (cand > m[i].value) {
                m[i].value = std::move(cand);
                m[i].split = {static_cast<unsigned long>(k), static_cast<unsigned long>(i - k)};
            }
        }
    }
    return std::move(m[n]);
}

BigCount max_partition_product(std::size_t n) { return max_partition_product_trace(n).value; }

} // namespace parcert
