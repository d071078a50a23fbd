#ifndef PARCERT_SEQUENCES_HPP
#define PARCERT_SEQUENCES_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parcert/bigcount.hpp"

namespace parcert {

// Exact integer sequences: the Euler partition function p(n), restricted
// partition counts p_A(n) for a finite part set A, plane partitions pp(n),
// m-ary partitions b_m(n), even-indexed Fibonacci numbers q(n) = F_{2n},
// and shifted views n -> inner(n + j).

enum class SequenceKind { euler, restricted, plane, mary, fib_even, shifted };

struct SequenceSpec {
    SequenceKind kind = SequenceKind::euler;
    std::vector<unsigned long> parts;             // restricted: non-empty, strictly increasing, >= 1
    unsigned long base = 0;                       // mary: >= 2
    unsigned long shift = 0;                      // shifted
    std::shared_ptr<const SequenceSpec> inner;    // shifted

    static SequenceSpec euler();
    static SequenceSpec restricted(std::vector<unsigned long> parts);
    static SequenceSpec plane();
    static SequenceSpec mary(unsigned long m);
    static SequenceSpec fib_even();
    static SequenceSpec shifted(SequenceSpec inner, unsigned long j);

    // Selector syntax: euler | plane | fib-even | mary:M | restricted:ated
    // comma list | shift:J:<inner>. Throws InvalidSpec on malformed input.
    static SequenceSpec parse(const std::string& selector);
    std::string selector() const;

    // First index from which all values are guaranteed > 0. Every kind is
    // evaluable from 0, but q(0) = F_0 = 0 must stay out of ratio and
    // log-concavity scans.
    unsigned long positivity_start() const;

    void validate() const; // throws InvalidSpec
};

// Dense memoized prefix of one sequence. Fill is single-writer; once filled,
// concurrent reads are safe. For the plane kind, every fill runs two
// independent algorithms and aborts (InternalInconsistency) on disagreement.
class Sequence {
  public:
    explicit Sequence(SequenceSpec spec, int threads = 1);

    void ensure(std::size_t n);                // fill prefix [0..n]
    const BigCount& at(std::size_t n) const;   // n must be filled
    const BigCount& operator()(std::size_t n); // ensure + at
    std::size_t filled() const;                // number of cached values
    const SequenceSpec& spec() const { return spec_; }
    const std::vector<BigCount>& prefix() const { return vals_; }

    // Installs an externally loaded prefix (see seq_cache). Values are
    // trusted only after re-validation against a fresh fill of the same
    // length; pass validate=false to skip (e.g. for very long caches).
    void adopt_prefix(std::vector<BigCount> values, bool validate = true);

  private:
    SequenceSpec spec_;
    std::vector<BigCount> vals_;
    std::unique_ptr<Sequence> inner_; // shifted
    int threads_ = 1;

    void fill_euler(std::size_t upto);
    void fill_mary(std::size_t upto);
    void fill_fib(std::size_t upto);
    void refill_restricted(std::size_t upto);
    void refill_plane(std::size_t upto);
};

// One-shot operations (each builds a local engine; pure).
BigCount eval(const SequenceSpec& spec, std::size_t n);
BigCount euler_p(std::size_t n);
BigCount restricted_p(const std::vector<unsigned long>& parts, std::size_t n);
BigCount plane_p(std::size_t n);
BigCount mary_p(unsigned long m, std::size_t n);
BigCount fib_even(std::size_t n);

// p(lambda) = prod p(lambda_i); empty multiset -> 1. Parts must be >= 1.
BigCount extended_p(const std::vector<unsigned long>& partition);

// max p(lambda) over partitions lambda of n, via
// M(n) = max(p(n), max_{1<=k<=n/2} M(k) M(n-k)).
struct MaxProductTrace {
    BigCount value;
    // nullopt: best is p(n) itself; otherwise the best split {k, n-k}.
    std::optional<std::pair<unsigned long, unsigned long>> split;
};
BigCount max_partition_product(std::size_t n);
MaxProductTrace max_partition_product_trace(std::size_t n);

// The two plane-partition routes, exposed separately for cross-checks and
// benchmarks. Both return the prefix [0..n].
std::vector<BigCount> plane_prefix_sigma(std::size_t n);
std::vector<BigCount> plane_prefix_dp(std::size_t n, int threads = 1);

} // namespace parcert

#endif
