#ifndef PARCERT_INTERVAL_HPP
#define PARCERT_INTERVAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "parcert/bigcount.hpp"

namespace parcert {

// Directed-rounded enclosures [lo, hi] at an explicit working precision.
//
// Every operation rounds the lower endpoint toward -inf and the upper
// endpoint toward +inf, so the true real value of a composed expression is
// always inside the result. Endpoints may be +-inf (extended reals).
// Comparisons are conclusive only when the intervals involved separate;
// callers escalate precision until they do (see PrecisionLadder/resolve).

class Real {
  public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_nan(v_);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN); // same precision: exact
    }
    Real(Real&& o) noexcept {
        v_[0] = o.v_[0];
        o.engaged_ = false;
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) {
            if (engaged_) mpfr_clear(v_);
            v_[0] = o.v_[0];
            engaged_ = o.engaged_;
            o.engaged_ = false;
        }
        return *this;
    }
    ~Real() {
        if (engaged_) mpfr_clear(v_);
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  private:
    mpfr_t v_;
    bool engaged_ = true;
};

class Interval {
  public:
    Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

    static Interval exact_ui(unsigned long v, mpfr_prec_t prec);
    static Interval exact_si(long v, mpfr_prec_t prec);
    static Interval from_integer(const BigCount& v, mpfr_prec_t prec);
    static Interval from_rational(const Rational& v, mpfr_prec_t prec);
    // Tight enclosure of a decimal string such as "2.00944566088".
    static Interval from_decimal(const std::string& s, mpfr_prec_t prec);
    static Interval pi(mpfr_prec_t prec);
    static Interval sqrt_ui(unsigned long v, mpfr_prec_t prec);
    // (1 + sqrt 5) / 2
    static Interval golden_ratio(mpfr_prec_t prec);
    static Interval entire(mpfr_prec_t prec); // [-inf, +inf]

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    mpfr_prec_t prec() const { return std::max(lo_.prec(), hi_.prec()); }

    bool is_nan() const {
        return mpfr_nan_p(lo_.raw()) || mpfr_nan_p(hi_.raw());
    }
    bool contains_zero() const {
        return !is_nan() && mpfr_sgn(lo_.raw()) <= 0 && mpfr_sgn(hi_.raw()) >= 0;
    }
    // Certifiably positive: the whole enclosure lies strictly above 0.
    bool strictly_positive() const {
        return !is_nan() && mpfr_sgn(lo_.raw()) > 0;
    }
    bool strictly_negative() const {
        return !is_nan() && mpfr_sgn(hi_.raw()) < 0;
    }

    Interval operator-() const;
    Interval sqrt() const;                    // requires lo >= 0
    Interval log() const;                     // requires lo >= 0 (log 0 = -inf)
    Interval exp() const;
    Interval pow_ui(unsigned long e) const;   // requires lo >= 0
    Interval rootn_ui(unsigned long k) const; // requires lo >= 0
    Interval recip() const;

    // Decimal endpoint strings with outward rounding at the given number of
    // significant digits (lo rounded down, hi rounded up).
    std::string str_lo(int digits = 20) const;
    std::string str_hi(int digits = 20) const;

  private:
    Real lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);

// Three-valued comparison outcome. `unknown` means the enclosures overlap
// (or contain NaN) and the question must be retried at higher precision.
enum class Tri { yes, no, unknown };

// Relation of the enclosed real x to an exact value v.
Tri lt_value(const Interval& x, const BigCount& v); // x <  v ?
Tri gt_value(const Interval& x, const BigCount& v); // x >  v ?
Tri lt_value(const Interval& x, const Rational& v);
Tri gt_value(const Interval& x, const Rational& v);

// Relations between two enclosed reals.
Tri lt(const Interval& a, const Interval& b); // a <  b ?
Tri le(const Interval& a, const Interval& b); // a <= b ?
Tri gt(const Interval& a, const Interval& b); // a >  b ?
Tri ge(const Interval& a, const Interval& b); // a >= b ?

// Precision-escalation schedule for conclusive comparisons: start at
// `start` bits and double until `cap`. An unresolved comparison at the cap
// stays `unknown`; callers must report it, never guess.
struct PrecisionLadder {
    mpfr_prec_t start = 64;
    mpfr_prec_t cap = 4096;
};

// Runs pred(prec) up the ladder until it stops returning Tri::unknown.
template <typename Pred>
Tri resolve(const PrecisionLadder& ladder, Pred&& pred) {
    for (mpfr_prec_t p = ladder.start;; p *= 2) {
        Tri r = pred(p);
        if (r != Tri::unknown) return r;
        if (p >= ladder.cap) return Tri::unknown;
    }
}

} // namespace parcert

#endif
