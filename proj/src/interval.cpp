#include "parcert/interval.hpp"

#include <cstdio>
#include <vector>

#include "parcert/errors.hpp"

namespace parcert {

namespace {

Interval make_both(mpfr_prec_t prec, const auto& set_lo, const auto& set_hi) {
    Real lo(prec), hi(prec);
    set_lo(lo.raw());
    set_hi(hi.raw());
    return Interval(std::move(lo), std::move(hi));
}

} // namespace

Interval Interval::exact_ui(unsigned long v, mpfr_prec_t prec) {
    return make_both(
        prec, [&](mpfr_ptr r) { mpfr_set_ui(r, v, MPFR_RNDD); },
        [&](mpfr_ptr r) { mpfr_set_ui(r, v, MPFR_RNDU); });
}

Interval Interval::exact_si(long v, mpfr_prec_t prec) {
    return make_both(
        prec, [&](mpfr_ptr r) { mpfr_set_si(r, v, MPFR_RNDD); },
        [&](mpfr_ptr r) { mpfr_set_si(r, v, MPFR_RNDU); });
}

Interval Interval::from_integer(const BigCount& v, mpfr_prec_t prec) {
    return make_both(
        prec, [&](mpfr_ptr r) { mpfr_set_z(r, v.get_mpz_t(), MPFR_RNDD); },
        [&](mpfr_ptr r) { mpfr_set_z(r, v.get_mpz_t(), MPFR_RNDU); });
}

Interval Interval::from_rational(const Rational& v, mpfr_prec_t prec) {
    return make_both(
        prec, [&](mpfr_ptr r) { mpfr_set_q(r, v.get_mpq_t(), MPFR_RNDD); },
        [&](mpfr_ptr r) { mpfr_set_q(r, v.get_mpq_t(), MPFR_RNDU); });
}

Interval Interval::from_decimal(const std::string& s, mpfr_prec_t prec) {
    return make_both(
        prec,
        [&](mpfr_ptr r) {
            if (mpfr_set_str(r, s.c_str(), 10, MPFR_RNDD) != 0)
                throw InvalidSpec("bad decimal constant: " + s);
        },
        [&](mpfr_ptr r) { mpfr_set_str(r, s.c_str(), 10, MPFR_RNDU); });
}

Interval Interval::pi(mpfr_prec_t prec) {
    return make_both(
        prec, [&](mpfr_ptr r) { mpfr_const_pi(r, MPFR_RNDD); },
        [&](mpfr_ptr r) { mpfr_const_pi(r, MPFR_RNDU); });
}

Interval Interval::sqrt_ui(unsigned long v, mpfr_prec_t prec) {
    return make_both(
        prec, [&](mpfr_ptr r) { mpfr_sqrt_ui(r, v, MPFR_RNDD); },
        [&](mpfr_ptr r) { mpfr_sqrt_ui(r, v, MPFR_RNDU); });
}

Interval Interval::golden_ratio(mpfr_prec_t prec) {
    Interval s = sqrt_ui(5, prec);
    Interval g = (s + exact_ui(1, prec));
    // halving is exact in binary
    Real lo(prec), hi(prec);
    mpfr_div_2ui(lo.raw(), g.lo().raw(), 1, MPFR_RNDD);
    mpfr_div_2ui(hi.raw(), g.hi().raw(), 1, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::entire(mpfr_prec_t prec) {
    return make_both(
        prec, [&](mpfr_ptr r) { mpfr_set_inf(r, -1); },
        [&](mpfr_ptr r) { mpfr_set_inf(r, +1); });
}

Interval Interval::operator-() const {
    mpfr_prec_t p = prec();
    Real lo(p), hi(p);
    mpfr_neg(lo.raw(), hi_.raw(), MPFR_RNDD);
    mpfr_neg(hi.raw(), lo_.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator+(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real lo(p), hi(p);
    mpfr_add(lo.raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real lo(p), hi(p);
    mpfr_sub(lo.raw(), a.lo().raw(), b.hi().raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi().raw(), b.lo().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real lo(p), hi(p), t(p);
    mpfr_srcptr al = a.lo().raw(), ah = a.hi().raw();
    mpfr_srcptr bl = b.lo().raw(), bh = b.hi().raw();

    mpfr_mul(lo.raw(), al, bl, MPFR_RNDD);
    mpfr_mul(t.raw(), al, bh, MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_mul(t.raw(), ah, bl, MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_mul(t.raw(), ah, bh, MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);

    mpfr_mul(hi.raw(), al, bl, MPFR_RNDU);
    mpfr_mul(t.raw(), al, bh, MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_mul(t.raw(), ah, bl, MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_mul(t.raw(), ah, bh, MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);

    return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    if (b.is_nan() || a.is_nan() || b.contains_zero()) return Interval::entire(p);

    Real lo(p), hi(p), t(p);
    mpfr_srcptr al = a.lo().raw(), ah = a.hi().raw();
    mpfr_srcptr bl = b.lo().raw(), bh = b.hi().raw();

    mpfr_div(lo.raw(), al, bl, MPFR_RNDD);
    mpfr_div(t.raw(), al, bh, MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_div(t.raw(), ah, bl, MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_div(t.raw(), ah, bh, MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);

    mpfr_div(hi.raw(), al, bl, MPFR_RNDU);
    mpfr_div(t.raw(), al, bh, MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_div(t.raw(), ah, bl, MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_div(t.raw(), ah, bh, MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);

    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_.raw()) < 0) throw DomainError("sqrt: enclosure extends below 0");
    mpfr_prec_t p = prec();
    Real lo(p), hi(p);
    mpfr_sqrt(lo.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_sqrt(hi.raw(), hi_.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_.raw()) < 0) throw DomainError("log: enclosure extends below 0");
    mpfr_prec_t p = prec();
    Real lo(p), hi(p);
    mpfr_log(lo.raw(), lo_.raw(), MPFR_RNDD); // log(+0) = -inf
    mpfr_log(hi.raw(), hi_.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::exp() const {
    mpfr_prec_t p = prec();
    Real lo(p), hi(p);
    mpfr_exp(lo.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_exp(hi.raw(), hi_.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::pow_ui(unsigned long e) const {
    if (mpfr_sgn(lo_.raw()) < 0) throw DomainError("pow_ui: enclosure extends below 0");
    mpfr_prec_t p = prec();
    Real lo(p), hi(p);
    mpfr_pow_ui(lo.raw(), lo_.raw(), e, MPFR_RNDD);
    mpfr_pow_ui(hi.raw(), hi_.raw(), e, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::rootn_ui(unsigned long k) const {
    if (mpfr_sgn(lo_.raw()) < 0) throw DomainError("rootn_ui: enclosure extends below 0");
    mpfr_prec_t p = prec();
    Real lo(p), hi(p);
    mpfr_rootn_ui(lo.raw(), lo_.raw(), k, MPFR_RNDD);
    mpfr_rootn_ui(hi.raw(), hi_.raw(), k, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::recip() const {
    mpfr_prec_t p = prec();
    if (is_nan() || contains_zero()) return entire(p);
    Real lo(p), hi(p);
    mpfr_ui_div(lo.raw(), 1, hi_.raw(), MPFR_RNDD);
    mpfr_ui_div(hi.raw(), 1, lo_.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

namespace {

std::string endpoint_str(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
    if (mpfr_nan_p(v)) return "nan";
    if (mpfr_inf_p(v)) return mpfr_sgn(v) > 0 ? "inf" : "-inf";
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dR%se", digits, rnd == MPFR_RNDD ? "D" : "U");
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v);
    return std::string(buf.data());
}

} // namespace

std::string Interval::str_lo(int digits) const {
    return endpoint_str(lo_.raw(), digits, MPFR_RNDD);
}

std::string Interval::str_hi(int digits) const {
    return endpoint_str(hi_.raw(), digits, MPFR_RNDU);
}

Tri lt_value(const Interval& x, const BigCount& v) {
    if (x.is_nan()) return Tri::unknown;
    if (mpfr_cmp_z(x.hi().raw(), v.get_mpz_t()) < 0) return Tri::yes;
    if (mpfr_cmp_z(x.lo().raw(), v.get_mpz_t()) >= 0) return Tri::no;
    return Tri::unknown;
}

Tri gt_value(const Interval& x, const BigCount& v) {
    if (x.is_nan()) return Tri::unknown;
    if (mpfr_cmp_z(x.lo().raw(), v.get_mpz_t()) > 0) return Tri::yes;
    if (mpfr_cmp_z(x.hi().raw(), v.get_mpz_t()) <= 0) return Tri::no;
    return Tri::unknown;
}

Tri lt_value(const Interval& x, const Rational& v) {
    if (x.is_nan()) return Tri::unknown;
    if (mpfr_cmp_q(x.hi().raw(), v.get_mpq_t()) < 0) return Tri::yes;
    if (mpfr_cmp_q(x.lo().raw(), v.get_mpq_t()) >= 0) return Tri::no;
    return Tri::unknown;
}

Tri gt_value(const Interval& x, const Rational& v) {
    if (x.is_nan()) return Tri::unknown;
    if (mpfr_cmp_q(x.lo().raw(), v.get_mpq_t()) > 0) return Tri::yes;
    if (mpfr_cmp_q(x.hi().raw(), v.get_mpq_t()) <= 0) return Tri::no;
    return Tri::unknown;
}

Tri lt(const Interval& a, const Interval& b) {
    if (a.is_nan() || b.is_nan()) return Tri::unknown;
    if (mpfr_cmp(a.hi().raw(), b.lo().raw()) < 0) return Tri::yes;
    if (mpfr_cmp(a.lo().raw(), b.hi().raw()) >= 0) return Tri::no;
    return Tri::unknown;
}

Tri le(const Interval& a, const Interval& b) {
    if (a.is_nan() || b.is_nan()) return Tri::unknown;
    if (mpfr_cmp(a.hi().raw(), b.lo().raw()) <= 0) return Tri::yes;
    if (mpfr_cmp(a.lo().raw(), b.hi().raw()) > 0) return Tri::no;
    return Tri::unknown;
}

Tri gt(const Interval& a, const Interval& b) { return lt(b, a); }
Tri ge(const Interval& a, const Interval& b) { return le(b, a); }

} // namespace parcert
