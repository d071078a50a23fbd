#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parcert/config.hpp"
#include "parcert/envelopes.hpp"
#include "parcert/errors.hpp"
#include "parcert/sequences.hpp"

using namespace parcert;

TEST_CASE("lehmer lower bound is exactly zero at n = 1 and below p(1)") {
    auto [lo, hi] = lehmer_envelope(1, 64);
    CHECK(lo.contains_zero());
    CHECK(lt_value(lo, BigCount(1)) == Tri::yes); // 0 < p(1)
    CHECK(gt_value(hi, BigCount(1)) == Tri::yes);
}

TEST_CASE("lehmer brackets exact p(n) at sample points") {
    Sequence p(SequenceSpec::euler());
    p.ensure(100);
    for (unsigned long n : {2ul, 26ul, 100ul}) {
        auto [lo, hi] = lehmer_envelope(n, 96);
        CHECK(lt_value(lo, p.at(n)) == Tri::yes);
        CHECK(gt_value(hi, p.at(n)) == Tri::yes);
    }
}

TEST_CASE("lehmer certification passes on [2, 300]") {
    auto rep = certify_envelope(make_lehmer_envelope(), SequenceSpec::euler(), 2, 300);
    CHECK(rep.all_pass);
    CHECK(rep.checked == 299);
}

TEST_CASE("chen certification passes on [37, 300] and fails exactly on [2, 36]") {
    Sequence p(SequenceSpec::euler());
    auto good = certify_envelope(make_chen_envelope(), p, 37, 300);
    CHECK(good.all_pass);

    auto below = certify_envelope(make_chen_envelope(), p, 1, 36);
    CHECK_FALSE(below.all_pass);
    REQUIRE(below.first_failure.has_value());
    CHECK(*below.first_failure == 2);
    CHECK(below.issues.size() == 35); // n = 1 passes, 2..36 fail
    for (const auto& issue : below.issues) {
        CHECK(issue.n >= 2);
        CHECK(issue.n <= 36);
    }
}

TEST_CASE("envelope ordering lower < upper") {
    for (unsigned long n = 2; n <= 200; ++n) {
        auto [llo, lhi] = lehmer_envelope(n, 64);
        CHECK(lt(llo, lhi) == Tri::yes);
        auto [clo, chi] = chen_envelope(n, 64);
        CHECK(lt(clo, chi) == Tri::yes);
    }
}

TEST_CASE("chen_mu is increasing and matches the envelope's exponent") {
    Interval prev = chen_mu(1, 96);
    for (unsigned long n = 2; n <= 50; ++n) {
        Interval cur = chen_mu(n, 96);
        CHECK(lt(prev, cur) == Tri::yes);
        prev = cur;
    }
    // e^{mu(37)} times the c-factors reproduces chen_envelope(37)
    auto [lo, hi] = chen_envelope(37, 96);
    Sequence p(SequenceSpec::euler());
    p.ensure(37);
    CHECK(lt_value(lo, p.at(37)) == Tri::yes);
    CHECK(gt_value(hi, p.at(37)) == Tri::yes);
}

TEST_CASE("binomial bracket: j = 0 collapses to sqrt(n)") {
    auto [tm, tp] = binomial_bracket(0, 25, 64);
    CHECK(mpfr_cmp(tm.lo().raw(), tp.lo().raw()) == 0);
    CHECK(mpfr_cmp(tm.hi().raw(), tp.hi().raw()) == 0);
    CHECK(lt_value(tm, BigCount(5)) == Tri::no);
    CHECK(gt_value(tm, BigCount(5)) == Tri::no); // exactly 5
}

TEST_CASE("binomial bracket holds strictly for j in [-5,5]\\{0}, n <= 1000") {
    PrecisionLadder lad;
    for (long j = -5; j <= 5; ++j) {
        if (j == 0) continue;
        for (unsigned long n : {7ul, 25ul, 64ul, 111ul, 500ul, 1000ul}) {
            if (static_cast<unsigned long>(j < 0 ? -j : j) >= n) continue;
            Tri below = resolve(lad, [&](mpfr_prec_t p) {
                Interval root = Interval::exact_ui(
                                    static_cast<unsigned long>(static_cast<long>(n) + j), p)
                                    .sqrt();
                return lt(binomial_bracket(j, n, p).first, root);
            });
            Tri above = resolve(lad, [&](mpfr_prec_t p) {
                Interval root = Interval::exact_ui(
                                    static_cast<unsigned long>(static_cast<long>(n) + j), p)
                                    .sqrt();
                return lt(root, binomial_bracket(j, n, p).second);
            });
            CHECK(below == Tri::yes);
            CHECK(above == Tri::yes);
        }
    }
    CHECK_THROWS_AS(binomial_bracket(25, 25, 64), DomainError);
    CHECK_THROWS_AS(binomial_bracket(-31, 30, 64), DomainError);
}

TEST_CASE("bracket exact checks from the worked instances") {
    // t_{-1}(25) < sqrt(26) < t_{+1}(25) and the mirrored j = -1 case
    for (long j : {1l, -1l}) {
        auto [tm, tp] = binomial_bracket(j, 25, 96);
        unsigned long target = static_cast<unsigned long>(25 + j);
        Interval root = Interval::exact_ui(target, 96).sqrt();
        CHECK(lt(tm, root) == Tri::yes);
        CHECK(lt(root, tp) == Tri::yes);
    }
}

TEST_CASE("wright defaults certify against exact plane partitions on [5, 300]") {
    WrightParams w = WrightParams::defaults();
    CHECK(w.n0 == 5);
    Sequence pp(SequenceSpec::plane());
    auto rep = certify_envelope(make_wright_envelope(w), pp, w.n0, 300);
    CHECK(rep.all_pass);

    // containment exactly at the calibration start
    pp.ensure(5);
    auto [lo, hi] = wright_envelope(w, 5, 96);
    CHECK(lt_value(lo, pp.at(5)) == Tri::yes);
    CHECK(gt_value(hi, pp.at(5)) == Tri::yes);

    for (unsigned long n : {5ul, 50ul, 300ul}) {
        auto [l, u] = wright_envelope(w, n, 96);
        CHECK(lt(l, u) == Tri::yes);
    }
}

TEST_CASE("mahler (1/2, 2) containment windows per base") {
    struct Case {
        unsigned long m, expected_end;
    } cases[] = {{2, 6}, {3, 7}, {5, 8}};
    for (auto c : cases) {
        MahlerParams params = MahlerParams::defaults(c.m);
        BoundEnvelope env = make_mahler_envelope(params);
        Sequence seq(SequenceSpec::mary(c.m));
        auto end = containment_window_end(env, seq, 1, 64);
        REQUIRE(end.has_value());
        CHECK(*end == c.expected_end);

        auto rep = certify_envelope(env, seq, 1, c.expected_end);
        CHECK(rep.all_pass);
        auto beyond = certify_envelope(env, seq, 1, c.expected_end + 1);
        CHECK_FALSE(beyond.all_pass);
        REQUIRE(beyond.first_failure.has_value());
        CHECK(*beyond.first_failure == c.expected_end + 1);
    }
}

TEST_CASE("mahler exponent vanishes at n = 1") {
    MahlerParams params = MahlerParams::defaults(2);
    auto [lo, hi] = mahler_envelope(params, 1, 64);
    // (log 1)^2 = 0, so the envelope is exactly (1/2, 2)
    CHECK(lt_value(lo, Rational(1, 2)) == Tri::no);
    CHECK(gt_value(lo, Rational(1, 2)) == Tri::no);
    CHECK(lt_value(hi, Rational(2)) == Tri::no);
    CHECK(gt_value(hi, Rational(2)) == Tri::no);
}

TEST_CASE("fitted mahler constants certify on their range") {
    MahlerParams fitted = fit_mahler_constants(2, 2, 100);
    CHECK(fitted.c1 < fitted.c2);
    CHECK(fitted.c1 > 0);
    Sequence seq(SequenceSpec::mary(2));
    auto rep = certify_envelope(make_mahler_envelope(fitted), seq, 2, 100);
    CHECK(rep.all_pass);
}

TEST_CASE("wright params from config override defaults") {
    Config cfg = Config::from_string("wright.beta = 3/4\nwright.n0 = 7\n");
    WrightParams w = WrightParams::from_config(cfg);
    CHECK(w.beta == Rational(3, 4));
    CHECK(w.n0 == 7);
    CHECK(w.gamma == WrightParams::defaults().gamma);

    Config mcfg = Config::from_string("mahler.c1 = 1/4\nmahler.window_hi = 9\n");
    MahlerParams m = MahlerParams::from_config(mcfg, 3);
    CHECK(m.c1 == Rational(1, 4));
    CHECK(m.window_hi == 9);
    CHECK(m.c2 == 2);
}

TEST_CASE("parallel certification matches the serial reference") {
    Sequence p(SequenceSpec::euler());
    auto serial = certify_envelope_reference(make_chen_envelope(), p, 30, 150);
    auto parallel = certify_envelope(make_chen_envelope(), p, 30, 150, {}, 3);
    CHECK(serial.all_pass == parallel.all_pass);
    REQUIRE(serial.issues.size() == parallel.issues.size());
    for (std::size_t i = 0; i < serial.issues.size(); ++i) {
        CHECK(serial.issues[i].n == parallel.issues[i].n);
        CHECK(serial.issues[i].lower == parallel.issues[i].lower);
        CHECK(serial.issues[i].upper == parallel.issues[i].upper);
    }
    CHECK(serial.first_failure == parallel.first_failure);
}

TEST_CASE("certification range validation") {
    Sequence p(SequenceSpec::euler());
    CHECK_THROWS_AS(certify_envelope(make_lehmer_envelope(), p, 0, 10), DomainError);
    CHECK_THROWS_AS(certify_envelope(make_lehmer_envelope(), p, 10, 5), DomainError);
}
