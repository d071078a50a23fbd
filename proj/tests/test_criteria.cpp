#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parcert/criteria.hpp"
#include "parcert/errors.hpp"

using namespace parcert;

namespace {

BOPreset euler_preset() { return std::get<BOPreset>(make_preset("bo-euler-example21")); }

// Inputs with f(n) = n and unit c-factors; handy for boundary constructions.
BOCriterionInputs linear_inputs() {
    BOCriterionInputs in;
    in.env.label = "linear";
    in.env.n0 = 1;
    in.env.f = [](unsigned long n, mpfr_prec_t p) { return Interval::exact_ui(n, p); };
    in.env.c1 = [](unsigned long, mpfr_prec_t p) { return Interval::exact_ui(1, p); };
    in.env.c2 = [](unsigned long, mpfr_prec_t p) { return Interval::exact_ui(1, p); };
    in.g = [](unsigned long, mpfr_prec_t p) { return Interval::exact_ui(1, p); };
    in.h = [](unsigned long, mpfr_prec_t p) { return Interval::exact_ui(1, p); };
    return in;
}

} // namespace

TEST_CASE("condition 1 holds for the euler instance") {
    auto v = check_bo_condition1(euler_preset().inputs, 300);
    CHECK(v.ok());
    CHECK(v.checked_lo == 1);
    CHECK(v.checked_hi == 300);
}

TEST_CASE("condition 1 refuted by a boundary construction") {
    // f(n) = n makes f(a)+f(b)-f(a+b) = 0; any positive g refutes at a = b
    BOCriterionInputs in = linear_inputs();
    in.g = [](unsigned long, mpfr_prec_t p) { return Interval::from_rational(Rational(1, 100), p); };
    auto v = check_bo_condition1(in, 20);
    CHECK(v.status == VerdictStatus::refuted);
    CHECK_FALSE(v.witnesses.empty());
    CHECK(v.witnesses.front().a == v.witnesses.front().b);
}

TEST_CASE("condition 2 holds for the euler instance from b >= 9") {
    auto v = check_bo_condition2(euler_preset().inputs, 300);
    CHECK(v.ok());
    CHECK(v.checked_lo == 9);
}

TEST_CASE("condition 2 refuted immediately when h is too small") {
    BOCriterionInputs in = linear_inputs();
    in.env.c2 = [](unsigned long, mpfr_prec_t p) { return Interval::exact_ui(2, p); };
    auto v = check_bo_condition2(in, 10);
    CHECK(v.status == VerdictStatus::refuted);
    CHECK(v.witnesses.size() == 55); // every pair 1 <= b <= a <= 10
}

TEST_CASE("condition 3 threshold for the euler instance is 22, not the claimed 15") {
    auto v = check_bo_condition3(euler_preset().inputs, 500);
    REQUIRE(v.discovered_threshold.has_value());
    CHECK(*v.discovered_threshold == 22);
    // claimed start 15 => the scan range [15, 500] contains failures 15..21
    CHECK(v.status == VerdictStatus::refuted);
    CHECK(v.witnesses.size() == 7);
    CHECK(v.witnesses.front().a == 15);
    CHECK(v.witnesses.back().a == 21);
}

TEST_CASE("condition 3 point checks around the threshold") {
    auto in = euler_preset().inputs;
    CHECK(check_bo_condition3_at(in, 14) == Tri::no);
    CHECK(check_bo_condition3_at(in, 21) == Tri::no);
    CHECK(check_bo_condition3_at(in, 22) == Tri::yes);
    CHECK(check_bo_condition3_at(in, 100) == Tri::yes);
    CHECK(check_bo_condition3_at(in, 1) == Tri::no); // c1(1) = 0 forces +inf on the right
}

TEST_CASE("condition 3 with no passing suffix is refuted, not verified") {
    BOCriterionInputs in = linear_inputs();
    in.h = [](unsigned long, mpfr_prec_t p) { return Interval::exact_ui(8, p); };
    // g = 1 < log 8 - log 1 at every n
    auto v = check_bo_condition3(in, 30);
    CHECK_FALSE(v.discovered_threshold.has_value());
    CHECK(v.status == VerdictStatus::refuted);
    CHECK_FALSE(v.witnesses.empty());
}

TEST_CASE("full euler criterion run") {
    BOPreset p = euler_preset();
    auto rep = run_bo_criterion(p.inputs, p.seq, 300);
    CHECK(rep.cond1.ok());
    CHECK(rep.cond2.ok());
    CHECK(rep.cond3.status == VerdictStatus::refuted); // claimed 15 is too early
    CHECK(rep.combined_threshold == 22);
    CHECK(rep.cert.all_pass);
    CHECK(rep.conclusion.ok());
    CHECK(rep.overall == VerdictStatus::verified);
}

TEST_CASE("plane-partition criterion run") {
    auto p = std::get<BOPreset>(make_preset("bo-planepartition"));
    CHECK(p.inputs.n2 == 5); // max(n0 = 5, ceil((beta+1)^2) = 3)
    auto rep = run_bo_criterion(p.inputs, p.seq, 200);
    REQUIRE(rep.cond3.discovered_threshold.has_value());
    CHECK(*rep.cond3.discovered_threshold == 16);
    CHECK(rep.combined_threshold == 16);
    CHECK(rep.cond1.ok());
    CHECK(rep.cond2.ok());
    CHECK(rep.cert.all_pass);
    CHECK(rep.conclusion.ok());
    CHECK(rep.overall == VerdictStatus::verified);
}

TEST_CASE("mary criterion run (m = 2)") {
    auto p = std::get<BOPreset>(make_preset("bo-mary", Config{}, 2));
    CHECK(p.inputs.n1 == 9);
    REQUIRE(p.inputs.env.cert_window_hi.has_value());
    CHECK(*p.inputs.env.cert_window_hi == 6); // (1/2, 2) containment window

    auto rep = run_bo_criterion(p.inputs, p.seq, 400);
    REQUIRE(rep.cond3.discovered_threshold.has_value());
    CHECK(*rep.cond3.discovered_threshold == 19);
    CHECK(rep.combined_threshold == 19);
    CHECK(rep.cond1.ok());
    CHECK(rep.cond2.ok()); // constants give ratio exactly 4 <= 4
    CHECK(rep.cert.all_pass);
    CHECK(rep.cert.n_hi == 6);
    CHECK(rep.conclusion.ok());
    CHECK(rep.overall == VerdictStatus::verified);
}

TEST_CASE("mary condition-3 thresholds grow with the base") {
    auto p3 = std::get<BOPreset>(make_preset("bo-mary", Config{}, 3));
    auto v3 = check_bo_condition3(p3.inputs, 200);
    REQUIRE(v3.discovered_threshold.has_value());
    CHECK(*v3.discovered_threshold == 26);

    auto p5 = std::get<BOPreset>(make_preset("bo-mary", Config{}, 5));
    auto v5 = check_bo_condition3(p5.inputs, 200);
    REQUIRE(v5.discovered_threshold.has_value());
    CHECK(*v5.discovered_threshold == 39);
}

TEST_CASE("lc-chen criterion run") {
    auto p = std::get<LCPreset>(make_preset("lc-chen"));
    auto rep = run_lc_criterion(p.inputs, p.seq, 300);
    CHECK(rep.cond1.ok());
    CHECK(rep.cond2.ok());
    REQUIRE(rep.closing.has_value());
    REQUIRE(rep.closing->discovered_threshold.has_value());
    CHECK(*rep.closing->discovered_threshold == 94);
    CHECK(rep.closing->ok());
    CHECK(rep.combined_threshold == 94);
    CHECK(rep.cert.all_pass); // chen containment from 37
    CHECK(rep.conclusion.ok());
    REQUIRE(rep.exact_min_clean.has_value());
    CHECK(*rep.exact_min_clean == 26);
    CHECK(rep.overall == VerdictStatus::verified);
}

TEST_CASE("lc-chen closing inequality conclusively fails at 93") {
    auto p = std::get<LCPreset>(make_preset("lc-chen"));
    PrecisionLadder lad;
    Tri at93 = resolve(lad, [&](mpfr_prec_t prec) {
        return ge(p.inputs.closing_lhs(93, prec), p.inputs.closing_rhs(93, prec));
    });
    CHECK(at93 == Tri::no);
    Tri at94 = resolve(lad, [&](mpfr_prec_t prec) {
        return ge(p.inputs.closing_lhs(94, prec), p.inputs.closing_rhs(94, prec));
    });
    CHECK(at94 == Tri::yes);
}

TEST_CASE("degenerate h is rejected by input validation") {
    auto p = std::get<LCPreset>(make_preset("lc-chen"));
    p.inputs.h = [](unsigned long, mpfr_prec_t prec) { return Interval::exact_ui(0, prec); };
    CHECK_THROWS_AS(run_lc_criterion(p.inputs, p.seq, 200), InvalidSpec);
}

TEST_CASE("ratio descent: exact checks") {
    CHECK(check_ratio_descent(SequenceSpec::euler(), 26, 200).ok());
    CHECK(check_ratio_descent(SequenceSpec::fib_even(), 1, 200).ok());

    auto mary = check_ratio_descent(SequenceSpec::mary(2), 2, 100);
    CHECK(mary.status == VerdictStatus::refuted);
    for (const auto& w : mary.witnesses)
        CHECK(w.a % 2 == 1); // n = -1 mod 2

    auto low = check_ratio_descent(SequenceSpec::euler(), 1, 100);
    CHECK(low.status == VerdictStatus::refuted);
    for (const auto& w : low.witnesses) {
        CHECK(w.a % 2 == 1);
        CHECK(w.a <= 25);
    }

    CHECK_THROWS_AS(check_ratio_descent(SequenceSpec::euler(), 10, 11), DomainError);
    CHECK_THROWS_AS(check_ratio_descent(SequenceSpec::fib_even(), 0, 50), DomainError);
    // interior zeros (no partition of odd n into parts {2}) make ratios undefined
    CHECK_THROWS_AS(check_ratio_descent(SequenceSpec::restricted({2}), 1, 20), DomainError);
    CHECK_THROWS_AS(limsup_probe(SequenceSpec::restricted({2}), 2, 20), DomainError);
}

TEST_CASE("anchored implication: euler at 26 verifies, degenerate anchors refute") {
    auto good = check_anchored_implication(SequenceSpec::euler(), 26, 100);
    CHECK(good.hypothesis.ok());
    CHECK(good.conclusion.ok());
    CHECK(good.overall == VerdictStatus::verified);

    auto fib = check_anchored_implication(SequenceSpec::fib_even(), 1, 10);
    CHECK(fib.hypothesis.status == VerdictStatus::refuted);
    CHECK(fib.hypothesis.witnesses.front().a == 1); // q(1)q(1) = 1 < q(2)

    auto euler1 = check_anchored_implication(SequenceSpec::euler(), 1, 10);
    CHECK(euler1.hypothesis.status == VerdictStatus::refuted);

    CHECK_THROWS_AS(check_anchored_implication(SequenceSpec::euler(), 30, 59), DomainError);
}

TEST_CASE("seeded implication: shifted euler verifies hypothesis and conclusion") {
    auto rep = check_seeded_implication(SequenceSpec::shifted(SequenceSpec::euler(), 26), 120);
    CHECK(rep.f0 == 2436);
    CHECK(rep.f0_at_least_one);
    CHECK(rep.log_concavity.ok());
    CHECK(rep.conclusion.ok());
    CHECK(rep.overall == VerdictStatus::verified);
}

TEST_CASE("seeded implication: fib-even refutes f(0) >= 1 and the conclusion fails") {
    auto rep = check_seeded_implication(SequenceSpec::fib_even(), 60);
    CHECK(rep.f0 == 0);
    CHECK_FALSE(rep.f0_at_least_one);
    CHECK(rep.log_concavity.ok()); // q is log-concave (Cassini)
    CHECK(rep.conclusion.status == VerdictStatus::refuted);
    // every admissible pair violates: sum over b of pairs with a+b <= 60
    CHECK(rep.conclusion.witnesses.size() == 900);
    CHECK(rep.overall == VerdictStatus::refuted);
}

TEST_CASE("seeded implication: shifted fib-even satisfies the product inequality") {
    for (unsigned long j : {1ul, 2ul, 3ul}) {
        auto rep = check_seeded_implication(SequenceSpec::shifted(SequenceSpec::fib_even(), j), 60);
        CHECK(rep.f0_at_least_one);
        CHECK(rep.overall == VerdictStatus::verified);
    }
}

TEST_CASE("limsup probe: euler far below, fib-even violated") {
    auto eu = limsup_probe(SequenceSpec::euler(), 26, 300);
    CHECK(eu.status == ProbeStatus::plausible);
    CHECK(eu.f_n0 == Rational(2436));
    CHECK(eu.trailing_max < eu.f_n0);

    auto fib = limsup_probe(SequenceSpec::fib_even(), 2, 120);
    CHECK(fib.status == ProbeStatus::violated_on_window);
    CHECK(fib.f_n0 == Rational(3));
    CHECK(fib.trailing_max >= fib.f_n0);

    CHECK_THROWS_AS(limsup_probe(SequenceSpec::euler(), 26, 52), DomainError);
    CHECK_THROWS_AS(limsup_probe(SequenceSpec::fib_even(), 0, 100), DomainError);
}

TEST_CASE("limsup probe: constant sequence is plausible") {
    auto rep = limsup_probe_fn([](std::size_t) { return BigCount(3); }, 5, 100);
    CHECK(rep.status == ProbeStatus::plausible);
    CHECK(rep.trailing_max == Rational(1));
    CHECK(rep.f_n0 == Rational(3));
}

TEST_CASE("unknown preset id") {
    CHECK_THROWS_AS(make_preset("bo-unknown"), InvalidSpec);
    CHECK(preset_ids().size() == 4);
}

TEST_CASE("soundness of refuted: witnesses re-verify independently") {
    // interval-based refutations re-check conclusively at higher precision
    auto preset = euler_preset();
    auto cond3 = check_bo_condition3(preset.inputs, 100);
    REQUIRE(cond3.status == VerdictStatus::refuted);
    for (const auto& w : cond3.witnesses)
        CHECK(check_bo_condition3_at(preset.inputs, w.a, PrecisionLadder{256, 8192}) == Tri::no);

    // exact refutations re-check against a fresh engine
    auto ratio = check_ratio_descent(SequenceSpec::mary(2), 2, 60);
    REQUIRE(ratio.status == VerdictStatus::refuted);
    Sequence fresh(SequenceSpec::mary(2));
    fresh.ensure(61);
    for (const auto& w : ratio.witnesses) {
        const unsigned long n = w.a;
        CHECK(fresh.at(n) * fresh.at(n) <= fresh.at(n - 1) * fresh.at(n + 1));
    }
}

TEST_CASE("config can override preset thresholds") {
    Config cfg = Config::from_string("criterion.n2 = 12\ncriterion.n3 = 22\n");
    auto p = std::get<BOPreset>(make_preset("bo-euler-example21", cfg));
    CHECK(p.inputs.n2 == 12);
    REQUIRE(p.inputs.n3_claimed.has_value());
    CHECK(*p.inputs.n3_claimed == 22);
    // with the corrected claim, condition 3 verifies on its whole range
    auto v = check_bo_condition3(p.inputs, 100);
    CHECK(v.ok());
    CHECK(v.checked_lo == 22);

    Config lcfg = Config::from_string("criterion.closing = 95\n");
    auto lc = std::get<LCPreset>(make_preset("lc-chen", lcfg));
    REQUIRE(lc.inputs.closing_claimed.has_value());
    CHECK(*lc.inputs.closing_claimed == 95);
}
