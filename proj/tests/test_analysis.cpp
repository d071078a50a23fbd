#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "parcert/analysis.hpp"
#include "parcert/criteria.hpp"
#include "parcert/errors.hpp"

using namespace parcert;

TEST_CASE("euler BO violations sit exactly in the a+b <= 9 corner") {
    auto rep = scan_bo(SequenceSpec::euler(), 2, 100);
    struct Expect {
        unsigned long a, b;
        long margin;
    };
    const Expect expected[] = {{2, 2, -1}, {3, 2, -1}, {4, 2, -1}, {5, 2, -1}, {6, 2, 0},
                               {7, 2, 0},  {3, 3, -2}, {4, 3, 0},  {5, 3, -1}};
    REQUIRE(rep.violations.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(rep.violations[i].a == expected[i].a);
        CHECK(rep.violations[i].b == expected[i].b);
        CHECK(rep.violations[i].margin == expected[i].margin);
        CHECK(rep.violations[i].a + rep.violations[i].b <= 9);
    }
    REQUIRE(rep.min_clean_threshold.has_value());
    CHECK(*rep.min_clean_threshold == 4);
}

TEST_CASE("euler BO scan from 15 is clean") {
    auto rep = scan_bo(SequenceSpec::euler(), 15, 100);
    CHECK(rep.violations.empty());
    CHECK_FALSE(rep.min_clean_threshold.has_value());
}

TEST_CASE("fib-even violates BO at every admissible pair") {
    auto rep = scan_bo(SequenceSpec::fib_even(), 1, 60);
    CHECK(rep.checked == 900);
    CHECK(rep.violations.size() == 900);
    CHECK_FALSE(rep.min_clean_threshold.has_value()); // persists to the boundary
}

TEST_CASE("euler log-concavity violations are the odd n <= 25") {
    auto rep = scan_logconcavity(SequenceSpec::euler(), 2, 500);
    REQUIRE(rep.min_clean_threshold.has_value());
    CHECK(*rep.min_clean_threshold == 26);
    REQUIRE(rep.violations.size() == 12);
    for (const auto& v : rep.violations) {
        CHECK(v.a % 2 == 1);
        CHECK(v.a >= 3);
        CHECK(v.a <= 25);
        CHECK(v.margin < 0);
    }
}

TEST_CASE("mary log-concavity violations cover every n = -1 mod m") {
    for (unsigned long m : {2ul, 3ul, 5ul}) {
        auto rep = scan_logconcavity(SequenceSpec::mary(m), 2, 600);
        std::vector<bool> violated(601, false);
        for (const auto& v : rep.violations) {
            violated[v.a] = true;
            if (v.a % m == m - 1) CHECK(v.margin < 0);
        }
        for (unsigned long n = 2; n <= 600; ++n)
            if (n % m == m - 1) CHECK(violated[n]);
        if (m == 2) CHECK(rep.violations.size() == 299); // only the odd indices 3..599
    }
}

TEST_CASE("fib-even log-concavity is clean (Cassini margin 1)") {
    auto rep = scan_logconcavity(SequenceSpec::fib_even(), 2, 200);
    CHECK(rep.violations.empty());
    CHECK(rep.checked == 199);
}

TEST_CASE("scan preconditions") {
    CHECK_THROWS_AS(scan_bo(SequenceSpec::euler(), 10, 19), DomainError);
    CHECK_THROWS_AS(scan_logconcavity(SequenceSpec::fib_even(), 1, 50), DomainError);
    CHECK_THROWS_AS(find_min_bo_threshold(SequenceSpec::euler(), 3), DomainError);
}

TEST_CASE("parallel scans match the serial reference exactly") {
    Sequence p(SequenceSpec::euler());
    auto serial = scan_bo_reference(p, 1, 400);
    auto parallel = scan_bo(p, 1, 400, 4);
    CHECK(serial.checked == parallel.checked);
    REQUIRE(serial.violations.size() == parallel.violations.size());
    for (std::size_t i = 0; i < serial.violations.size(); ++i) {
        CHECK(serial.violations[i].a == parallel.violations[i].a);
        CHECK(serial.violations[i].b == parallel.violations[i].b);
        CHECK(serial.violations[i].margin == parallel.violations[i].margin);
    }
    CHECK(serial.min_clean_threshold == parallel.min_clean_threshold);

    Sequence m2(SequenceSpec::mary(2));
    auto lcs = scan_logconcavity_reference(m2, 2, 5000);
    auto lcp = scan_logconcavity(m2, 2, 5000, 4);
    REQUIRE(lcs.violations.size() == lcp.violations.size());
    for (std::size_t i = 0; i < lcs.violations.size(); ++i)
        CHECK(lcs.violations[i].a == lcp.violations[i].a);
}

TEST_CASE("min BO thresholds") {
    auto eu = find_min_bo_threshold(SequenceSpec::euler(), 100);
    REQUIRE(eu.has_value());
    CHECK(*eu == 4);

    auto fib = find_min_bo_threshold(SequenceSpec::fib_even(), 60);
    CHECK_FALSE(fib.has_value());

    auto m2 = find_min_bo_threshold(SequenceSpec::mary(2), 500);
    REQUIRE(m2.has_value());
    CHECK(*m2 == 4);
}

TEST_CASE("cassini audit: margin exactly 1 everywhere") {
    auto v = cassini_audit(2000);
    CHECK(v.ok());
    CHECK(v.checked_hi == 2000);
    CHECK(v.witnesses.empty());
    CHECK_THROWS_AS(cassini_audit(1), DomainError);
}

TEST_CASE("golden bounds audit needs and survives precision escalation") {
    auto v = golden_bounds_audit(500);
    CHECK(v.ok());

    // a 64-bit cap cannot settle the upper bound high in the range
    PrecisionLadder tight{64, 64};
    auto capped = golden_bounds_audit(500, tight);
    CHECK(capped.status == VerdictStatus::inconclusive);
    CHECK_FALSE(capped.unresolved.empty());
    CHECK(capped.witnesses.empty()); // never misreported as a failure
}

TEST_CASE("bo gap audit for q") {
    auto v = bo_gap_audit_q(40);
    CHECK(v.ok());
    CHECK_THROWS_AS(bo_gap_audit_q(2), DomainError);
}

TEST_CASE("scanner/criteria agreement on overlapping regions") {
    // exact BO conclusion inside the criterion vs a fresh reference scan
    auto preset = std::get<BOPreset>(make_preset("bo-euler-example21"));
    auto rep = run_bo_criterion(preset.inputs, preset.seq, 120);
    Sequence p(SequenceSpec::euler());
    auto scan = scan_bo_reference(p, rep.combined_threshold, 240, 120);
    CHECK(rep.conclusion.witnesses.size() == scan.violations.size());

    // ratio descent vs cross-multiplied log-concavity, index by index
    auto ratio = check_ratio_descent(SequenceSpec::mary(3), 2, 300);
    auto lc = scan_logconcavity(SequenceSpec::mary(3), 3, 300);
    std::vector<unsigned long> from_ratio, from_scan;
    for (const auto& w : ratio.witnesses)
        if (w.a >= 3) from_ratio.push_back(w.a);
    for (const auto& v : lc.violations)
        from_scan.push_back(v.a);
    CHECK(from_ratio == from_scan);
}

TEST_CASE("soundness of refuted: scan violations re-verify from a fresh engine") {
    auto rep = scan_bo(SequenceSpec::euler(), 2, 100);
    Sequence fresh(SequenceSpec::euler());
    fresh.ensure(100);
    for (const auto& v : rep.violations) {
        CHECK(fresh.at(v.a) * fresh.at(v.b) <= fresh.at(v.a + v.b));
        CHECK(v.lhs == fresh.at(v.a) * fresh.at(v.b));
        CHECK(v.rhs == fresh.at(v.a + v.b));
    }
}

TEST_CASE("csv rows carry kind, indices, and exact margins") {
    auto rep = scan_bo(SequenceSpec::euler(), 2, 100);
    std::string csv = scan_report_csv(rep);
    CHECK(csv.find("kind,index_a,index_b,lhs,rhs,margin\n") == 0);
    CHECK(csv.find("bo,6,2,22,22,0\n") != std::string::npos);
    CHECK(csv.find("bo,3,3,9,11,-2\n") != std::string::npos);
}

TEST_CASE("determinism: identical inputs give identical reports") {
    auto a = scan_bo(SequenceSpec::euler(), 2, 120, 3);
    auto b = scan_bo(SequenceSpec::euler(), 2, 120, 3);
    CHECK(scan_report_csv(a) == scan_report_csv(b));
    CHECK(a.region == b.region);
}
