#include <cmath>
#include <random>

#include <doctest.h>

#include "abelianlab/catalog.hpp"
#include "abelianlab/complexity.hpp"
#include "abelianlab/theorems.hpp"

using namespace abelianlab;

namespace {

const std::vector<std::int64_t> kA = {0, 1, 1, 2, 1, 2, 2, 2, 1, 2, 2, 3, 2, 3, 2, 2};

ReflectionSpec random_spec(std::mt19937_64& rng, unsigned l0_lo = 1, unsigned l0_hi = 4) {
    ReflectionSpec s;
    s.l0 = l0_lo + rng() % (l0_hi - l0_lo + 1);
    s.c = static_cast<std::int64_t>(rng() % 7) - 3;
    s.initials.resize(std::size_t{1} << s.l0);
    for (auto& v : s.initials) v = static_cast<std::int64_t>(rng() % 11) - 5;
    return s;
}

bool any_failed(const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs)
        if (!r.passed()) return true;
    return false;
}

}  // namespace

TEST_CASE("A sequence") {
    for (std::uint64_t n = 0; n < 16; ++n) {
        CHECK(a_sequence(n) == kA[n]);
        CHECK(reflection_eval(a_spec(), n) == kA[n]);
    }
    CHECK(a_sequence(1) == 1);
    CHECK(a_sequence(3) == 2);
    for (std::uint64_t n = 0; n <= 10000; ++n) REQUIRE(a_sequence(2 * n) == a_sequence(n));
    for (std::uint64_t n = 0; n < 4096; ++n) REQUIRE(solve_reflection(a_spec(), n) == a_sequence(n));
}

TEST_CASE("A relations") {
    CHECK(verify_A_relations(1 << 14).passed());
    CHECK(verify_A_relations(0).passed());

    auto bent = from_function("A'", [](std::uint64_t n) { return a_sequence(n) + (n == 5 ? 1 : 0); });
    auto r = verify_A_relations(64, bent);
    CHECK_FALSE(r.passed());
    REQUIRE_FALSE(r.counterexamples.empty());
    CHECK(r.counterexamples.front().inputs.find("n=0") != std::string::npos);
}

TEST_CASE("reflection evaluation") {
    ReflectionSpec constant_spec{0, 0, {7}};
    for (std::uint64_t n = 0; n < 200; ++n) CHECK(reflection_eval(constant_spec, n) == 7);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        auto spec = random_spec(rng, 0, 4);
        for (unsigned l = spec.l0; l < 30; ++l)
            REQUIRE(reflection_eval(spec, std::uint64_t{1} << l) == spec.initials[0] + spec.c);
        auto table = reflection_table(spec, 2048);
        for (std::uint64_t n = 0; n <= 2048; ++n) REQUIRE(table[n] == reflection_eval(spec, n));
    }

    ReflectionSpec bad{2, 1, {0, 1, 2}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("closed form for l0 = 2") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        auto spec = random_spec(rng, 2, 2);
        const auto& s = spec.initials;
        for (std::uint64_t q = 0; q < 200; ++q) {
            CHECK(solve_reflection(spec, 16 * q) == spec.c * a_sequence(q) + s[0]);
            for (std::uint64_t i = 6; i <= 10; ++i) {
                std::uint64_t mirror = i > 8 ? i - 8 : 8 - i;
                CHECK(reflection_eval(spec, 16 * q + i) == spec.c * a_sequence(2 * q + 1) + reflection_eval(spec, mirror));
            }
        }
    }
}

TEST_CASE("closed form matches the recurrence on random specs") {
    CHECK(verify_reflection_fuzz(100, 1 << 12, 42).passed());
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        auto spec = random_spec(rng);
        for (std::uint64_t n = 0; n <= 4096; ++n) REQUIRE(solve_reflection(spec, n) == reflection_eval(spec, n));
    }
}

TEST_CASE("logarithmic growth") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 5; ++i) {
        auto spec = random_spec(rng, 0, 4);
        std::int64_t init = 0;
        for (auto v : spec.initials) init = std::max(init, std::abs(v));
        const std::int64_t C = std::abs(spec.c), D = init + C;
        auto table = reflection_table(spec, 1 << 20);
        for (std::uint64_t n = 2; n <= (1u << 20); ++n)
            REQUIRE(std::abs(table[n]) <= C * (2 * static_cast<std::int64_t>(std::log2(n)) + 2) + D);
    }
}

TEST_CASE("telescoping along (4^(l+1) - 1) / 3") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        auto spec = random_spec(rng, 0, 4);
        for (unsigned l = (spec.l0 + 1) / 2; l <= 10 && l >= 1; ++l) {
            std::uint64_t n1 = ((std::uint64_t{1} << (2 * l + 2)) - 1) / 3;
            std::uint64_t n0 = ((std::uint64_t{1} << (2 * l)) - 1) / 3;
            REQUIRE(reflection_eval(spec, n1) - reflection_eval(spec, n0) == spec.c);
        }
    }
}

TEST_CASE("measured statistics follow the reflection recurrence") {
    auto x = catalog::word("pd2", 64), y = catalog::word("tm2", 64);
    auto d0 = series(x, StatisticKind::ext_delta({0}), 2048).values;
    auto p1 = series(x, StatisticKind::l_abelian(1), 2048).values;
    auto d12 = series(y, StatisticKind::ext_delta({1, 2}), 2048).values;
    ReflectionSpec sd0{2, 2, {d0.begin(), d0.begin() + 4}};
    ReflectionSpec sp1{2, 3, {p1.begin(), p1.begin() + 4}};
    ReflectionSpec sd12{1, 1, {d12.begin(), d12.begin() + 2}};
    auto t0 = reflection_table(sd0, 2048), t1 = reflection_table(sp1, 2048), t2 = reflection_table(sd12, 2048);
    CHECK(t0 == d0);
    CHECK(t1 == p1);
    CHECK(t2 == d12);
}

TEST_CASE("word suites on a tiny range") {
    CHECK(all_passed(verify_pd_suite(4)));
    CHECK(all_passed(verify_tm_suite(4)));
    CHECK(verify_pd_suite(4).size() == 8);
    CHECK(verify_tm_suite(4).size() == 7);
    CHECK(verify_cross_word(64).passed());
}

TEST_CASE("word suites on a moderate range") {
    CHECK(all_passed(verify_pd_suite(128)));
    CHECK(all_passed(verify_tm_suite(128)));
}

TEST_CASE("perturbed ground truth is caught") {
    auto g = pd_ground_truth(64);
    g.p1x[40] += 1;
    CHECK(any_failed(verify_pd_suite(g)));

    auto h = tm_ground_truth(64);
    h.min12[33] += 1;
    CHECK(any_failed(verify_tm_suite(h)));

    auto h2 = tm_ground_truth(64);
    h2.p2t[17] += 2;
    CHECK(any_failed(verify_tm_suite(h2)));
}

TEST_CASE("reports") {
    VerificationReport r;
    r.expect_eq(1, 1, "a");
    CHECK(r.passed());
    CHECK(r.checks == 1);
    for (int i = 0; i < 40; ++i) r.expect_eq(1, 2, "b" + std::to_string(i));
    CHECK_FALSE(r.passed());
    CHECK(r.failures == 40);
    CHECK(r.counterexamples.size() == 16);

    VerificationReport e;
    e.empirical = true;
    e.expect_eq(1, 2, "x");
    CHECK(all_passed({e}));
    CHECK_FALSE(all_passed({e, r}));
}

TEST_CASE("block conjecture") {
    auto p = catalog::word("pd", 64);
    auto r = conjecture_blocks(p, 3, 2048);
    CHECK(r.empirical);
    CHECK(r.passed());
    REQUIRE_FALSE(r.notes.empty());
    CHECK(r.notes.front() == "increments: even r +5, odd r +7");

    // the level-two case is the known recurrence with +3 on both parities
    auto r2 = conjecture_blocks(p, 2, 1024, 2, ParityIncrements{3, 3});
    CHECK(r2.passed());

    auto wrong = conjecture_blocks(p, 3, 512, 4, ParityIncrements{5, 5});
    CHECK_FALSE(wrong.passed());
    CHECK(all_passed({wrong}));
}

TEST_CASE("named sequences") {
    CHECK(named_sequence("a007302")(11) == 3);
    CHECK(named_sequence("const1")(12345) == 1);
    CHECK(named_sequence("p2-tm")(23) == 12);
    CHECK(named_sequence("pinf-tm")(3) == 6);
    CHECK(named_sequence("delta12-tm2")(8) == 1);
    CHECK(named_sequence("p1-pd3-mod2")(5) == 0);
    CHECK_THROWS_AS(named_sequence("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(named_sequence("p2-xx"), std::invalid_argument);
    CHECK_THROWS_AS(named_sequence("zz1-tm"), std::invalid_argument);
}
