#include <doctest.h>
#include <json.hpp>

#include "abelianlab/catalog.hpp"
#include "abelianlab/io.hpp"

using namespace abelianlab;

TEST_CASE("series round-trip through CSV and JSON") {
    auto y = catalog::word("tm2", 64);
    for (const auto& kind : {StatisticKind::l_abelian(2), StatisticKind::ext_delta({1, 2}), StatisticKind::jump_min({0, 3})}) {
        auto s = series(y, kind, 40, "tm2");
        CHECK(io::series_from_json(io::series_to_json(s)) == s);
        CHECK(io::series_from_csv(io::series_to_csv(s), "tm2", kind) == s);
    }
    auto s = series(y, StatisticKind::factor(), 20, "tm2");
    s.values.erase(s.values.begin(), s.values.begin() + 5);
    s.n_lo = 5;
    CHECK(io::series_from_json(io::series_to_json(s)) == s);
    CHECK(io::series_from_csv(io::series_to_csv(s), "tm2", StatisticKind::factor()) == s);
}

TEST_CASE("CSV layout") {
    auto t = catalog::word("tm", 64);
    auto csv = io::series_to_csv(series(t, StatisticKind::l_abelian(2), 3));
    CHECK(csv == "n,value\n0,1\n1,2\n2,4\n3,6\n");
    CHECK_THROWS(io::series_from_csv("n,value\n0,x\n", "tm", StatisticKind::factor()));
    CHECK_THROWS(io::series_from_csv("a,b\n0,1\n", "tm", StatisticKind::factor()));
    CHECK_THROWS(io::series_from_csv("n,value\n0,1\n2,1\n", "tm", StatisticKind::factor()));
}

TEST_CASE("series JSON fields") {
    auto t = catalog::word("tm", 64);
    auto j = nlohmann::json::parse(io::series_to_json(series(t, StatisticKind::l_abelian(2), 3, "tm")));
    CHECK(j["word"] == "tm");
    CHECK(j["kind"] == "labelian:2");
    CHECK(j["range"] == nlohmann::json::array({0, 3}));
    CHECK(j["values"] == nlohmann::json::array({1, 2, 4, 6}));
}

TEST_CASE("relation sets round-trip") {
    GuessOptions o;
    o.truncation = 256;
    o.horizon = 4096;
    auto r = guess_relations(named_sequence("p1-pd2"), 2, o);
    auto text = io::relations_to_json(r);
    auto back = io::relations_from_json(text);
    CHECK(back.k == r.k);
    CHECK(back.label == r.label);
    CHECK(back.basis == r.basis);
    CHECK(back.relations == r.relations);
    CHECK(back.initial_values == r.initial_values);
    CHECK(back.truncation == r.truncation);
    CHECK(back.horizon == r.horizon);
    CHECK(io::relations_to_json(back) == text);

    auto rep = to_linear_representation(back);
    auto s = named_sequence("p1-pd2");
    for (std::uint64_t n = 0; n < 1000; ++n) REQUIRE(eval_linear_representation(rep, n) == s(n));
}

TEST_CASE("large rationals are written as strings") {
    RelationSet r;
    r.k = 2;
    r.basis = {{0, 0}};
    mpq_class big("123456789012345678901234567891/7");
    big.canonicalize();
    r.relations = {{{big}, {mpq_class(-1, 4)}}};
    r.initial_values = {3};
    auto j = nlohmann::json::parse(io::relations_to_json(r));
    CHECK(j["relations"][0]["coefficients"][0][0].is_string());
    auto back = io::relations_from_json(j.dump());
    CHECK(back.relations == r.relations);
}

TEST_CASE("reports serialize") {
    VerificationReport ok;
    ok.claim = "ok";
    ok.range = "n <= 4";
    ok.expect_eq(1, 1, "n=0");
    VerificationReport bad;
    bad.claim = "bad";
    bad.range = "n <= 4";
    bad.expect_eq(1, 2, "n=3");
    auto j = nlohmann::json::parse(io::reports_to_json({ok, bad}));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["outcome"] == "pass");
    CHECK(j[1]["outcome"] == "fail");
    CHECK(j[1]["counterexamples"][0]["inputs"] == "n=3");
    CHECK(j[1]["counterexamples"][0]["expected"] == "1");
    CHECK(j[1]["counterexamples"][0]["got"] == "2");
    auto text = io::reports_to_text({ok, bad});
    CHECK(text.find("bad") != std::string::npos);
    CHECK(text.find("n=3") != std::string::npos);
}
