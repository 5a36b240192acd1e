#include <cstdlib>
#include <random>

#include <doctest.h>

#include "abelianlab/catalog.hpp"
#include "abelianlab/word.hpp"

using namespace abelianlab;

namespace {

std::string str(const WordPrefix& w, std::size_t len) { return format_word(w.prefix(len), w.alphabet()); }

std::vector<std::string> strs(const FactorSet& fs, Alphabet a) {
    std::vector<std::string> out;
    for (const auto& u : fs.factors) out.push_back(format_word(u, a));
    return out;
}

}  // namespace

TEST_CASE("fixed point prefixes") {
    CHECK(str(iterate_fixed_point(catalog::thue_morse(), 0, 16), 16) == "0110100110010110");
    CHECK(str(iterate_fixed_point(catalog::period_doubling(), 0, 20), 20) == "01000101010001000100");
    CHECK(str(iterate_fixed_point(catalog::phi(), 1, 32), 32) == "12001212120012001200121212001212");
    CHECK(str(catalog::word("tm2", 24), 24) == "132120132012132120121320");
    CHECK(str(catalog::word("pd3", 18), 18) == "240125252401240124");
}

TEST_CASE("fixed point prefixes are stable under further iteration") {
    auto a = iterate_fixed_point(catalog::thue_morse(), 0, 100);
    auto b = iterate_fixed_point(catalog::thue_morse(), 0, 5000);
    REQUIRE(a.size() >= 100);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("non-prolongable seeds are rejected") {
    CHECK_THROWS_AS(iterate_fixed_point(catalog::period_doubling(), 1, 16), NotProlongable);
    CHECK_THROWS_AS(iterate_fixed_point(catalog::phi(), 0, 16), NotProlongable);
    auto m = catalog::parse_morphism("0:0,1:10");
    CHECK_THROWS_AS(iterate_fixed_point(m, 0, 16), NotProlongable);
}

TEST_CASE("codings") {
    auto tau = catalog::tau3();
    auto w = WordPrefix::literal(parse_word("12001"), Alphabet(3));
    CHECK(format_word(apply_coding(tau, w).letters(), Alphabet(3)) == "21002");

    auto id = catalog::parse_morphism("0:0,1:1,2:2");
    auto x = catalog::word("pd2", 200);
    auto same = apply_coding(id, x);
    CHECK(std::equal(same.letters().begin(), same.letters().end(), x.letters().begin(), x.letters().end()));

    auto y = catalog::word("tm2", 1 << 16);
    auto p = catalog::word("pd", 1 << 16);
    auto gy = apply_coding(catalog::g(), y);
    std::size_t overlap = std::min(gy.size(), p.size());
    REQUIRE(overlap >= (1u << 16));
    bool equal = true;
    for (std::size_t i = 0; i < overlap; ++i) equal = equal && gy[i] == p[i];
    CHECK(equal);

    auto big = WordPrefix::literal(parse_word("0123"), Alphabet(4));
    CHECK_THROWS_AS(apply_coding(tau, big), AlphabetMismatch);
}

TEST_CASE("block codings") {
    auto w = WordPrefix::literal(parse_word("011010011"), Alphabet(2));
    CHECK(format_word(block_coding(w, 2).letters(), Alphabet(4)) == "13212013");
    auto v = WordPrefix::literal(parse_word("001101101"), Alphabet(2));
    CHECK(format_word(block_coding(v, 2).letters(), Alphabet(4)) == "01321321");
    auto single = block_coding(WordPrefix::literal(parse_word("101"), Alphabet(2)), 3);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == 5);
    CHECK_THROWS_AS(block_coding(WordPrefix::literal(parse_word("01"), Alphabet(2)), 3), TooShort);

    SUBCASE("block(pd, 2) and block(tm, 2) are fixed points") {
        const std::size_t len = 1 << 16;
        auto bx = block_coding(iterate_fixed_point(catalog::period_doubling(), 0, len + 1), 2);
        auto fx = iterate_fixed_point(catalog::phi(), 1, len);
        auto by = block_coding(iterate_fixed_point(catalog::thue_morse(), 0, len + 1), 2);
        auto fy = iterate_fixed_point(catalog::nu(), 1, len);
        bool ok_x = true, ok_y = true;
        for (std::size_t i = 0; i < len; ++i) {
            ok_x = ok_x && bx[i] == fx[i];
            ok_y = ok_y && by[i] == fy[i];
        }
        CHECK(ok_x);
        CHECK(ok_y);
    }
}

TEST_CASE("parikh vectors and occurrences") {
    CHECK(parikh(Word{}, Alphabet(3)).counts == std::vector<std::uint64_t>{0, 0, 0});
    CHECK(parikh(parse_word("00"), Alphabet(3)).counts == std::vector<std::uint64_t>{2, 0, 0});
    auto pv = parikh(parse_word("12001212120012001200121212001212"), Alphabet(3));
    CHECK(pv.counts == std::vector<std::uint64_t>{10, 11, 11});
    CHECK(pv.total() == 32);

    CHECK(count_occurrences(parse_word("011010011"), parse_word("010")) == 1);
    CHECK(count_occurrences(parse_word("001101101"), parse_word("010")) == 0);
    CHECK(count_occurrences(parse_word("000"), parse_word("00")) == 2);
    CHECK(count_occurrences(parse_word("01"), parse_word("010")) == 0);
}

TEST_CASE("factor enumeration") {
    auto x = catalog::word("pd2", 64);
    auto y = catalog::word("tm2", 64);
    auto t = catalog::word("tm", 64);
    auto fx = enumerate_factors(x, 2);
    CHECK(fx.stabilized);
    CHECK(strs(fx, x.alphabet()) == std::vector<std::string>{"00", "01", "12", "20", "21"});
    CHECK(strs(enumerate_factors(y, 2), y.alphabet()) ==
          std::vector<std::string>{"01", "12", "13", "20", "21", "32"});
    CHECK(strs(enumerate_factors(t, 1), t.alphabet()) == std::vector<std::string>{"0", "1"});

    auto empty = enumerate_factors(t, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty.factors[0].empty());

    auto f = enumerate_factors(t, 10);
    CHECK(f.prefix_length_used >= 10);
    for (const auto& u : f.factors) CHECK(u.size() == 10);
    CHECK(std::is_sorted(f.factors.begin(), f.factors.end()));
}

TEST_CASE("doubling cap") {
    auto t = catalog::word("tm", 64);
    CHECK_THROWS_AS(enumerate_factors(t, 40, 64, 100), NotStabilized);
    try {
        enumerate_factors(t, 40, 64, 100);
    } catch (const NotStabilized& e) {
        CHECK(e.length == 40);
        CHECK(e.prefix_cap == 100);
    }
}

TEST_CASE("l-abelian equivalence") {
    auto u = parse_word("011010011"), v = parse_word("001101101");
    CHECK(l_abelian_equivalent(u, v, 2));
    CHECK_FALSE(l_abelian_equivalent(u, v, 3));
    CHECK(l_abelian_equivalent(u, u, 5));
    CHECK(l_abelian_key(u, 2, Alphabet(2)) == l_abelian_key(v, 2, Alphabet(2)));
    CHECK(l_abelian_key(u, 3, Alphabet(2)) != l_abelian_key(v, 3, Alphabet(2)));

    auto k = l_abelian_key(parse_word("0110"), 1, Alphabet(2));
    CHECK(k.prefix.empty());
    CHECK(k.blocks.counts == std::vector<std::uint64_t>{2, 2});

    auto shortest = l_abelian_key(parse_word("01"), 3, Alphabet(2));
    CHECK(shortest.prefix == parse_word("01"));
    CHECK(shortest.blocks.total() == 0);
    CHECK_THROWS_AS(l_abelian_key(parse_word("0"), 3, Alphabet(2)), TooShort);
}

TEST_CASE("reversal") {
    CHECK(reversal(parse_word("012")) == parse_word("210"));
    CHECK(reversal(Word{}).empty());
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        Word w(rng() % 40);
        for (auto& a : w) a = rng() % 5;
        CHECK(reversal(reversal(w)) == w);
    }
}

TEST_CASE("word text formats") {
    CHECK(parse_word("0120") == Word{0, 1, 2, 0});
    CHECK(parse_word("3,11,0") == Word{3, 11, 0});
    CHECK(format_word(Word{3, 11, 0}, Alphabet(12)) == "3,11,0");
    CHECK(format_word(Word{1, 0}, Alphabet(2)) == "10");
}

TEST_CASE("certified coverage bound") {
    auto t = catalog::word("tm", 64);
    auto cb = CoverageBound::of(t);
    REQUIRE(cb.has_value());
    for (std::size_t n : {1u, 5u, 17u, 64u}) {
        auto full = enumerate_factors(t, n);
        auto bounded = distinct_factors(t.regrow((*cb)(n)).prefix((*cb)(n)), n);
        CHECK(bounded == full.factors);
    }
    CHECK_FALSE(CoverageBound::of(WordPrefix::literal(parse_word("0110"))).has_value());
}
