// One PASS/FAIL line per acceptance criterion, each with its runtime budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "abelianlab/catalog.hpp"
#include "abelianlab/complexity.hpp"
#include "abelianlab/regular.hpp"
#include "abelianlab/theorems.hpp"

using namespace abelianlab;

namespace {

struct Criterion {
    int id;
    double budget_s;
    std::function<bool(std::string&)> check;  // fills a short detail line
};

bool claims_pass(const std::vector<VerificationReport>& rs, std::size_t expected, std::string& detail) {
    std::size_t passed = 0;
    for (const auto& r : rs) {
        if (r.passed()) {
            ++passed;
        } else {
            detail += " [" + r.claim + ": " + r.counterexamples.front().inputs + "]";
        }
    }
    detail = std::to_string(passed) + "/" + std::to_string(rs.size()) + " reports pass" + detail;
    return rs.size() == expected && passed == rs.size();
}

bool c1(std::string& detail) {
    const std::vector<std::size_t> want = {1, 2, 4, 6, 8, 6, 8, 10, 8, 6, 8, 8, 10, 10,
                                           10, 8, 8, 6, 8, 10, 10, 8, 10, 12, 12, 10, 12, 12};
    auto t = catalog::word("tm", 64);
    for (std::size_t n = 0; n < want.size(); ++n) {
        auto got = l_abelian_complexity(t, 2, n);
        if (got != want[n]) {
            detail = "n=" + std::to_string(n) + " got " + std::to_string(got);
            return false;
        }
    }
    detail = "28 values";
    return true;
}

bool c2(std::string& detail) {
    const std::int64_t want[] = {0, 1, 1, 2, 1, 2, 2, 2, 1, 2, 2, 3, 2, 3, 2, 2};
    for (std::uint64_t n = 0; n < 16; ++n)
        if (a_sequence(n) != want[n]) {
            detail = "A(" + std::to_string(n) + ")";
            return false;
        }
    auto r = verify_A_relations(1 << 14);
    detail = std::to_string(r.checks) + " relation checks";
    return r.passed();
}

bool c3(std::string& detail) {
    auto r = verify_reflection_fuzz(100, 1 << 12, 2024);
    detail = r.range + ", " + std::to_string(r.checks) + " checks";
    return r.passed() && r.checks >= 100 * 4097;
}

bool c4(std::string& detail) { return claims_pass(verify_pd_suite(512), 8, detail); }

bool c5(std::string& detail) { return claims_pass(verify_tm_suite(512), 7, detail); }

bool c6(std::string& detail) {
    auto r = verify_cross_word(512);
    detail = std::to_string(r.checks) + " checks";
    return r.passed();
}

bool c7(std::string& detail) {
    GuessOptions o;
    o.truncation = 512;
    o.horizon = 1 << 14;
    std::mt19937_64 rng(7);
    bool ok = true;
    for (const char* id : {"A", "delta0-pd2", "p1-pd2", "delta12-tm2", "p1-tm2", "p2-pd", "p2-tm"}) {
        auto s = named_sequence(id);
        RelationSet r;
        try {
            r = guess_relations(s, 2, o);
        } catch (const Error& e) {
            detail += std::string(" ") + id + ": " + e.what();
            ok = false;
            continue;
        }
        auto rep = to_linear_representation(r);
        int bad = 0;
        for (int i = 0; i < 1000; ++i) {
            std::uint64_t n = rng() % ((1u << 14) + 1);
            if (eval_linear_representation(rep, n) != s(n)) ++bad;
        }
        detail += std::string(" ") + id + ":rank " + std::to_string(r.rank());
        if (bad || r.horizon != o.horizon) {
            detail += " (" + std::to_string(bad) + " mismatches)";
            ok = false;
        }
    }
    return ok;
}

// Mod-2 tables: value(32n+i) = value(8n+j), or 0 where j = 0.
constexpr std::array<int, 32> kPdTarget = {0, 1, 0, 0, 0, 1, 0, 7, 0, 1, 0, 3, 0, 0, 0, 7,
                                           0, 1, 0, 0, 0, 5, 0, 7, 0, 1, 0, 7, 0, 0, 0, 7};
// value(16n+i) = value(4n+j) + d mod 2, as (j, d).
constexpr std::array<std::array<int, 2>, 16> kTmMin = {{{0, 0}, {1, 0}, {1, 1}, {1, 1}, {1, 0}, {1, 0}, {2, 0}, {2, 1},
                                                        {2, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 0}, {3, 0}, {3, 1}, {3, 0}}};
constexpr std::array<std::array<int, 2>, 16> kTmDelta = {{{0, 0}, {1, 0}, {1, 0}, {1, 1}, {1, 0}, {1, 1}, {2, 1}, {2, 1},
                                                          {2, 0}, {2, 1}, {2, 1}, {3, 1}, {3, 0}, {3, 1}, {3, 0}, {3, 0}}};

bool c8(std::string& detail) {
    const std::uint64_t N = 1 << 12;
    bool ok = true;
    auto build = [&](const char* id, auto table_value) {
        auto s = named_sequence(id);
        AutomaticKernel a;
        try {
            a = automatic_kernel(s, 2);
        } catch (const Error& e) {
            detail += std::string(" ") + id + ": " + e.what();
            ok = false;
            return;
        }
        std::uint64_t bad = 0;
        for (std::uint64_t n = 0; n <= N; ++n) {
            if (a.eval(n) != s(n)) ++bad;
            if (a.eval(n) != table_value(a, n)) ++bad;
        }
        detail += std::string(" ") + id + ":" + std::to_string(a.states.size()) + " states";
        if (bad || a.states.size() > 64) {
            detail += " (" + std::to_string(bad) + " mismatches)";
            ok = false;
        }
    };
    auto pd = [](const AutomaticKernel& a, std::uint64_t k) -> std::int64_t {
        int j = kPdTarget[k % 32];
        return j ? a.eval(8 * (k / 32) + j) : 0;
    };
    auto tm = [](const auto& table) {
        return [&table](const AutomaticKernel& a, std::uint64_t k) -> std::int64_t {
            auto [j, d] = table[k % 16];
            return (a.eval(4 * (k / 16) + j) + d) % 2;
        };
    };
    build("delta0-pd2-mod2", pd);
    build("min0-pd2-mod2", pd);
    build("delta12-tm2-mod2", tm(kTmDelta));
    build("min12-tm2-mod2", tm(kTmMin));
    return ok;
}

bool c9(std::string& detail) {
    int rc = std::system(PROPERTY_TESTS " --minimal > /dev/null 2>&1");
    detail = "property suite exit " + std::to_string(rc);
    return rc == 0;
}

bool c10(std::string& detail) {
    auto z = catalog::word("pd3", 18);
    auto prefix = format_word(z.prefix(18), z.alphabet());
    if (prefix != "240125252401240124") {
        detail = "prefix " + prefix;
        return false;
    }
    auto r = conjecture_blocks(catalog::word("pd", 64), 3, 2048);
    int held = 0;
    for (unsigned l = 4; l <= 10; ++l)
        for (const auto& note : r.notes)
            if (note == "l=" + std::to_string(l) + ": holds") ++held;
    detail = "empirical, " + std::to_string(held) + "/7 exponents hold, " + r.notes.front();
    return r.empirical && r.passed() && held == 7;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, 5, c1},   {2, 1, c2},  {3, 10, c3}, {4, 60, c4}, {5, 90, c5},
        {6, 20, c6},  {7, 120, c7}, {8, 30, c8}, {9, 60, c9}, {10, 30, c10},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs <= c.budget_s;
        if (!in_time) detail += " over budget";
        std::printf("%s criterion %d (%.2fs of %.0fs) %s\n", ok && in_time ? "PASS" : "FAIL", c.id, secs, c.budget_s,
                    detail.c_str());
        std::fflush(stdout);
        failed += !(ok && in_time);
    }
    return failed ? 1 : 0;
}
