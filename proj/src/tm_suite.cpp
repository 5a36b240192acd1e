#include <algorithm>
#include <array>
#include <utility>

#include "abelianlab/catalog.hpp"
#include "abelianlab/kernels.hpp"
#include "abelianlab/theorems.hpp"
#include "classes.hpp"

namespace abelianlab {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

std::string at(u64 l, u64 r) { return "l=" + std::to_string(l) + " r=" + std::to_string(r); }
std::string at(u64 n) { return "n=" + std::to_string(n); }

// Parity relations on 16n+i: (j, delta) meaning value(16n+i) = value(4n+j) + delta mod 2.
using ParityRow = std::array<std::pair<int, int>, 16>;
constexpr ParityRow kMinTable = {{{0, 0}, {1, 0}, {1, 1}, {1, 1}, {1, 0}, {1, 0}, {2, 0}, {2, 1},
                                  {2, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 0}, {3, 0}, {3, 1}, {3, 0}}};
constexpr ParityRow kDeltaTable = {{{0, 0}, {1, 0}, {1, 0}, {1, 1}, {1, 0}, {1, 1}, {2, 1}, {2, 1},
                                    {2, 0}, {2, 1}, {2, 1}, {3, 1}, {3, 0}, {3, 1}, {3, 0}, {3, 0}}};
// Mirror table for i = 1..15 (index 0 unused): k, delta, delta'.
constexpr std::array<int, 16> kMirrorK = {0, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1};
constexpr std::array<int, 16> kMirrorD = {0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0};
constexpr std::array<int, 16> kMirrorD2 = {0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0};

i64 pow2(u64 e) { return i64{1} << e; }
i64 sign(u64 l) { return l % 2 ? -1 : 1; }  // (-1)^l

struct Tm {
    const TmGroundTruth& g;
    i64 P(u64 n) const { return g.p1y.at(n); }
    i64 M(u64 n) const { return g.max12.at(n); }
    i64 m(u64 n) const { return g.min12.at(n); }
    i64 D(u64 n) const { return M(n) - m(n); }
    i64 JM03(u64 n) const { return n > 0 && g.max03.at(n) > g.max03.at(n - 1); }
    i64 jm03(u64 n) const { return g.min03.at(n + 1) > g.min03.at(n); }
};

i64 count12(WordView w) {
    return std::count_if(w.begin(), w.end(), [](Letter a) { return a == 1 || a == 2; });
}

}  // namespace

TmGroundTruth tm_ground_truth(std::uint64_t N) {
    TmGroundTruth g;
    g.N = N;
    auto y = catalog::word("tm2", 64);
    auto t = catalog::word("tm", 64);
    g.p1y = kernels::l_abelian_complexity(y, 1, N + 1);
    auto e12 = kernels::extremal(y, {1, 2}, N + 1);
    g.max12 = e12.max;
    g.min12 = e12.min;
    auto e03 = kernels::extremal(y, {0, 3}, N + 1);
    g.max03 = e03.max;
    g.min03 = e03.min;
    g.p2t = kernels::l_abelian_complexity(t, 2, N + 1);
    return g;
}

std::vector<VerificationReport> verify_tm_suite(std::uint64_t N, const SuiteOptions& opts) {
    return verify_tm_suite(tm_ground_truth(N), opts);
}

std::vector<VerificationReport> verify_tm_suite(const TmGroundTruth& g, const SuiteOptions& opts) {
    const u64 N = g.N;
    const Tm s{g};
    const std::string upto = "n <= " + std::to_string(N);
    std::vector<VerificationReport> out;

    {
        VerificationReport r;
        r.claim = "tm.a abelian complexity of y from delta12, n mod 2 and m12 mod 2";
        r.range = upto;
        r.notes.push_back("cases keyed by (n, delta12, m12) mod 2; exclusive and exhaustive by construction");
        for (u64 n = 0; n <= N; ++n) {
            i64 d = s.D(n), twice;
            if (n % 2)
                twice = 4 * d + 4;
            else if (d % 2)
                twice = 5 * d + 5;
            else if (s.m(n) % 2)
                twice = 5 * d + 8;
            else
                twice = 5 * d + 2;
            r.expect_eq(twice, 2 * s.P(n), "2P(n), " + at(n));
        }
        out.push_back(std::move(r));
    }

    {
        VerificationReport r;
        r.claim = "tm.b delta12 reflection with c = 1, m12 parity reflection, max/min recursions";
        r.range = upto;
        for (u64 l = 1; (u64{1} << l) <= N; ++l) {
            const u64 L = u64{1} << l;
            for (u64 q = 0; q < L && L + q <= N; ++q) {
                bool left = 2 * q <= L;
                r.expect_eq(left ? s.D(q) + 1 : s.D(2 * L - q), s.D(L + q), "delta12, " + at(l, q));
                i64 par = left ? s.m(q) + static_cast<i64>(l) : s.m(2 * L - q) + s.D(2 * L - q);
                r.expect_eq(par % 2, s.m(L + q) % 2, "m12 mod 2, " + at(l, q));
            }
        }
        for (u64 n = 1; n <= N; n += 2) {
            r.expect_eq(s.m(n + 1) - 1, s.m(n), "odd n, m12(n) = m12(n+1) - 1, " + at(n));
            r.expect_eq(s.M(n - 1) + 1, s.M(n), "odd n, M12(n) = M12(n-1) + 1, " + at(n));
        }
        for (u64 l = 1; (u64{1} << l) <= N; ++l) {
            const u64 L = u64{1} << l;
            for (u64 q = 0; 2 * q <= L && L + q <= N; ++q) {
                r.expect_eq(s.M(L) + s.M(q), s.M(L + q), "M12 split, " + at(l, q));
                r.expect_eq(s.m(L) + s.m(q), s.m(L + q), "m12 split, " + at(l, q));
            }
            if (2 * L > N + 1) continue;
            for (u64 q = L / 2; q <= L; ++q) {
                r.expect_eq(s.M(2 * L), s.M(L + q) + s.m(L - q), "M12(2^(l+1)) split, " + at(l, q));
                r.expect_eq(s.m(2 * L), s.m(L + q) + s.M(L - q), "m12(2^(l+1)) split, " + at(l, q));
                r.expect_eq(2 * static_cast<i64>(L) - s.m(2 * L - q), s.M(L + q), "M12 mirror, " + at(l, q));
                r.expect_eq(2 * static_cast<i64>(L) - s.M(2 * L - q), s.m(L + q), "m12 mirror, " + at(l, q));
            }
        }
        // The image under nu swaps maximal and minimal counts.
        for (u64 n = 1; 2 * n <= N + 1; ++n) {
            r.expect_eq(2 * static_cast<i64>(n) - s.M(n), s.m(2 * n), "m12(2n) = 2n - M12(n), " + at(n));
            r.expect_eq(2 * static_cast<i64>(n) - s.m(n), s.M(2 * n), "M12(2n) = 2n - m12(n), " + at(n));
        }
        out.push_back(std::move(r));
    }

    {
        VerificationReport r;
        r.claim = "tm.c m12 and delta12 mod 2 on 16n + i, and the mirror index table";
        r.range = "16n + i <= " + std::to_string(N);
        for (unsigned i = 1; i < 16; ++i) {
            unsigned ip = 16 - i;
            std::string where = "table i=" + std::to_string(i);
            r.expect_eq(kMirrorK[i], kMinTable[ip].first, "k vs min row of i', " + where);
            r.expect_eq(kMirrorD[i], kMinTable[ip].second, "delta vs min row of i', " + where);
            r.expect_eq(kMirrorK[i], kDeltaTable[ip].first, "k vs delta row of i', " + where);
            r.expect_eq(kMirrorD2[i], kDeltaTable[ip].second, "delta' vs delta row of i', " + where);
            r.expect_eq(4 - kMirrorK[i], kMinTable[i].first, "4 - k vs min row of i, " + where);
            r.expect_eq((kMirrorD[i] + kMirrorD2[i]) % 2, kMinTable[i].second, "delta + delta' vs min row, " + where);
            r.expect_eq(4 - kMirrorK[i], kDeltaTable[i].first, "4 - k vs delta row of i, " + where);
        }
        for (u64 n = 0; 16 * n <= N; ++n) {
            for (unsigned i = 0; i < 16 && 16 * n + i <= N; ++i) {
                u64 k = 16 * n + i;
                std::string where = "n=" + std::to_string(n) + " i=" + std::to_string(i);
                auto [jm, dm] = kMinTable[i];
                auto [jd, dd] = kDeltaTable[i];
                r.expect_eq((s.m(4 * n + jm) + dm) % 2, s.m(k) % 2, "m12, " + where);
                r.expect_eq((s.D(4 * n + jd) + dd) % 2, s.D(k) % 2, "delta12, " + where);
            }
        }
        out.push_back(std::move(r));
    }

    {
        VerificationReport r;
        r.claim = "tm.d counts of 1s and 2s on length 2^l are exactly {A_l, B_l}";
        u64 lmax = 0;
        while ((u64{1} << (lmax + 1)) <= N) ++lmax;
        r.range = "1 <= l <= " + std::to_string(lmax);
        for (u64 l = 1; l <= lmax; ++l) {
            const i64 L = pow2(l);
            const i64 twoA = 2 * L + sign(l), twoB = 2 * L - 2 * sign(l);
            std::string where = "l=" + std::to_string(l);
            r.expect(twoA % 3 == 0 && twoB % 3 == 0, "integrality, " + where, "divisible by 3",
                     std::to_string(twoA) + ", " + std::to_string(twoB));
            const i64 A = twoA / 3, B = twoB / 3;
            // nu^l(a) from the images directly, independent of the fixed-point prefix.
            auto power = [&](Letter a) {
                Word w{a};
                for (u64 e = 0; e < l; ++e) w = catalog::nu().apply(w);
                return w;
            };
            r.expect_eq(A, count12(power(1)), "|nu^l(1)|_12, " + where);
            r.expect_eq(B, count12(power(0)), "|nu^l(0)|_12, " + where);
            r.expect_eq(std::min(A, B), s.m(L), "m12(2^l), " + where);
            r.expect_eq(std::max(A, B), s.M(L), "M12(2^l), " + where);
            r.expect_eq(l % 2 ? A : B, s.m(L), "m12(2^l) by parity of l, " + where);
            r.expect_eq(1, s.D(L), "delta12(2^l), " + where);
            r.expect_eq(static_cast<i64>(l % 2), s.m(L) % 2, "m12(2^l) mod 2, " + where);
            if (l >= 2) {
                r.expect_eq(L - (2 * pow2(l - 1) + sign(l - 1)) / 3, A, "A recurrence, " + where);
                r.expect_eq(L - (2 * pow2(l - 1) - 2 * sign(l - 1)) / 3, B, "B recurrence, " + where);
            }
            if (2 * L <= static_cast<i64>(N) + 1) {
                r.expect_eq(2 * L, s.m(L) + s.M(2 * L), "m12(2^l) + M12(2^(l+1)), " + where);
                r.expect_eq(2 * L, s.M(L) + s.m(2 * L), "M12(2^l) + m12(2^(l+1)), " + where);
            }
        }
        out.push_back(std::move(r));
    }

    {
        VerificationReport r;
        r.claim = "tm.e P_y(2^l + r) from P_y(r) by parity cases, reflection for r > 2^(l-1)";
        r.range = "l >= 2, 2^l + r <= " + std::to_string(N);
        u64 counts[3] = {0, 0, 0};
        for (u64 l = 2; (u64{1} << l) <= N; ++l) {
            const u64 L = u64{1} << l;
            for (u64 q = 0; q < L && L + q <= N; ++q) {
                i64 want;
                if (2 * q > L) {
                    want = s.P(2 * L - q);
                } else {
                    const u64 k = L + q;
                    const bool even_r = q % 2 == 0;
                    const bool first = even_r && s.D(k) % 2 == 0 && s.m(k) % 2 == 0;
                    const bool second = even_r && s.D(k) % 2 == 1 && s.m(k) % 2 == static_cast<i64>((l + 1) % 2);
                    if (!even_r) {
                        want = s.P(q) + 2;
                        ++counts[0];
                    } else if (first || second) {
                        want = s.P(q) + 1;
                        ++counts[1];
                    } else {
                        want = s.P(q) + 4;
                        ++counts[2];
                    }
                }
                r.expect_eq(want, s.P(L + q), at(l, q));
            }
        }
        r.notes.push_back("case sizes (r odd, +1 disjunction, otherwise): " + std::to_string(counts[0]) + ", " +
                          std::to_string(counts[1]) + ", " + std::to_string(counts[2]) +
                          "; the last case is the complement, so the three form a partition");
        out.push_back(std::move(r));
    }

    {
        VerificationReport r;
        r.claim = "tm.f P2_t(n + 1) - P_y(n) from delta12, m12 parity, JM03 and jm03";
        r.range = upto;
        for (u64 n = 0; n <= N; ++n) {
            const i64 d = s.D(n);
            const bool m_even = s.m(n) % 2 == 0, d_even = d % 2 == 0;
            i64 twice;  // twice the difference, keeps halves exact
            if (n % 2) {
                if (m_even && d_even)
                    twice = 2 * (d + 2 - 2 * s.JM03(n) - 2 * s.jm03(n));
                else if (m_even)
                    twice = 2 * (d + 1 - 2 * s.JM03(n));
                else if (!d_even)
                    twice = 2 * (d + 1 - 2 * s.jm03(n));
                else
                    twice = 2 * d;
            } else {
                if (!d_even)
                    twice = d + 1;
                else if (m_even)
                    twice = d + 2;
                else
                    twice = d;
            }
            r.expect_eq(twice, 2 * (g.p2t.at(n + 1) - s.P(n)), std::string(n % 2 ? "odd " : "even ") + at(n));
        }
        out.push_back(std::move(r));
    }

    {
        VerificationReport r;
        const u64 top = std::min(N, opts.class_level_max);
        r.claim = "tm.g class-level splitting of abelian classes of y into 2-abelian classes of t";
        r.range = "1 <= n <= " + std::to_string(top);
        if (top < N) r.notes.push_back("class-level range capped below the series range");
        auto y = catalog::word("tm2", 64);
        y = y.regrow(kernels::exposure_length(y, top + 2));
        for (u64 n = 1; n <= top; ++n) {
            auto cl = detail::class_level(y, n, 1);
            const i64 M03 = g.max03.at(n), m03 = g.min03.at(n);
            i64 total = 0;
            for (const auto& c : cl.classes) {
                const auto& k = c.counts.counts;
                const i64 n12 = k[1] + k[2], n03 = k[0] + k[3];
                bool low = false, high = false;
                for (const auto& u : c.members) (u[0] <= 1 ? low : high) = true;
                const bool unique = !(low && high);
                total += unique ? 1 : 2;
                if (n12 % 2) r.expect(unique, detail::show("odd n12", n, c.counts), "unique", "split");
                if (n % 2 == 0 && n12 % 2 == 0)
                    r.expect(!unique, detail::show("even n, even n12", n, c.counts), "split", "unique");
                if (n % 2 && n03 % 2) {
                    const Letter a = k[0] > k[3] ? 0 : 3, b = 3 - a;
                    bool ends = true, padded = true;
                    for (const auto& u : c.members) {
                        ends = ends && u.front() == a && u.back() == a;
                        for (const auto& o : cl.contexts.at(u))
                            padded = padded && o.before[0] == b && o.after[0] == b;
                    }
                    const bool hi = n03 == M03 && s.JM03(n) == 1;
                    const bool lo = n03 == m03 && s.jm03(n) == 1;
                    r.expect(hi == ends, detail::show("max class starts and ends with majority", n, c.counts),
                             detail::yes_no(hi), detail::yes_no(ends));
                    r.expect(lo == padded, detail::show("min class padded by minority", n, c.counts),
                             detail::yes_no(lo), detail::yes_no(padded));
                    r.expect(unique == (hi || lo), detail::show("odd n, even n12", n, c.counts),
                             detail::yes_no(hi || lo), detail::yes_no(unique));
                }
            }
            r.expect_eq(g.p2t.at(n + 1), total, "class count vs P2_t(n + 1), " + at(n));
        }
        out.push_back(std::move(r));
    }
    return out;
}

VerificationReport verify_cross_word(std::uint64_t N) {
    VerificationReport r;
    r.claim = "delta12 of y plus 1 equals the abelian complexity of p";
    r.range = "n <= " + std::to_string(N);
    auto y = catalog::word("tm2", 64);
    auto p = catalog::word("pd", 64);
    auto e = kernels::extremal(y, {1, 2}, N);
    auto ab = kernels::l_abelian_complexity(p, 1, N);
    for (u64 n = 0; n <= N; ++n) r.expect_eq(ab[n], e.max[n] - e.min[n] + 1, at(n));
    return r;
}

}  // namespace abelianlab
