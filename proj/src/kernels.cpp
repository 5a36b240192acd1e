#include "abelianlab/kernels.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "abelianlab/complexity.hpp"

namespace abelianlab::kernels {

namespace {

struct Exposure {
    WordPrefix word;
    std::optional<CoverageBound> bound;

    std::size_t length(std::size_t n) const {
        return bound ? std::min(word.size(), (*bound)(std::max<std::size_t>(n, 1))) : word.size();
    }
};

Exposure expose(const WordPrefix& w, std::size_t n_hi) {
    if (!w.regenerable()) return {w, std::nullopt};
    auto bound = CoverageBound::of(w);
    if (bound) {
        std::size_t need = (*bound)(std::max<std::size_t>(n_hi, 1));
        if (need > default_prefix_cap()) throw NotStabilized(n_hi, default_prefix_cap());
        return {w.regrow(need), bound};
    }
    // Every factor extends to a longer one, so a prefix exposing length n_hi exposes all shorter.
    std::size_t used = enumerate_factors(w, std::max<std::size_t>(n_hi, 1)).prefix_length_used;
    return {w.regrow(used), std::nullopt};
}

// Suffix array by prefix doubling.
std::vector<std::size_t> suffix_array(WordView s) {
    std::size_t n = s.size();
    std::vector<std::size_t> sa(n), rank(n), tmp(n);
    std::iota(sa.begin(), sa.end(), 0);
    for (std::size_t i = 0; i < n; ++i) rank[i] = s[i];
    for (std::size_t k = 1; n > 1; k <<= 1) {
        auto key = [&](std::size_t i) {
            return std::pair<std::size_t, std::int64_t>(
                rank[i], i + k < n ? static_cast<std::int64_t>(rank[i + k]) : -1);
        };
        std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        tmp[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i) tmp[sa[i]] = tmp[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]));
        rank.swap(tmp);
        if (rank[sa[n - 1]] == n - 1) break;
    }
    return sa;
}

// lcp[i] = common prefix length of suffixes sa[i-1] and sa[i] (Kasai).
std::vector<std::size_t> lcp_array(WordView s, const std::vector<std::size_t>& sa) {
    std::size_t n = s.size();
    std::vector<std::size_t> rank(n), lcp(n, 0);
    for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = i;
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        std::size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp[rank[i]] = h;
        if (h) --h;
    }
    return lcp;
}

std::size_t count_distinct_short(WordView w, std::size_t len, std::size_t n, std::uint32_t r) {
    long double space = 1;
    for (std::size_t i = 0; i < n; ++i) space *= r;
    if (space > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2))
        return distinct_factors(w.first(len), n).size();
    std::unordered_set<std::uint64_t> codes;
    for (std::size_t i = 0; i + n <= len; ++i) {
        std::uint64_t c = 0;
        for (std::size_t j = 0; j < n; ++j) c = c * r + w[i + j];
        codes.insert(c);
    }
    return codes.size();
}

// Distinct (prefix, block Parikh vector) keys over windows of length n in w[0, len).
std::size_t count_l_abelian_windows(WordView w, WordView blocks, std::size_t len, std::size_t n,
                                    std::size_t level, std::uint32_t r, std::uint32_t big_r,
                                    std::uint64_t prefix_count) {
    if (len < n) return 0;
    const std::size_t windows = len - n + 1;
    const std::size_t m = n - level + 1;  // block letters per window
    std::vector<std::int64_t> cnt(big_r, 0), lo(big_r), hi(big_r);
    for (std::size_t i = 0; i < m; ++i) ++cnt[blocks[i]];
    lo = cnt;
    hi = cnt;
    for (std::size_t i = 1; i < windows; ++i) {
        Letter out = blocks[i - 1], in = blocks[i + m - 1];
        --cnt[out];
        ++cnt[in];
        lo[out] = std::min(lo[out], cnt[out]);
        hi[in] = std::max(hi[in], cnt[in]);
    }
    // Counts sum to m, so the component with the widest range is implied by the others.
    std::size_t drop = 0;
    for (std::size_t a = 1; a < big_r; ++a)
        if (hi[a] - lo[a] > hi[drop] - lo[drop]) drop = a;
    std::vector<std::uint64_t> radix(big_r, 0);
    long double space = static_cast<long double>(prefix_count);
    std::uint64_t acc = prefix_count;
    for (std::size_t a = 0; a < big_r; ++a) {
        if (a == drop || hi[a] == lo[a]) continue;
        radix[a] = acc;
        space *= static_cast<long double>(hi[a] - lo[a] + 1);
        if (space > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 4)) {
            // Key space too wide for integer codes; fall back to explicit keys.
            return count_l_abelian_classes(distinct_factors(w.first(len), n), level, Alphabet(r));
        }
        acc *= static_cast<std::uint64_t>(hi[a] - lo[a] + 1);
    }
    std::fill(cnt.begin(), cnt.end(), 0);
    for (std::size_t i = 0; i < m; ++i) ++cnt[blocks[i]];
    std::uint64_t code = 0;
    for (std::size_t a = 0; a < big_r; ++a)
        if (radix[a]) code += static_cast<std::uint64_t>(cnt[a] - lo[a]) * radix[a];
    auto key_at = [&](std::size_t i) { return code + blocks[i] / r; };  // prefix = first level-1 letters

    const std::uint64_t total = acc;
    if (total <= (std::uint64_t{1} << 27)) {
        std::vector<std::uint64_t> bits((total + 63) / 64, 0);
        std::size_t distinct = 0;
        auto mark = [&](std::uint64_t k) {
            std::uint64_t& word = bits[k >> 6];
            std::uint64_t bit = std::uint64_t{1} << (k & 63);
            distinct += (word & bit) == 0;
            word |= bit;
        };
        mark(key_at(0));
        for (std::size_t i = 1; i < windows; ++i) {
            Letter out = blocks[i - 1], in = blocks[i + m - 1];
            code -= radix[out];
            code += radix[in];
            mark(key_at(i));
        }
        return distinct;
    }
    std::vector<std::uint64_t> keys;
    keys.reserve(windows);
    keys.push_back(key_at(0));
    for (std::size_t i = 1; i < windows; ++i) {
        Letter out = blocks[i - 1], in = blocks[i + m - 1];
        code -= radix[out];
        code += radix[in];
        keys.push_back(key_at(i));
    }
    std::sort(keys.begin(), keys.end());
    return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

}  // namespace

std::size_t exposure_length(const WordPrefix& w, std::size_t n) { return expose(w, n).length(n); }

std::vector<std::int64_t> factor_complexity(const WordPrefix& w, std::size_t n_hi) {
    Exposure e = expose(w, n_hi);
    WordView s = e.word.prefix(e.length(n_hi));
    std::vector<std::int64_t> diff(n_hi + 2, 0);
    if (!s.empty()) {
        auto sa = suffix_array(s);
        auto lcp = lcp_array(s, sa);
        // Suffix k contributes a new length-n factor exactly for lcp[k] < n <= its length.
        for (std::size_t k = 0; k < sa.size(); ++k) {
            std::size_t from = (k ? lcp[k] : 0) + 1;
            std::size_t to = std::min(s.size() - sa[k], n_hi);
            if (from <= to) {
                ++diff[from];
                --diff[to + 1];
            }
        }
    }
    std::vector<std::int64_t> out(n_hi + 1);
    std::int64_t run = 0;
    for (std::size_t n = 0; n <= n_hi; ++n) {
        run += diff[n];
        out[n] = run;
    }
    out[0] = 1;
    return out;
}

std::vector<std::int64_t> l_abelian_complexity(const WordPrefix& w, std::size_t level, std::size_t n_hi) {
    if (level == 0) throw std::invalid_argument("level must be positive");
    Exposure e = expose(w, n_hi);
    const std::uint32_t r = w.alphabet().size;
    std::uint64_t prefix_count = 1;
    for (std::size_t i = 0; i + 1 < level; ++i) prefix_count *= r;
    const Word blocks = block_code(e.word.letters(), r, level);
    const std::uint32_t big_r = static_cast<std::uint32_t>(prefix_count * r);
    const WordView letters = e.word.letters();
    std::vector<std::int64_t> out(n_hi + 1, 0);
    const auto top = static_cast<std::int64_t>(n_hi);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t sn = 0; sn <= top; ++sn) {
        auto n = static_cast<std::size_t>(sn);
        std::size_t len = e.length(n);
        std::size_t v;
        if (n == 0)
            v = 1;
        else if (n + 1 <= level)
            v = count_distinct_short(letters, len, n, r);
        else
            v = count_l_abelian_windows(letters, blocks, len, n, level, r, big_r, prefix_count);
        out[n] = static_cast<std::int64_t>(v);
    }
    return out;
}

ExtremalSeries extremal(const WordPrefix& w, const std::vector<Letter>& s, std::size_t n_hi) {
    Exposure e = expose(w, n_hi);
    WordView x = e.word.letters();
    std::vector<char> member(w.alphabet().size, 0);
    for (Letter a : s) member.at(a) = 1;
    std::vector<std::int32_t> pre(x.size() + 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) pre[i + 1] = pre[i] + member[x[i]];
    ExtremalSeries out;
    out.min.assign(n_hi + 1, 0);
    out.max.assign(n_hi + 1, 0);
    const auto top = static_cast<std::int64_t>(n_hi);
    const std::int32_t* p = pre.data();
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t sn = 1; sn <= top; ++sn) {
        auto n = static_cast<std::size_t>(sn);
        std::size_t len = e.length(n);
        if (len < n) continue;
        std::int32_t lo = std::numeric_limits<std::int32_t>::max();
        std::int32_t hi = std::numeric_limits<std::int32_t>::min();
        const std::size_t windows = len - n + 1;
        for (std::size_t i = 0; i < windows; ++i) {
            std::int32_t v = p[i + n] - p[i];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        out.min[n] = lo;
        out.max[n] = hi;
    }
    return out;
}

}  // namespace abelianlab::kernels
