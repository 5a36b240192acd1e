#include "abelianlab/complexity.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "abelianlab/kernels.hpp"

namespace abelianlab {

namespace {

std::vector<Letter> normalized(std::vector<Letter> s) {
    if (s.empty()) throw std::invalid_argument("letter set must be nonempty");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

StatisticKind with_letters(Statistic st, std::vector<Letter> s) {
    StatisticKind k;
    k.stat = st;
    k.letters = normalized(std::move(s));
    return k;
}

void check_letters(const std::vector<Letter>& s, const WordPrefix& w) {
    if (s.empty()) throw std::invalid_argument("letter set must be nonempty");
    for (Letter a : s)
        if (!w.alphabet().contains(a)) throw AlphabetMismatch("letter set outside word alphabet");
}

std::int64_t weight(WordView u, const std::vector<Letter>& s) {
    std::int64_t c = 0;
    for (Letter a : u) c += std::binary_search(s.begin(), s.end(), a);
    return c;
}

}  // namespace

StatisticKind StatisticKind::factor() { return {}; }

StatisticKind StatisticKind::l_abelian(std::size_t level) {
    if (level == 0) throw std::invalid_argument("level must be positive");
    StatisticKind k;
    k.stat = Statistic::LAbelian;
    k.level = level;
    return k;
}

StatisticKind StatisticKind::ext_max(std::vector<Letter> s) { return with_letters(Statistic::ExtMax, std::move(s)); }
StatisticKind StatisticKind::ext_min(std::vector<Letter> s) { return with_letters(Statistic::ExtMin, std::move(s)); }
StatisticKind StatisticKind::ext_delta(std::vector<Letter> s) { return with_letters(Statistic::ExtDelta, std::move(s)); }
StatisticKind StatisticKind::jump_max(std::vector<Letter> s) { return with_letters(Statistic::JumpMax, std::move(s)); }
StatisticKind StatisticKind::jump_min(std::vector<Letter> s) { return with_letters(Statistic::JumpMin, std::move(s)); }

std::string StatisticKind::to_string() const {
    std::string name;
    switch (stat) {
        case Statistic::FactorComplexity: return "factor";
        case Statistic::LAbelian: return "labelian:" + std::to_string(level);
        case Statistic::ExtMax: name = "max"; break;
        case Statistic::ExtMin: name = "min"; break;
        case Statistic::ExtDelta: name = "delta"; break;
        case Statistic::JumpMax: name = "jmax"; break;
        case Statistic::JumpMin: name = "jmin"; break;
    }
    name += ':';
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) name += ',';
        name += std::to_string(letters[i]);
    }
    return name;
}

StatisticKind StatisticKind::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "factor" && tail.empty()) return factor();
    if (tail.empty()) throw std::invalid_argument("statistic '" + text + "' needs a parameter");
    if (head == "labelian") {
        if (tail.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad level in '" + text + "'");
        return l_abelian(std::stoul(tail));
    }
    Word s = parse_word(tail);  // "1,2" or "12"
    if (head == "max") return ext_max(s);
    if (head == "min") return ext_min(s);
    if (head == "delta") return ext_delta(s);
    if (head == "jmax") return jump_max(s);
    if (head == "jmin") return jump_min(s);
    throw std::invalid_argument("unknown statistic '" + text + "'");
}

std::size_t factor_complexity(const WordPrefix& w, std::size_t n) {
    return enumerate_factors(w, n).size();
}

std::size_t count_l_abelian_classes(const std::vector<Word>& factors, std::size_t level, Alphabet a) {
    if (factors.empty()) return 0;
    if (factors.front().size() + 1 < level) return factors.size();
    std::set<LAbelianKey> keys;
    for (const Word& u : factors) keys.insert(l_abelian_key(u, level, a));
    return keys.size();
}

std::size_t l_abelian_complexity(const WordPrefix& w, std::size_t level, std::size_t n) {
    if (level == 0) throw std::invalid_argument("level must be positive");
    return count_l_abelian_classes(enumerate_factors(w, n).factors, level, w.alphabet());
}

ExtremalCounts extremal_of(const std::vector<Word>& factors, const std::vector<Letter>& s) {
    ExtremalCounts e;
    if (factors.empty()) return e;
    std::vector<Letter> sorted = normalized(s);
    std::set<std::int64_t> seen;
    for (const Word& u : factors) seen.insert(weight(u, sorted));
    e.min = *seen.begin();
    e.max = *seen.rbegin();
    e.delta = e.max - e.min;
    e.all_attained = static_cast<std::int64_t>(seen.size()) == e.delta + 1;
    return e;
}

ExtremalCounts extremal_counts(const WordPrefix& w, const std::vector<Letter>& s, std::size_t n) {
    check_letters(s, w);
    return extremal_of(enumerate_factors(w, n).factors, s);
}

JumpValues jump_functions(const WordPrefix& w, const std::vector<Letter>& s, std::size_t n) {
    JumpValues j;
    ExtremalCounts here = extremal_counts(w, s, n);
    if (n > 0) j.jump_max = here.max - extremal_counts(w, s, n - 1).max;
    j.jump_min = extremal_counts(w, s, n + 1).min - here.min;
    return j;
}

ComplexitySeries series(const WordPrefix& w, const StatisticKind& kind, std::size_t n_hi,
                        std::string word_id) {
    ComplexitySeries out{std::move(word_id), kind, 0, n_hi, {}};
    switch (kind.stat) {
        case Statistic::FactorComplexity:
            out.values = kernels::factor_complexity(w, n_hi);
            return out;
        case Statistic::LAbelian:
            out.values = kernels::l_abelian_complexity(w, kind.level, n_hi);
            return out;
        default: break;
    }
    check_letters(kind.letters, w);
    bool needs_next = kind.stat == Statistic::JumpMin;
    kernels::ExtremalSeries e = kernels::extremal(w, kind.letters, n_hi + (needs_next ? 1 : 0));
    out.values.resize(n_hi + 1);
    for (std::size_t n = 0; n <= n_hi; ++n) {
        switch (kind.stat) {
            case Statistic::ExtMax: out.values[n] = e.max[n]; break;
            case Statistic::ExtMin: out.values[n] = e.min[n]; break;
            case Statistic::ExtDelta: out.values[n] = e.max[n] - e.min[n]; break;
            case Statistic::JumpMax: out.values[n] = n ? e.max[n] - e.max[n - 1] : 0; break;
            case Statistic::JumpMin: out.values[n] = e.min[n + 1] - e.min[n]; break;
            default: break;
        }
    }
    return out;
}

ComplexitySeries reference_series(const WordPrefix& w, const StatisticKind& kind, std::size_t n_hi,
                                  std::string word_id) {
    ComplexitySeries out{std::move(word_id), kind, 0, n_hi, {}};
    out.values.resize(n_hi + 1);
    for (std::size_t n = 0; n <= n_hi; ++n) {
        switch (kind.stat) {
            case Statistic::FactorComplexity:
                out.values[n] = static_cast<std::int64_t>(factor_complexity(w, n));
                break;
            case Statistic::LAbelian:
                out.values[n] = static_cast<std::int64_t>(l_abelian_complexity(w, kind.level, n));
                break;
            case Statistic::ExtMax: out.values[n] = extremal_counts(w, kind.letters, n).max; break;
            case Statistic::ExtMin: out.values[n] = extremal_counts(w, kind.letters, n).min; break;
            case Statistic::ExtDelta: out.values[n] = extremal_counts(w, kind.letters, n).delta; break;
            case Statistic::JumpMax: out.values[n] = jump_functions(w, kind.letters, n).jump_max; break;
            case Statistic::JumpMin: out.values[n] = jump_functions(w, kind.letters, n).jump_min; break;
        }
    }
    return out;
}

}  // namespace abelianlab
