#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abelianlab/word.hpp"

namespace abelianlab {

enum class Statistic { FactorComplexity, LAbelian, ExtMax, ExtMin, ExtDelta, JumpMax, JumpMin };

struct StatisticKind {
    Statistic stat = Statistic::FactorComplexity;
    std::size_t level = 1;      // LAbelian only
    std::vector<Letter> letters;  // extremal and jump statistics, sorted

    static StatisticKind factor();
    static StatisticKind l_abelian(std::size_t level);
    static StatisticKind ext_max(std::vector<Letter> s);
    static StatisticKind ext_min(std::vector<Letter> s);
    static StatisticKind ext_delta(std::vector<Letter> s);
    static StatisticKind jump_max(std::vector<Letter> s);
    static StatisticKind jump_min(std::vector<Letter> s);

    // "factor", "labelian:2", "max:0", "min:1,2", "delta:1,2", "jmax:0,3", "jmin:0"
    std::string to_string() const;
    static StatisticKind parse(const std::string& text);
    bool operator==(const StatisticKind&) const = default;
};

struct ComplexitySeries {
    std::string word_id;
    StatisticKind kind;
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;
    std::vector<std::int64_t> values;

    std::int64_t at(std::size_t n) const { return values.at(n - n_lo); }
    bool operator==(const ComplexitySeries&) const = default;
};

struct ExtremalCounts {
    std::int64_t min = 0;
    std::int64_t max = 0;
    std::int64_t delta = 0;
    bool all_attained = true;  // every value in [min, max] realized by a factor
};

struct JumpValues {
    std::int64_t jump_max = 0;
    std::int64_t jump_min = 0;
};

// Reference implementations: one exact factor set per call.
std::size_t factor_complexity(const WordPrefix& w, std::size_t n);
std::size_t l_abelian_complexity(const WordPrefix& w, std::size_t level, std::size_t n);
ExtremalCounts extremal_counts(const WordPrefix& w, const std::vector<Letter>& s, std::size_t n);
JumpValues jump_functions(const WordPrefix& w, const std::vector<Letter>& s, std::size_t n);

// Same statistics from explicit factor sets (shared by the class-level checks).
std::size_t count_l_abelian_classes(const std::vector<Word>& factors, std::size_t level, Alphabet a);
ExtremalCounts extremal_of(const std::vector<Word>& factors, const std::vector<Letter>& s);

// Values for n = 0..n_hi through the parallel kernels.
ComplexitySeries series(const WordPrefix& w, const StatisticKind& kind, std::size_t n_hi,
                        std::string word_id = {});

// Serial reference path for the same series; used by tests and the benchmark.
ComplexitySeries reference_series(const WordPrefix& w, const StatisticKind& kind, std::size_t n_hi,
                                  std::string word_id = {});

}  // namespace abelianlab
