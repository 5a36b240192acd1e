#pragma once

#include <cstdint>
#include <vector>

#include "abelianlab/word.hpp"

// Sliding-window kernels over a prefix long enough to expose every factor of the lengths
// asked for. Work is split over n with OpenMP.
namespace abelianlab::kernels {

// Prefix length that exposes all factors of length n: the certified bound when one exists,
// otherwise a doubling search (or the whole word, for literals).
std::size_t exposure_length(const WordPrefix& w, std::size_t n);

std::vector<std::int64_t> factor_complexity(const WordPrefix& w, std::size_t n_hi);
std::vector<std::int64_t> l_abelian_complexity(const WordPrefix& w, std::size_t level,
                                               std::size_t n_hi);

struct ExtremalSeries {
    std::vector<std::int64_t> min, max;
};
ExtremalSeries extremal(const WordPrefix& w, const std::vector<Letter>& s, std::size_t n_hi);

}  // namespace abelianlab::kernels
