#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "abelianlab/complexity.hpp"

namespace abelianlab {

struct SequenceOracle {
    std::function<std::int64_t(std::uint64_t)> evaluator;
    std::string label;
    // Optional hint that values up to n will be requested; lets cached oracles fill in one pass.
    std::function<void(std::uint64_t)> prepare;

    std::int64_t operator()(std::uint64_t n) const { return evaluator(n); }
    void reserve(std::uint64_t n) const {
        if (prepare) prepare(n);
    }
};

SequenceOracle from_function(std::string label, std::function<std::int64_t(std::uint64_t)> f);
SequenceOracle constant(std::int64_t v);
// Statistic of a word, computed in growing batches and cached; safe to call concurrently.
SequenceOracle statistic_oracle(const WordPrefix& w, const StatisticKind& kind, std::string label);
SequenceOracle shifted(const SequenceOracle& s, std::uint64_t offset);
SequenceOracle reduced_mod(const SequenceOracle& s, std::int64_t m);
// F(n) = sum_i coeffs[i] * seqs[i](n) * predicates[i](n)
SequenceOracle combine(const std::vector<SequenceOracle>& seqs, const std::vector<std::int64_t>& coeffs,
                       const std::vector<SequenceOracle>& predicates);

struct KernelLabel {
    std::uint32_t i = 0;
    std::uint64_t j = 0;
    auto operator<=>(const KernelLabel&) const = default;
    std::string to_string(std::uint32_t k) const;  // "s(4n+3)"
};

SequenceOracle kernel_slice(const SequenceOracle& s, std::uint32_t k, KernelLabel label);

struct RelationSet {
    std::uint32_t k = 2;
    std::string label;
    std::vector<KernelLabel> basis;
    // relations[b][d]: coefficients over the basis of slice (i_b + 1, j_b + d k^{i_b})
    std::vector<std::vector<std::vector<mpq_class>>> relations;
    std::vector<std::int64_t> initial_values;  // s(j_b), the basis slices at n = 0
    std::size_t truncation = 0;
    std::uint64_t horizon = 0;

    std::size_t rank() const { return basis.size(); }
    KernelLabel child(std::size_t b, std::uint32_t d) const;
    bool integral() const;
};

// Each relation rewritten with integer coefficients: multiplier * child = sum coeffs * basis.
struct IntegerRelation {
    KernelLabel child;
    mpz_class multiplier;
    std::vector<mpz_class> coeffs;
};
std::vector<IntegerRelation> clear_denominators(const RelationSet& r);

struct GuessOptions {
    std::size_t truncation = 512;
    std::uint64_t horizon = std::uint64_t{1} << 14;
    std::size_t rank_cap = 64;
};

RelationSet guess_relations(const SequenceOracle& s, std::uint32_t k, const GuessOptions& opts = {});

struct LinearRepresentation {
    std::uint32_t k = 2;
    std::size_t dimension = 0;
    std::vector<mpq_class> row;
    std::vector<std::vector<std::vector<mpq_class>>> digit_matrices;  // [d][row][col]
    std::vector<mpq_class> column;
    std::uint64_t horizon = 0;
};

LinearRepresentation to_linear_representation(const RelationSet& r);
// row * M_{d0} * ... * M_{d_{r-1}} * column, d0 the least significant digit of n.
mpq_class eval_linear_representation(const LinearRepresentation& rep, std::uint64_t n);

struct AutomaticOptions {
    std::size_t truncation = 512;
    std::uint64_t horizon = std::uint64_t{1} << 14;
    std::size_t state_cap = 64;
};

struct AutomaticKernel {
    std::uint32_t k = 2;
    std::vector<KernelLabel> states;                  // representative slice per state
    std::vector<std::vector<std::size_t>> transitions;  // [state][digit]
    std::size_t initial = 0;
    std::vector<std::int64_t> outputs;  // slice value at n = 0
    std::uint64_t horizon = 0;

    std::size_t state_of(std::uint64_t n) const;  // digits read least significant first
    std::int64_t eval(std::uint64_t n) const { return outputs[state_of(n)]; }
};

AutomaticKernel automatic_kernel(const SequenceOracle& s, std::uint32_t k, const AutomaticOptions& opts = {});

}  // namespace abelianlab
