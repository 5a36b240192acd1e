#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "abelianlab/regular.hpp"

namespace abelianlab {

// s(2^l + r) = s(r) + c if r <= 2^(l-1), else s(2^(l+1) - r), for l >= l0.
struct ReflectionSpec {
    unsigned l0 = 0;
    std::int64_t c = 0;
    std::vector<std::int64_t> initials;  // s(0) .. s(2^l0 - 1)

    void validate() const;
};

std::int64_t reflection_eval(const ReflectionSpec& spec, std::uint64_t n);
std::vector<std::int64_t> reflection_table(const ReflectionSpec& spec, std::uint64_t n_max);
// Closed form through the A-sequence, splitting n = 2^(l0+2) q + i into eight ranges of i.
std::int64_t solve_reflection(const ReflectionSpec& spec, std::uint64_t n);

const ReflectionSpec& a_spec();
std::int64_t a_sequence(std::uint64_t n);
SequenceOracle a_oracle();

struct Counterexample {
    std::string inputs;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    std::string claim;
    std::string range;
    bool empirical = false;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<Counterexample> counterexamples;  // the first few failures
    std::vector<std::string> notes;

    bool passed() const { return counterexamples.empty(); }
    void expect(bool ok, const std::string& inputs, const std::string& expected, const std::string& got);
    void expect_eq(std::int64_t expected, std::int64_t got, const std::string& inputs);
};

bool all_passed(const std::vector<VerificationReport>& reports);

VerificationReport verify_A_relations(std::uint64_t N, const SequenceOracle& a = a_oracle());
VerificationReport verify_reflection_fuzz(std::size_t specs, std::uint64_t n_max, std::uint64_t seed);

// Measured statistics of x = block(pd, 2) and p, indices 0..N+1.
struct PdGroundTruth {
    std::uint64_t N = 0;
    std::vector<std::int64_t> p1x, max0, min0, max2, min2, p2p;
};
PdGroundTruth pd_ground_truth(std::uint64_t N);

// Measured statistics of y = block(tm, 2) and t, indices 0..N+1.
struct TmGroundTruth {
    std::uint64_t N = 0;
    std::vector<std::int64_t> p1y, max12, min12, max03, min03, p2t;
};
TmGroundTruth tm_ground_truth(std::uint64_t N);

struct SuiteOptions {
    // Upper length for the class-level checks that enumerate explicit factor sets.
    std::uint64_t class_level_max = std::numeric_limits<std::uint64_t>::max();
};

std::vector<VerificationReport> verify_pd_suite(std::uint64_t N, const SuiteOptions& opts = {});
std::vector<VerificationReport> verify_pd_suite(const PdGroundTruth& g, const SuiteOptions& opts = {});
std::vector<VerificationReport> verify_tm_suite(std::uint64_t N, const SuiteOptions& opts = {});
std::vector<VerificationReport> verify_tm_suite(const TmGroundTruth& g, const SuiteOptions& opts = {});

VerificationReport verify_cross_word(std::uint64_t N);

// Reflection-with-parity relations for P^(1) of block(w, level), exponents l >= l_min:
// P(2^l + r) = P(r) + inc[r mod 2] for r <= 2^(l-1), else P(2^(l+1) - r).
// Increments are taken from l = l_min unless given. Always labeled empirical.
struct ParityIncrements {
    std::int64_t even = 0;
    std::int64_t odd = 0;
};
VerificationReport conjecture_blocks(const WordPrefix& w, std::size_t level, std::uint64_t N,
                                     unsigned l_min = 4, std::optional<ParityIncrements> inc = {});

// Named sequences for guessing: A, const1, p<l>-<word>, pinf-<word>,
// <max|min|delta|jmax|jmin><letters>-<word>, optionally suffixed "-mod<m>".
SequenceOracle named_sequence(const std::string& id);

}  // namespace abelianlab
