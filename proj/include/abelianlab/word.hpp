#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "abelianlab/errors.hpp"

namespace abelianlab {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

struct Alphabet {
    std::uint32_t size = 1;

    Alphabet() = default;
    explicit Alphabet(std::uint32_t r);
    bool contains(Letter a) const { return a < size; }
    bool operator==(const Alphabet&) const = default;
};

// Throws AlphabetMismatch if some letter of w is outside the alphabet.
void check_word(WordView w, Alphabet a);

class Morphism {
public:
    Morphism(Alphabet source, Alphabet target, std::vector<Word> images, std::string name = {});

    const Alphabet& source() const { return source_; }
    const Alphabet& target() const { return target_; }
    const Word& image(Letter a) const;
    const std::vector<Word>& images() const { return images_; }
    const std::string& name() const { return name_; }

    bool prolongable_on(Letter a) const;
    std::optional<std::size_t> uniform_length() const;
    bool is_coding() const { return uniform_length() == std::size_t{1}; }

    Word apply(WordView w) const;

private:
    Alphabet source_, target_;
    std::vector<Word> images_;
    std::string name_;
};

// How a prefix was produced. A generator lets the prefix be regrown to any length.
struct Provenance {
    struct CodingStep {
        std::shared_ptr<const Morphism> coding;
    };
    struct BlockStep {
        std::size_t level;
        Alphabet input;
    };
    using Step = std::variant<CodingStep, BlockStep>;

    std::shared_ptr<const Morphism> generator;  // null for literal words
    Letter seed = 0;
    std::vector<Step> chain;

    bool regenerable() const { return generator != nullptr; }
    std::string describe() const;
};

class WordPrefix {
public:
    WordPrefix(Alphabet alphabet, Word letters, Provenance provenance);

    static WordPrefix literal(Word letters, Alphabet alphabet);
    static WordPrefix literal(Word letters);  // alphabet = 1 + max letter

    std::size_t size() const { return letters_->size(); }
    Letter operator[](std::size_t i) const { return (*letters_)[i]; }
    WordView letters() const { return *letters_; }
    WordView prefix(std::size_t len) const;
    const Alphabet& alphabet() const { return alphabet_; }
    const Provenance& provenance() const { return *provenance_; }
    bool regenerable() const { return provenance_->regenerable(); }

    // Same infinite word, prefix of length >= len. Literal words are returned unchanged.
    WordPrefix regrow(std::size_t len) const;

private:
    Alphabet alphabet_;
    std::shared_ptr<const Word> letters_;
    std::shared_ptr<const Provenance> provenance_;
};

struct ParikhVector {
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
    std::uint64_t sum_over(std::span<const Letter> letters) const;
    auto operator<=>(const ParikhVector&) const = default;
};

struct FactorSet {
    std::size_t length = 0;
    std::vector<Word> factors;  // sorted, distinct
    bool stabilized = false;
    std::size_t prefix_length_used = 0;

    std::size_t size() const { return factors.size(); }
    bool contains(WordView u) const;
};

struct LAbelianKey {
    Word prefix;
    ParikhVector blocks;
    auto operator<=>(const LAbelianKey&) const = default;
};

WordPrefix iterate_fixed_point(const Morphism& m, Letter seed, std::size_t min_len);
WordPrefix apply_coding(const Morphism& c, const WordPrefix& w);
WordPrefix block_coding(const WordPrefix& w, std::size_t level);
Word block_code(WordView w, std::uint32_t r, std::size_t level);

ParikhVector parikh(WordView w, Alphabet a);
std::size_t count_occurrences(WordView u, WordView v);
Word reversal(WordView w);

// Doubling cap from ABELIANLAB_MAX_PREFIX, default 2^22.
std::size_t default_prefix_cap();

FactorSet enumerate_factors(const WordPrefix& w, std::size_t n, std::size_t initial_len = 0,
                            std::size_t cap = 0);
// All distinct length-n factors of the given finite prefix, sorted.
std::vector<Word> distinct_factors(WordView w, std::size_t n);

bool l_abelian_equivalent(WordView x, WordView y, std::size_t level);
LAbelianKey l_abelian_key(WordView x, std::size_t level, Alphabet a);

// Certified prefix length exposing every factor of length n. Available for fixed points of
// uniform morphisms and their codings and block codings: with span the shortest prefix
// holding every length-2 factor, span * k^ceil(log_k n) suffices, because each factor of
// length at most k^m lies inside the image under the m-th power of some length-2 factor.
class CoverageBound {
public:
    static std::optional<CoverageBound> of(const WordPrefix& w);
    std::size_t operator()(std::size_t n) const;
    std::size_t two_factor_span() const { return span_; }

private:
    CoverageBound(std::size_t span, std::size_t k, std::size_t extra)
        : span_(span), k_(k), extra_(extra) {}
    std::size_t span_, k_, extra_;
};

// Word as ASCII digits (alphabet <= 10) or comma-separated integers.
std::string format_word(WordView w, Alphabet a);
Word parse_word(const std::string& text);

}  // namespace abelianlab
