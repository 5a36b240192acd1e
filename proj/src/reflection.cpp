#include <bit>
#include <random>
#include <stdexcept>

#include "abelianlab/theorems.hpp"

namespace abelianlab {

void ReflectionSpec::validate() const {
    if (l0 > 40) throw std::invalid_argument("l0 too large");
    if (initials.size() != (std::uint64_t{1} << l0))
        throw std::invalid_argument("reflection spec needs exactly 2^l0 initial values");
}

std::int64_t reflection_eval(const ReflectionSpec& spec, std::uint64_t n) {
    spec.validate();
    // Each reflection lands in the left half of the same octave, so this loop is O(log n).
    std::int64_t shift = 0;
    while (n >= spec.initials.size()) {
        unsigned l = static_cast<unsigned>(std::bit_width(n) - 1);
        std::uint64_t r = n - (std::uint64_t{1} << l);
        if (2 * r <= (std::uint64_t{1} << l)) {
            shift += spec.c;
            n = r;
        } else {
            n = (std::uint64_t{1} << (l + 1)) - r;
        }
    }
    return spec.initials[n] + shift;
}

std::vector<std::int64_t> reflection_table(const ReflectionSpec& spec, std::uint64_t n_max) {
    spec.validate();
    std::vector<std::int64_t> s(n_max + 1);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (n < spec.initials.size()) {
            s[n] = spec.initials[n];
            continue;
        }
        unsigned l = static_cast<unsigned>(std::bit_width(n) - 1);
        std::uint64_t r = n - (std::uint64_t{1} << l);
        s[n] = 2 * r <= (std::uint64_t{1} << l) ? s[r] + spec.c : s[(std::uint64_t{1} << (l + 1)) - r];
    }
    return s;
}

const ReflectionSpec& a_spec() {
    static const ReflectionSpec spec{0, 1, {0}};
    return spec;
}

std::int64_t a_sequence(std::uint64_t n) { return reflection_eval(a_spec(), n); }

SequenceOracle a_oracle() {
    return from_function("A", [](std::uint64_t n) { return a_sequence(n); });
}

std::int64_t solve_reflection(const ReflectionSpec& spec, std::uint64_t n) {
    spec.validate();
    if (spec.l0 == 0) return reflection_eval(spec, n);
    const std::uint64_t L = std::uint64_t{1} << spec.l0;  // 2^l0
    const std::uint64_t H = L / 2;                        // 2^(l0-1)
    if (n < L) return spec.initials[n];
    const std::int64_t c = spec.c;
    const auto& s = spec.initials;
    const std::uint64_t q = n / (4 * L);
    const std::uint64_t i = n % (4 * L);
    auto A = [](std::uint64_t m) { return a_sequence(m); };
    if (i == 0) return c * A(q) + s[0];
    if (i < L) return c * A(4 * q + 1) - c + s[i];
    if (i == L) return c * A(4 * q + 1) + s[0];
    if (i < L + H) return solve_reflection(spec, L * q + i - L) + c;
    if (i <= 2 * L + H) {
        std::uint64_t d = i > 2 * L ? i - 2 * L : 2 * L - i;
        return c * A(2 * q + 1) + s[d];
    }
    if (i < 3 * L) return solve_reflection(spec, L * q + i - 2 * L) + c;
    if (i == 3 * L) return c * A(4 * q + 3) + s[0];
    return c * A(4 * q + 3) - c + s[4 * L - i];
}

void VerificationReport::expect(bool ok, const std::string& inputs, const std::string& expected,
                                const std::string& got) {
    ++checks;
    if (ok) return;
    ++failures;
    if (counterexamples.size() < 16) counterexamples.push_back({inputs, expected, got});
}

void VerificationReport::expect_eq(std::int64_t expected, std::int64_t got, const std::string& inputs) {
    ++checks;
    if (expected == got) return;
    ++failures;
    if (counterexamples.size() < 16)
        counterexamples.push_back({inputs, std::to_string(expected), std::to_string(got)});
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.empirical && !r.passed()) return false;
    return true;
}

VerificationReport verify_A_relations(std::uint64_t N, const SequenceOracle& a) {
    VerificationReport rep;
    rep.claim = "A-sequence relations on 2n, 8n+1, 8n+3, 8n+5, 8n+7";
    rep.range = "n <= " + std::to_string(N);
    // Ground truth is the bottom-up recurrence table, independent of the oracle under test.
    auto truth = reflection_table(a_spec(), 8 * N + 7);
    auto A = [&](std::uint64_t m) { return truth[m]; };
    for (std::uint64_t n = 0; n <= N; ++n) {
        std::string at = "n=" + std::to_string(n);
        rep.expect_eq(A(n), a(2 * n), "A(2n), " + at);
        rep.expect_eq(A(4 * n + 1), a(8 * n + 1), "A(8n+1), " + at);
        rep.expect_eq(A(2 * n + 1) + 1, a(8 * n + 3), "A(8n+3), " + at);
        rep.expect_eq(A(2 * n + 1) + 1, a(8 * n + 5), "A(8n+5), " + at);
        rep.expect_eq(A(4 * n + 3), a(8 * n + 7), "A(8n+7), " + at);
    }
    return rep;
}

VerificationReport verify_reflection_fuzz(std::size_t specs, std::uint64_t n_max, std::uint64_t seed) {
    VerificationReport rep;
    rep.claim = "eight-range closed form equals the reflection recurrence";
    rep.range = std::to_string(specs) + " random specs (l0 in 1..4, c in -3..3, initials in -5..5), n <= " +
                std::to_string(n_max);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> l0d(1, 4);
    std::uniform_int_distribution<int> cd(-3, 3), vd(-5, 5);
    for (std::size_t t = 0; t < specs; ++t) {
        ReflectionSpec spec;
        spec.l0 = l0d(rng);
        spec.c = cd(rng);
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << spec.l0); ++i) spec.initials.push_back(vd(rng));
        auto truth = reflection_table(spec, n_max);
        for (std::uint64_t n = 0; n <= n_max; ++n)
            rep.expect_eq(truth[n], solve_reflection(spec, n),
                          "spec#" + std::to_string(t) + " l0=" + std::to_string(spec.l0) +
                              " c=" + std::to_string(spec.c) + " n=" + std::to_string(n));
    }
    return rep;
}

}  // namespace abelianlab
