#include <stdexcept>

#include "abelianlab/catalog.hpp"
#include "abelianlab/kernels.hpp"
#include "abelianlab/theorems.hpp"

namespace abelianlab {

VerificationReport conjecture_blocks(const WordPrefix& w, std::size_t level, std::uint64_t N, unsigned l_min,
                                     std::optional<ParityIncrements> inc) {
    using u64 = std::uint64_t;
    if (l_min == 0) throw std::invalid_argument("l_min must be positive");
    VerificationReport r;
    r.empirical = true;
    r.claim = "reflection with parity increments for the abelian complexity of block(" +
              (w.regenerable() ? w.provenance().describe() : std::string("literal")) + ", " +
              std::to_string(level) + ")";
    const WordPrefix z = block_coding(w.regrow(level + 64), level);
    const auto P = kernels::l_abelian_complexity(z, 1, N);
    const u64 L0 = u64{1} << l_min;
    if (!inc) {
        if (L0 + 1 > N) throw std::invalid_argument("N too small to infer increments at l_min");
        inc = ParityIncrements{P[L0] - P[0], P[L0 + 1] - P[1]};
    }
    r.notes.push_back("increments: even r +" + std::to_string(inc->even) + ", odd r +" + std::to_string(inc->odd));
    unsigned l_hi = l_min;
    for (u64 l = l_min; (u64{1} << l) <= N; ++l) {
        const u64 L = u64{1} << l;
        u64 before = r.failures;
        for (u64 q = 0; q < L && L + q <= N; ++q) {
            std::int64_t want = 2 * q <= L ? P[q] + (q % 2 ? inc->odd : inc->even) : P[2 * L - q];
            r.expect_eq(want, P[L + q], "l=" + std::to_string(l) + " r=" + std::to_string(q));
        }
        if (2 * L - 1 <= N) l_hi = static_cast<unsigned>(l);
        r.notes.push_back("l=" + std::to_string(l) + (r.failures == before ? ": holds" : ": fails") +
                          (2 * L - 1 <= N ? "" : " (partial range)"));
    }
    r.range = std::to_string(l_min) + " <= l <= " + std::to_string(l_hi) + " complete, 2^l + r <= " +
              std::to_string(N);
    return r;
}

SequenceOracle named_sequence(const std::string& id_in) {
    std::string id = id_in;
    std::int64_t mod = 0;
    if (auto pos = id.rfind("-mod"); pos != std::string::npos && pos + 4 < id.size()) {
        mod = std::stoll(id.substr(pos + 4));
        id = id.substr(0, pos);
    }
    auto finish = [&](SequenceOracle s) {
        if (mod) return reduced_mod(s, mod);
        return s;
    };
    if (id == "A" || id == "a007302") return finish(a_oracle());
    if (id == "const1") return finish(constant(1));

    auto dash = id.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("unknown series id: " + id_in);
    const std::string head = id.substr(0, dash), word_id = id.substr(dash + 1);
    if (!catalog::is_word_id(word_id)) throw std::invalid_argument("unknown word in series id: " + id_in);
    StatisticKind kind;
    if (head == "pinf") {
        kind = StatisticKind::factor();
    } else if (head.size() > 1 && head[0] == 'p' && head.find_first_not_of("0123456789", 1) == std::string::npos) {
        kind = StatisticKind::l_abelian(std::stoul(head.substr(1)));
    } else {
        static const std::pair<const char*, Statistic> stats[] = {
            {"jmax", Statistic::JumpMax}, {"jmin", Statistic::JumpMin}, {"delta", Statistic::ExtDelta},
            {"max", Statistic::ExtMax},   {"min", Statistic::ExtMin}};
        bool found = false;
        for (auto [name, st] : stats) {
            std::string nm = name;
            if (head.rfind(nm, 0) != 0 || head.size() == nm.size()) continue;
            kind.stat = st;
            kind.letters = parse_word(head.substr(nm.size()));
            std::sort(kind.letters.begin(), kind.letters.end());
            found = true;
            break;
        }
        if (!found) throw std::invalid_argument("unknown statistic in series id: " + id_in);
    }
    return finish(statistic_oracle(catalog::word(word_id, 64), kind, id));
}

}  // namespace abelianlab
