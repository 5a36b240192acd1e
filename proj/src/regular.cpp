#include "abelianlab/regular.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace abelianlab {

namespace {

std::uint64_t power(std::uint32_t k, std::uint32_t i) {
    std::uint64_t p = 1;
    for (std::uint32_t t = 0; t < i; ++t) {
        if (p > std::numeric_limits<std::uint64_t>::max() / k)
            throw std::overflow_error("kernel exponent too large");
        p *= k;
    }
    return p;
}

std::uint64_t index_of(std::uint32_t k, KernelLabel l, std::uint64_t n) { return power(k, l.i) * n + l.j; }

void check_label(std::uint32_t k, KernelLabel l) {
    if (k < 2) throw std::invalid_argument("base must be at least 2");
    if (l.j >= power(k, l.i)) throw std::invalid_argument("kernel residue out of range");
}

struct CachedStatistic {
    WordPrefix word;
    StatisticKind kind;
    std::mutex mu;
    std::vector<std::int64_t> values;

    CachedStatistic(WordPrefix w, StatisticKind k) : word(std::move(w)), kind(std::move(k)) {}
    void fill(std::uint64_t upto) {
        if (upto < values.size()) return;
        values = series(word, kind, upto).values;
    }
};

}  // namespace

SequenceOracle from_function(std::string label, std::function<std::int64_t(std::uint64_t)> f) {
    return SequenceOracle{std::move(f), std::move(label), {}};
}

SequenceOracle constant(std::int64_t v) {
    return from_function("const" + std::to_string(v), [v](std::uint64_t) { return v; });
}

SequenceOracle statistic_oracle(const WordPrefix& w, const StatisticKind& kind, std::string label) {
    auto cache = std::make_shared<CachedStatistic>(w, kind);
    SequenceOracle s;
    s.label = std::move(label);
    s.evaluator = [cache](std::uint64_t n) {
        std::lock_guard lock(cache->mu);
        if (n >= cache->values.size())
            cache->fill(std::max<std::uint64_t>({n, 2 * cache->values.size(), 255}));
        return cache->values[n];
    };
    s.prepare = [cache](std::uint64_t n) {
        std::lock_guard lock(cache->mu);
        cache->fill(n);
    };
    return s;
}

SequenceOracle shifted(const SequenceOracle& s, std::uint64_t offset) {
    SequenceOracle out;
    out.label = s.label + "(n+" + std::to_string(offset) + ")";
    out.evaluator = [s, offset](std::uint64_t n) { return s(n + offset); };
    out.prepare = [s, offset](std::uint64_t n) { s.reserve(n + offset); };
    return out;
}

SequenceOracle reduced_mod(const SequenceOracle& s, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("modulus must be positive");
    SequenceOracle out;
    out.label = s.label + " mod " + std::to_string(m);
    out.evaluator = [s, m](std::uint64_t n) { return ((s(n) % m) + m) % m; };
    out.prepare = s.prepare;
    return out;
}

SequenceOracle combine(const std::vector<SequenceOracle>& seqs, const std::vector<std::int64_t>& coeffs,
                       const std::vector<SequenceOracle>& predicates) {
    if (seqs.size() != coeffs.size() || seqs.size() != predicates.size())
        throw std::invalid_argument("combine needs aligned lists");
    SequenceOracle out;
    out.label = "combination";
    out.evaluator = [seqs, coeffs, predicates](std::uint64_t n) {
        std::int64_t v = 0;
        for (std::size_t t = 0; t < seqs.size(); ++t)
            if (predicates[t](n) != 0) v += coeffs[t] * seqs[t](n) * predicates[t](n);
        return v;
    };
    out.prepare = [seqs, predicates](std::uint64_t n) {
        for (const auto& s : seqs) s.reserve(n);
        for (const auto& p : predicates) p.reserve(n);
    };
    return out;
}

std::string KernelLabel::to_string(std::uint32_t k) const {
    std::string s = "s(";
    std::uint64_t p = power(k, i);
    if (p != 1) s += std::to_string(p);
    s += "n";
    if (j) s += "+" + std::to_string(j);
    return s + ")";
}

SequenceOracle kernel_slice(const SequenceOracle& s, std::uint32_t k, KernelLabel label) {
    check_label(k, label);
    const std::uint64_t p = power(k, label.i);
    const std::uint64_t j = label.j;
    SequenceOracle out;
    out.label = s.label + "[" + label.to_string(k) + "]";
    out.evaluator = [s, p, j](std::uint64_t n) { return s(p * n + j); };
    out.prepare = [s, p, j](std::uint64_t n) { s.reserve(p * n + j); };
    return out;
}

KernelLabel RelationSet::child(std::size_t b, std::uint32_t d) const {
    const KernelLabel& l = basis.at(b);
    return {l.i + 1, l.j + d * power(k, l.i)};
}

bool RelationSet::integral() const {
    for (const auto& per_basis : relations)
        for (const auto& coeffs : per_basis)
            for (const auto& c : coeffs)
                if (c.get_den() != 1) return false;
    return true;
}

std::vector<IntegerRelation> clear_denominators(const RelationSet& r) {
    std::vector<IntegerRelation> out;
    for (std::size_t b = 0; b < r.rank(); ++b)
        for (std::uint32_t d = 0; d < r.k; ++d) {
            const auto& coeffs = r.relations[b][d];
            mpz_class lcm = 1;
            for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
            IntegerRelation rel{r.child(b, d), lcm, {}};
            for (const auto& c : coeffs) rel.coeffs.push_back(mpz_class(c * lcm));
            out.push_back(std::move(rel));
        }
    return out;
}

namespace {

// Forward elimination over the rationals, remembering how each row combines the basis.
class Echelon {
public:
    explicit Echelon(std::size_t width) : width_(width) {}

    // Reduces v. Returns nullopt if independent (and adds it), else its coordinates.
    std::optional<std::vector<mpq_class>> insert(std::vector<mpq_class> v) {
        std::vector<mpq_class> combo(rows_.size() + 1);
        for (std::size_t e = 0; e < rows_.size(); ++e) {
            const Row& row = rows_[e];
            if (sgn(v[row.pivot]) == 0) continue;
            mpq_class f = v[row.pivot];
            for (std::size_t c = row.pivot; c < width_; ++c)
                if (sgn(row.values[c]) != 0) v[c] -= f * row.values[c];
            for (std::size_t t = 0; t < row.combo.size(); ++t)
                if (sgn(row.combo[t]) != 0) combo[t] -= f * row.combo[t];
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return sgn(x) != 0; });
        if (nz == v.end()) {
            combo.pop_back();
            for (auto& c : combo) c = -c;
            return combo;
        }
        // v_orig - sum f e_row is the residue; scale so the pivot is 1.
        std::size_t pivot = static_cast<std::size_t>(nz - v.begin());
        mpq_class p = v[pivot];
        combo.back() = 1;
        for (auto& x : v) x /= p;
        for (auto& c : combo) c /= p;
        rows_.push_back(Row{pivot, std::move(v), std::move(combo)});
        for (auto& row : rows_) row.combo.resize(rows_.size());
        return std::nullopt;
    }

private:
    struct Row {
        std::size_t pivot;
        std::vector<mpq_class> values;
        std::vector<mpq_class> combo;
    };
    std::size_t width_;
    std::vector<Row> rows_;
};

}  // namespace

RelationSet guess_relations(const SequenceOracle& s, std::uint32_t k, const GuessOptions& opts) {
    if (k < 2) throw std::invalid_argument("base must be at least 2");
    if (opts.truncation < 8) throw std::invalid_argument("truncation must be at least 8");
    if (opts.horizon < static_cast<std::uint64_t>(k) * opts.truncation)
        throw std::invalid_argument("horizon must be at least k * truncation");
    s.reserve(opts.horizon);
    const std::size_t T = opts.truncation;

    RelationSet out;
    out.k = k;
    out.label = s.label;
    out.truncation = T;
    out.horizon = opts.horizon;

    auto truncation = [&](KernelLabel l) {
        std::vector<mpq_class> v(T);
        for (std::size_t n = 0; n < T; ++n) v[n] = mpq_class(static_cast<long>(s(index_of(k, l, n))));
        return v;
    };

    Echelon ech(T);
    std::map<KernelLabel, std::vector<mpq_class>> dependent;
    std::vector<KernelLabel> level{{0, 0}};
    while (!level.empty()) {
        std::vector<KernelLabel> next;
        for (const KernelLabel& l : level) {
            auto coords = ech.insert(truncation(l));
            if (coords) {
                dependent.emplace(l, std::move(*coords));
                continue;
            }
            if (out.basis.size() == opts.rank_cap) throw NotClosed(opts.rank_cap);
            out.basis.push_back(l);
            for (std::uint32_t d = 0; d < k; ++d) next.push_back({l.i + 1, l.j + d * power(k, l.i)});
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }

    const std::size_t rank = out.basis.size();
    out.relations.assign(rank, std::vector<std::vector<mpq_class>>(k));
    for (std::size_t b = 0; b < rank; ++b)
        for (std::uint32_t d = 0; d < k; ++d) {
            KernelLabel c = out.child(b, d);
            auto& coeffs = out.relations[b][d];
            auto it = std::find(out.basis.begin(), out.basis.end(), c);
            if (it != out.basis.end()) {
                coeffs.assign(rank, 0);
                coeffs[static_cast<std::size_t>(it - out.basis.begin())] = 1;
            } else {
                coeffs = dependent.at(c);
                coeffs.resize(rank);
            }
        }
    for (const auto& l : out.basis) out.initial_values.push_back(s(l.j));

    // Re-check every relation on the full oracle, not just the truncations.
    for (const IntegerRelation& rel : clear_denominators(out)) {
        for (std::uint64_t n = 0;; ++n) {
            std::uint64_t at = index_of(k, rel.child, n);
            if (at > opts.horizon) break;
            bool in_range = true;
            mpz_class rhs = 0;
            for (std::size_t t = 0; t < rank && in_range; ++t) {
                std::uint64_t bt = index_of(k, out.basis[t], n);
                if (bt > opts.horizon) in_range = false;
                else if (sgn(rel.coeffs[t]) != 0) rhs += rel.coeffs[t] * static_cast<long>(s(bt));
            }
            if (!in_range) break;
            if (rel.multiplier * static_cast<long>(s(at)) != rhs)
                throw VerificationFailed(n, s.label + " " + rel.child.to_string(k));
        }
    }
    return out;
}

LinearRepresentation to_linear_representation(const RelationSet& r) {
    LinearRepresentation rep;
    rep.k = r.k;
    rep.dimension = r.rank();
    rep.horizon = r.horizon;
    rep.row.assign(rep.dimension, 0);
    if (rep.dimension) rep.row[0] = 1;  // basis[0] is s itself
    rep.digit_matrices.assign(r.k, std::vector<std::vector<mpq_class>>(rep.dimension));
    for (std::uint32_t d = 0; d < r.k; ++d)
        for (std::size_t b = 0; b < rep.dimension; ++b) rep.digit_matrices[d][b] = r.relations[b][d];
    for (auto v : r.initial_values) rep.column.emplace_back(static_cast<long>(v));
    return rep;
}

mpq_class eval_linear_representation(const LinearRepresentation& rep, std::uint64_t n) {
    std::vector<std::uint32_t> digits;
    for (std::uint64_t m = n; m > 0; m /= rep.k) digits.push_back(static_cast<std::uint32_t>(m % rep.k));
    std::vector<mpq_class> v = rep.column, next(rep.dimension);
    for (auto d = digits.rbegin(); d != digits.rend(); ++d) {
        const auto& M = rep.digit_matrices[*d];
        for (std::size_t a = 0; a < rep.dimension; ++a) {
            mpq_class acc = 0;
            for (std::size_t b = 0; b < rep.dimension; ++b)
                if (sgn(M[a][b]) != 0) acc += M[a][b] * v[b];
            next[a] = acc;
        }
        v.swap(next);
    }
    mpq_class out = 0;
    for (std::size_t a = 0; a < rep.dimension; ++a) out += rep.row[a] * v[a];
    return out;
}

std::size_t AutomaticKernel::state_of(std::uint64_t n) const {
    std::size_t st = initial;
    for (std::uint64_t m = n; m > 0; m /= k) st = transitions[st][m % k];
    return st;
}

AutomaticKernel automatic_kernel(const SequenceOracle& s, std::uint32_t k, const AutomaticOptions& opts) {
    if (k < 2) throw std::invalid_argument("base must be at least 2");
    s.reserve(opts.horizon);
    AutomaticKernel out;
    out.k = k;
    out.horizon = opts.horizon;
    std::map<std::vector<std::int64_t>, std::size_t> seen;
    auto truncation = [&](KernelLabel l) {
        std::vector<std::int64_t> v(opts.truncation);
        for (std::size_t n = 0; n < v.size(); ++n) v[n] = s(index_of(k, l, n));
        return v;
    };
    auto state_for = [&](KernelLabel l) {
        auto [it, fresh] = seen.emplace(truncation(l), out.states.size());
        if (fresh) {
            if (out.states.size() == opts.state_cap) throw StateCapExceeded(opts.state_cap);
            out.states.push_back(l);
            out.outputs.push_back(s(l.j));
        }
        return it->second;
    };
    out.initial = state_for({0, 0});
    for (std::size_t st = 0; st < out.states.size(); ++st) {
        std::vector<std::size_t> row(k);
        for (std::uint32_t d = 0; d < k; ++d) {
            KernelLabel l = out.states[st];
            row[d] = state_for({l.i + 1, l.j + d * power(k, l.i)});
        }
        out.transitions.push_back(std::move(row));
    }
    for (std::uint64_t n = 0; n <= opts.horizon; ++n)
        if (out.eval(n) != s(n)) throw VerificationFailed(n, s.label + " automaton");
    return out;
}

}  // namespace abelianlab
