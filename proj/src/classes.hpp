#pragma once

// Explicit abelian classes of length-n factors with their two-sided contexts.

#include <map>
#include <string>
#include <vector>

#include "abelianlab/kernels.hpp"
#include "abelianlab/word.hpp"

namespace abelianlab::detail {

struct Occurrence {
    Word before;  // pad letters preceding the factor
    Word after;   // pad letters following it
};

struct FactorClass {
    ParikhVector counts;
    std::vector<Word> members;
};

struct ClassLevel {
    std::vector<FactorClass> classes;
    std::map<Word, std::vector<Occurrence>> contexts;  // factor -> all (before, after) seen
};

inline ClassLevel class_level(const WordPrefix& w, std::size_t n, std::size_t pad) {
    WordView s = w.prefix(std::min(w.size(), kernels::exposure_length(w, n + 2 * pad)));
    ClassLevel out;
    std::map<ParikhVector, std::vector<Word>> groups;
    for (auto& u : distinct_factors(s, n)) {
        auto pv = parikh(u, w.alphabet());
        groups[pv].push_back(std::move(u));
    }
    for (auto& [pv, members] : groups) out.classes.push_back({pv, std::move(members)});
    for (const auto& e : distinct_factors(s, n + 2 * pad)) {
        Word mid(e.begin() + pad, e.begin() + pad + n);
        out.contexts[mid].push_back({Word(e.begin(), e.begin() + pad), Word(e.end() - pad, e.end())});
    }
    return out;
}

inline std::string show(const std::string& what, std::size_t n, const ParikhVector& pv) {
    std::string s = what + " n=" + std::to_string(n) + " parikh=(";
    for (std::size_t i = 0; i < pv.counts.size(); ++i) s += (i ? "," : "") + std::to_string(pv.counts[i]);
    return s + ")";
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace abelianlab::detail
