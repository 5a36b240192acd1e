#include "abelianlab/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace abelianlab::catalog {

namespace {

Morphism make(std::uint32_t source, std::uint32_t target, std::vector<Word> images, const char* name) {
    return Morphism(Alphabet(source), Alphabet(target), std::move(images), name);
}

}  // namespace

const Morphism& thue_morse() {
    static const Morphism m = make(2, 2, {{0, 1}, {1, 0}}, "sigma");
    return m;
}

const Morphism& period_doubling() {
    static const Morphism m = make(2, 2, {{0, 1}, {0, 0}}, "psi");
    return m;
}

const Morphism& phi() {
    static const Morphism m = make(3, 3, {{1, 2}, {1, 2}, {0, 0}}, "phi");
    return m;
}

const Morphism& nu() {
    static const Morphism m = make(4, 4, {{1, 2}, {1, 3}, {2, 0}, {2, 1}}, "nu");
    return m;
}

const Morphism& tau3() {
    static const Morphism m = make(3, 3, {{0}, {2}, {1}}, "tau");
    return m;
}

const Morphism& tau4() {
    static const Morphism m = make(4, 4, {{0}, {2}, {1}, {3}}, "tau");
    return m;
}

const Morphism& tau_prime() {
    static const Morphism m = make(4, 4, {{3}, {1}, {2}, {0}}, "tau'");
    return m;
}

const Morphism& g() {
    static const Morphism m = make(4, 2, {{1}, {0}, {0}, {1}}, "g");
    return m;
}

const std::vector<std::string>& word_ids() {
    static const std::vector<std::string> ids{"tm", "pd", "tm2", "pd2", "pd3"};
    return ids;
}

bool is_word_id(std::string_view id) {
    const auto& ids = word_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

WordPrefix word(std::string_view id, std::size_t len) {
    len = std::max<std::size_t>(len, 1);
    if (id == "tm") return iterate_fixed_point(thue_morse(), 0, len);
    if (id == "pd") return iterate_fixed_point(period_doubling(), 0, len);
    if (id == "tm2") return block_coding(iterate_fixed_point(thue_morse(), 0, len + 1), 2);
    if (id == "pd2") return block_coding(iterate_fixed_point(period_doubling(), 0, len + 1), 2);
    if (id == "pd3") return block_coding(iterate_fixed_point(period_doubling(), 0, len + 2), 3);
    throw std::invalid_argument("unknown word id '" + std::string(id) + "'");
}

Morphism parse_morphism(const std::string& text, std::string name) {
    std::map<Letter, Word> images;
    std::istringstream is(text);
    std::string rule;
    Letter top = 0;
    while (std::getline(is, rule, ',')) {
        auto colon = rule.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == rule.size())
            throw std::invalid_argument("bad morphism rule '" + rule + "'");
        Word lhs = parse_word(rule.substr(0, colon));
        if (lhs.size() != 1) throw std::invalid_argument("rule must map a single letter");
        Word rhs = parse_word(rule.substr(colon + 1));
        top = std::max(top, lhs[0]);
        for (Letter a : rhs) top = std::max(top, a);
        if (!images.emplace(lhs[0], std::move(rhs)).second)
            throw std::invalid_argument("letter mapped twice");
    }
    std::vector<Word> list(top + 1);
    for (Letter a = 0; a <= top; ++a) {
        auto it = images.find(a);
        if (it == images.end()) throw std::invalid_argument("letter " + std::to_string(a) + " has no image");
        list[a] = it->second;
    }
    return Morphism(Alphabet(top + 1), Alphabet(top + 1), std::move(list), std::move(name));
}

}  // namespace abelianlab::catalog
