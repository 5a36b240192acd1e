#include "abelianlab/word.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace abelianlab {

Alphabet::Alphabet(std::uint32_t r) : size(r) {
    if (r == 0) throw std::invalid_argument("alphabet size must be positive");
}

void check_word(WordView w, Alphabet a) {
    for (Letter x : w)
        if (!a.contains(x))
            throw AlphabetMismatch("letter " + std::to_string(x) + " outside alphabet of size " +
                                   std::to_string(a.size));
}

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images, std::string name)
    : source_(source), target_(target), images_(std::move(images)), name_(std::move(name)) {
    if (images_.size() != source_.size)
        throw std::invalid_argument("morphism needs one image per source letter");
    for (const Word& im : images_) {
        if (im.empty()) throw std::invalid_argument("morphism images must be nonempty");
        check_word(im, target_);
    }
}

const Word& Morphism::image(Letter a) const {
    if (!source_.contains(a)) throw AlphabetMismatch("letter outside morphism source");
    return images_[a];
}

bool Morphism::prolongable_on(Letter a) const {
    if (!source_.contains(a) || source_ != target_) return false;
    const Word& im = images_[a];
    return im.size() >= 2 && im.front() == a;
}

std::optional<std::size_t> Morphism::uniform_length() const {
    std::size_t k = images_.front().size();
    for (const Word& im : images_)
        if (im.size() != k) return std::nullopt;
    return k;
}

Word Morphism::apply(WordView w) const {
    Word out;
    for (Letter a : w) {
        const Word& im = image(a);
        out.insert(out.end(), im.begin(), im.end());
    }
    return out;
}

std::string Provenance::describe() const {
    if (!generator) return "literal";
    std::ostringstream os;
    os << (generator->name().empty() ? "morphism" : generator->name()) << "^w(" << seed << ")";
    for (const Step& s : chain) {
        if (auto* c = std::get_if<CodingStep>(&s))
            os << " |> " << (c->coding->name().empty() ? "coding" : c->coding->name());
        else
            os << " |> block" << std::get<BlockStep>(s).level;
    }
    return os.str();
}

WordPrefix::WordPrefix(Alphabet alphabet, Word letters, Provenance provenance)
    : alphabet_(alphabet),
      letters_(std::make_shared<const Word>(std::move(letters))),
      provenance_(std::make_shared<const Provenance>(std::move(provenance))) {
    check_word(*letters_, alphabet_);
}

WordPrefix WordPrefix::literal(Word letters, Alphabet alphabet) {
    return WordPrefix(alphabet, std::move(letters), Provenance{});
}

WordPrefix WordPrefix::literal(Word letters) {
    Letter top = 0;
    for (Letter a : letters) top = std::max(top, a);
    return literal(std::move(letters), Alphabet(top + 1));
}

WordView WordPrefix::prefix(std::size_t len) const {
    if (len > size()) throw TooShort("prefix longer than available word");
    return letters().first(len);
}

namespace {

std::size_t chain_extra(const Provenance& p) {
    std::size_t extra = 0;
    for (const auto& s : p.chain)
        if (auto* b = std::get_if<Provenance::BlockStep>(&s)) extra += b->level - 1;
    return extra;
}

Word grow_fixed_point(const Morphism& m, Letter seed, std::size_t len) {
    Word w = m.image(seed);
    w.reserve(len + 64);
    for (std::size_t i = 1; w.size() < len; ++i) {
        const Word& im = m.image(w[i]);
        w.insert(w.end(), im.begin(), im.end());
    }
    return w;
}

std::uint32_t checked_power(std::uint32_t r, std::size_t level) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < level; ++i) {
        p *= r;
        if (p > std::numeric_limits<std::uint32_t>::max())
            throw std::overflow_error("block coding alphabet does not fit in 32 bits");
    }
    return static_cast<std::uint32_t>(p);
}

}  // namespace

WordPrefix WordPrefix::regrow(std::size_t len) const {
    const Provenance& p = provenance();
    if (!p.regenerable()) return *this;
    if (len <= size()) return *this;
    WordPrefix base = iterate_fixed_point(*p.generator, p.seed, len + chain_extra(p));
    for (const auto& s : p.chain) {
        if (auto* c = std::get_if<Provenance::CodingStep>(&s))
            base = apply_coding(*c->coding, base);
        else
            base = block_coding(base, std::get<Provenance::BlockStep>(s).level);
    }
    return base;
}

WordPrefix iterate_fixed_point(const Morphism& m, Letter seed, std::size_t min_len) {
    if (!m.prolongable_on(seed))
        throw NotProlongable("morphism is not prolongable on letter " + std::to_string(seed));
    if (min_len == 0) throw std::invalid_argument("prefix length must be positive");
    Word w = grow_fixed_point(m, seed, min_len);
    Provenance p;
    p.generator = std::make_shared<const Morphism>(m);
    p.seed = seed;
    return WordPrefix(m.source(), std::move(w), std::move(p));
}

WordPrefix apply_coding(const Morphism& c, const WordPrefix& w) {
    if (!c.is_coding()) throw std::invalid_argument("coding must map letters to letters");
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = c.image(w[i]).front();
    Provenance p = w.provenance();
    if (p.regenerable())
        p.chain.push_back(Provenance::CodingStep{std::make_shared<const Morphism>(c)});
    return WordPrefix(c.target(), std::move(out), std::move(p));
}

Word block_code(WordView w, std::uint32_t r, std::size_t level) {
    if (level == 0) throw std::invalid_argument("block level must be positive");
    checked_power(r, level);
    if (w.size() < level) return {};
    Word out(w.size() - level + 1);
    std::uint32_t top = 1;
    for (std::size_t i = 1; i < level; ++i) top *= r;
    std::uint32_t v = 0;
    for (std::size_t i = 0; i + 1 < level; ++i) v = v * r + w[i];
    for (std::size_t j = 0; j < out.size(); ++j) {
        v = v * r + w[j + level - 1];
        out[j] = v;
        v -= w[j] * top;
    }
    return out;
}

WordPrefix block_coding(const WordPrefix& w, std::size_t level) {
    if (w.size() < level) throw TooShort("word shorter than block level");
    std::uint32_t r = w.alphabet().size;
    Alphabet out_alpha(checked_power(r, level));
    Provenance p = w.provenance();
    if (p.regenerable()) p.chain.push_back(Provenance::BlockStep{level, w.alphabet()});
    return WordPrefix(out_alpha, block_code(w.letters(), r, level), std::move(p));
}

std::uint64_t ParikhVector::total() const {
    std::uint64_t s = 0;
    for (auto c : counts) s += c;
    return s;
}

std::uint64_t ParikhVector::sum_over(std::span<const Letter> letters) const {
    std::uint64_t s = 0;
    for (Letter a : letters) s += a < counts.size() ? counts[a] : 0;
    return s;
}

ParikhVector parikh(WordView w, Alphabet a) {
    ParikhVector p;
    p.counts.assign(a.size, 0);
    for (Letter x : w) {
        if (!a.contains(x)) throw AlphabetMismatch("letter outside alphabet in parikh");
        ++p.counts[x];
    }
    return p;
}

std::size_t count_occurrences(WordView u, WordView v) {
    if (v.size() > u.size()) return 0;
    std::size_t c = 0;
    for (std::size_t i = 0; i + v.size() <= u.size(); ++i)
        if (std::equal(v.begin(), v.end(), u.begin() + i)) ++c;
    return c;
}

Word reversal(WordView w) { return Word(w.rbegin(), w.rend()); }

std::size_t default_prefix_cap() {
    if (const char* env = std::getenv("ABELIANLAB_MAX_PREFIX")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 22;
}

bool FactorSet::contains(WordView u) const {
    return std::binary_search(factors.begin(), factors.end(), u,
                              [](const auto& a, const auto& b) {
                                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                                      b.end());
                              });
}

namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
    __uint128_t p = static_cast<__uint128_t>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kMersenne61);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    return s >= kMersenne61 ? s - kMersenne61 : s;
}

// Start positions of one representative per distinct window, found via rolling hash with
// exact comparison inside hash buckets.
std::vector<std::size_t> distinct_starts(WordView w, std::size_t n) {
    std::vector<std::size_t> starts;
    if (w.size() < n) return starts;
    std::size_t count = w.size() - n + 1;
    const std::uint64_t base = 1000003;
    std::uint64_t top = 1;
    for (std::size_t i = 0; i < n; ++i) top = mulmod61(top, base);
    std::vector<std::pair<std::uint64_t, std::size_t>> hashed(count);
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < n; ++i) h = (mulmod61(h, base) + w[i] + 1) % kMersenne61;
    for (std::size_t j = 0;; ++j) {
        hashed[j] = {h, j};
        if (j + 1 == count) break;
        h = (mulmod61(h, base) + w[j + n] + 1) % kMersenne61;
        h = (h + kMersenne61 - mulmod61(top, w[j] + 1)) % kMersenne61;
    }
    std::sort(hashed.begin(), hashed.end());
    const Letter* data = w.data();
    for (std::size_t a = 0; a < count;) {
        std::size_t b = a;
        while (b < count && hashed[b].first == hashed[a].first) ++b;
        std::size_t bucket_begin = starts.size();
        for (std::size_t q = a; q < b; ++q) {
            std::size_t pos = hashed[q].second;
            bool seen = false;
            for (std::size_t t = bucket_begin; t < starts.size() && !seen; ++t)
                seen = std::memcmp(data + starts[t], data + pos, n * sizeof(Letter)) == 0;
            if (!seen) starts.push_back(pos);
        }
        a = b;
    }
    return starts;
}

}  // namespace

std::vector<Word> distinct_factors(WordView w, std::size_t n) {
    if (n == 0) return {Word{}};
    std::vector<Word> out;
    for (std::size_t s : distinct_starts(w, n)) out.emplace_back(w.begin() + s, w.begin() + s + n);
    std::sort(out.begin(), out.end());
    return out;
}

FactorSet enumerate_factors(const WordPrefix& w, std::size_t n, std::size_t initial_len,
                            std::size_t cap) {
    FactorSet fs;
    fs.length = n;
    if (n == 0) {
        fs.factors = {Word{}};
        fs.stabilized = true;
        return fs;
    }
    if (!w.regenerable()) {
        fs.factors = distinct_factors(w.letters(), n);
        fs.prefix_length_used = w.size();
        return fs;
    }
    if (cap == 0) cap = default_prefix_cap();
    std::size_t len = initial_len ? initial_len : std::max<std::size_t>(64, 4 * n);
    WordPrefix cur = w.regrow(len);
    std::size_t prev = distinct_starts(cur.prefix(len), n).size();
    for (;;) {
        std::size_t next_len = 2 * len;
        if (next_len > cap) throw NotStabilized(n, cap);
        cur = cur.regrow(next_len);
        std::size_t now = distinct_starts(cur.prefix(next_len), n).size();
        // Factor sets of nested prefixes are nested, so equal sizes mean equal sets.
        if (now == prev) {
            fs.factors = distinct_factors(cur.prefix(next_len), n);
            fs.stabilized = true;
            fs.prefix_length_used = next_len;
            return fs;
        }
        prev = now;
        len = next_len;
    }
}

bool l_abelian_equivalent(WordView x, WordView y, std::size_t level) {
    if (level == 0) throw std::invalid_argument("level must be positive");
    if (x.size() != y.size()) return false;
    for (std::size_t m = 1; m <= level && m <= x.size(); ++m) {
        std::map<Word, long> diff;
        for (std::size_t i = 0; i + m <= x.size(); ++i) ++diff[Word(x.begin() + i, x.begin() + i + m)];
        for (std::size_t i = 0; i + m <= y.size(); ++i) --diff[Word(y.begin() + i, y.begin() + i + m)];
        for (const auto& [v, d] : diff)
            if (d != 0) return false;
    }
    return true;
}

LAbelianKey l_abelian_key(WordView x, std::size_t level, Alphabet a) {
    if (level == 0) throw std::invalid_argument("level must be positive");
    if (x.size() + 1 < level) throw TooShort("word shorter than level - 1");
    check_word(x, a);
    LAbelianKey key;
    key.prefix.assign(x.begin(), x.begin() + (level - 1));
    key.blocks = parikh(block_code(x, a.size, level), Alphabet(checked_power(a.size, level)));
    return key;
}

std::optional<CoverageBound> CoverageBound::of(const WordPrefix& w) {
    const Provenance& p = w.provenance();
    if (!p.regenerable()) return std::nullopt;
    auto k = p.generator->uniform_length();
    if (!k || *k < 2) return std::nullopt;
    const Morphism& m = *p.generator;
    std::uint32_t r = m.source().size;
    Word x0 = grow_fixed_point(m, p.seed, 2);
    std::vector<char> in(std::size_t{r} * r, 0);
    std::vector<std::pair<Letter, Letter>> todo{{x0[0], x0[1]}};
    in[x0[0] * r + x0[1]] = 1;
    std::size_t needed = 1;
    while (!todo.empty()) {
        auto [a, b] = todo.back();
        todo.pop_back();
        Word img = m.apply(std::array<Letter, 2>{a, b});
        for (std::size_t i = 0; i + 1 < img.size(); ++i) {
            char& flag = in[img[i] * r + img[i + 1]];
            if (!flag) {
                flag = 1;
                ++needed;
                todo.push_back({img[i], img[i + 1]});
            }
        }
    }
    std::size_t span = 0;
    for (std::size_t len = 64;; len *= 2) {
        Word x = grow_fixed_point(m, p.seed, len);
        std::vector<char> seen(in.size(), 0);
        std::size_t found = 0;
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            char& s = seen[x[i] * r + x[i + 1]];
            if (!s) {
                s = 1;
                if (++found == needed) {
                    span = i + 2;
                    break;
                }
            }
        }
        if (span) break;
        if (len > (std::size_t{1} << 26)) return std::nullopt;
    }
    return CoverageBound(span, *k, chain_extra(p));
}

std::size_t CoverageBound::operator()(std::size_t n) const {
    if (n == 0) return 0;
    std::size_t base_n = n + extra_;
    std::size_t power = 1;
    while (power < base_n) power *= k_;
    return span_ * power - extra_;
}

std::string format_word(WordView w, Alphabet a) {
    std::string s;
    if (a.size <= 10) {
        s.reserve(w.size());
        for (Letter x : w) s.push_back(static_cast<char>('0' + x));
        return s;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(w[i]);
    }
    return s;
}

Word parse_word(const std::string& text) {
    Word w;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad letter '" + tok + "'");
            w.push_back(static_cast<Letter>(std::stoul(tok)));
        }
        return w;
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw std::invalid_argument(std::string("bad letter '") + ch + "'");
        w.push_back(static_cast<Letter>(ch - '0'));
    }
    return w;
}

}  // namespace abelianlab
