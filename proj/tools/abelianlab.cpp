#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "abelianlab/catalog.hpp"
#include "abelianlab/complexity.hpp"
#include "abelianlab/errors.hpp"
#include "abelianlab/io.hpp"
#include "abelianlab/regular.hpp"
#include "abelianlab/theorems.hpp"

using namespace abelianlab;

namespace {

enum Exit { kOk = 0, kUsage = 2, kNotClosed = 3, kVerification = 4, kNotStabilized = 5 };

struct WordSpec {
    std::string id, literal, morphism, coding;
    Letter seed = 0;
    std::size_t block = 0;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--id", id, "catalog word: tm, pd, tm2, pd2, pd3");
        cmd->add_option("--literal", literal, "explicit finite word, digits or comma-separated");
        cmd->add_option("--morphism", morphism, "fixed point of a morphism, e.g. 0:01,1:10");
        cmd->add_option("--seed", seed, "seed letter for --morphism");
        cmd->add_option("--block", block, "replace the word by its block coding of this level");
        cmd->add_option("--coding", coding, "apply a letter-to-letter coding, e.g. 0:1,1:0");
    }

    std::string name() const {
        std::string base = !id.empty() ? id : !literal.empty() ? "literal" : "fix(" + morphism + ")";
        if (block) base = "block(" + base + "," + std::to_string(block) + ")";
        if (!coding.empty()) base = "code(" + base + ")";
        return base;
    }

    // Prefix of at least len letters (a literal word is returned whole).
    WordPrefix build(std::size_t len) const {
        int given = !id.empty() + !literal.empty() + !morphism.empty();
        if (given != 1) throw std::invalid_argument("give exactly one of --id, --literal, --morphism");
        std::size_t base_len = len + (block ? block - 1 : 0);
        WordPrefix w = !id.empty()        ? catalog::word(id, base_len)
                       : !literal.empty() ? WordPrefix::literal(parse_word(literal))
                                          : iterate_fixed_point(catalog::parse_morphism(morphism, "m"), seed, base_len);
        if (block) w = block_coding(w, block);
        if (!coding.empty()) w = apply_coding(catalog::parse_morphism(coding, "c"), w);
        return w;
    }
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"abelianlab: factor statistics, regularity guessing and verification for automatic words"};
    app.require_subcommand(1);

    WordSpec wspec;
    std::size_t word_len = 32;
    auto* word = app.add_subcommand("word", "print a prefix of a word");
    wspec.add_options(word);
    word->add_option("--len", word_len, "prefix length");

    WordSpec cspec;
    std::string stat = "labelian", letters, format = "csv", output;
    std::size_t level = 1, n_max = 64, n_min = 0;
    auto* complexity = app.add_subcommand("complexity", "compute a complexity series");
    cspec.add_options(complexity);
    complexity->add_option("--stat", stat, "factor, labelian, max, min, delta, jmax, jmin")
        ->check(CLI::IsMember({"factor", "labelian", "max", "min", "delta", "jmax", "jmin"}));
    complexity->add_option("--level", level, "l for the l-abelian complexity")->check(CLI::PositiveNumber);
    complexity->add_option("--letters", letters, "letter set for extremal and jump statistics, e.g. 1,2");
    complexity->add_option("--max", n_max, "largest n");
    complexity->add_option("--min", n_min, "smallest n");
    complexity->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));
    complexity->add_option("--output", output, "output file, default stdout");

    std::string series_id, guess_output;
    std::uint32_t k = 2;
    GuessOptions gopts;
    bool automatic = false, linear = false;
    auto* guess = app.add_subcommand("guess", "guess and verify k-kernel relations of a named series");
    guess->add_option("--series", series_id, "A, const1, p<l>-<word>, pinf-<word>, delta12-tm2, min0-pd2-mod2, ...")
        ->required();
    guess->add_option("--k", k, "base")->check(CLI::Range(2, 16));
    guess->add_option("--T", gopts.truncation, "truncation length");
    guess->add_option("--N", gopts.horizon, "verification horizon");
    guess->add_option("--rank-cap", gopts.rank_cap, "basis size limit");
    guess->add_flag("--automatic", automatic, "build a finite automaton instead of linear relations");
    guess->add_flag("--linear", linear, "print the linear representation instead of the relations");
    guess->add_option("--output", guess_output, "output file, default stdout");

    std::string suite = "all", vformat = "text", vword = "pd", voutput;
    std::uint64_t vmax = 512, vseed = 1, class_max = std::numeric_limits<std::uint64_t>::max();
    std::size_t fuzz = 100, vlevel = 3;
    auto* verify = app.add_subcommand("verify", "check stated identities against computed ground truth");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"A", "reflection", "pd", "tm", "cross", "conjecture", "all"}));
    verify->add_option("--max", vmax, "largest n checked");
    verify->add_option("--fuzz", fuzz, "random reflection specs");
    verify->add_option("--seed", vseed, "seed for the reflection fuzzing");
    verify->add_option("--class-max", class_max, "largest n for explicit class-level checks");
    verify->add_option("--word", vword, "catalog word for the conjecture suite");
    verify->add_option("--level", vlevel, "block level for the conjecture suite")->check(CLI::PositiveNumber);
    verify->add_option("--format", vformat)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--output", voutput, "output file, default stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*word) {
            WordPrefix w = wspec.build(word_len);
            std::size_t len = std::min(word_len, w.size());
            std::cout << format_word(w.prefix(len), w.alphabet()) << '\n';
            return kOk;
        }
        if (*complexity) {
            if (n_min > n_max) throw std::invalid_argument("--min exceeds --max");
            StatisticKind kind;
            if (stat == "factor")
                kind = StatisticKind::factor();
            else if (stat == "labelian")
                kind = StatisticKind::l_abelian(level);
            else if (letters.empty())
                throw std::invalid_argument("--letters is required for --stat " + stat);
            else
                kind = StatisticKind::parse(stat + ":" + letters);
            WordPrefix w = cspec.build(64);
            ComplexitySeries s = series(w, kind, n_max, cspec.name());
            if (n_min > 0) {
                s.values.erase(s.values.begin(), s.values.begin() + static_cast<std::ptrdiff_t>(n_min));
                s.n_lo = n_min;
            }
            emit(format == "csv" ? io::series_to_csv(s) : format == "json" ? io::series_to_json(s) + "\n"
                                                                            : io::series_to_text(s),
                 output);
            return kOk;
        }
        if (*guess) {
            SequenceOracle s = named_sequence(series_id);
            if (automatic) {
                AutomaticOptions a;
                a.truncation = gopts.truncation;
                a.horizon = gopts.horizon;
                a.state_cap = gopts.rank_cap;
                emit(io::automatic_to_json(automatic_kernel(s, k, a), series_id) + "\n", guess_output);
                return kOk;
            }
            RelationSet r = guess_relations(s, k, gopts);
            emit((linear ? io::linear_representation_to_json(to_linear_representation(r)) : io::relations_to_json(r)) +
                     "\n",
                 guess_output);
            std::cerr << series_id << ": rank " << r.rank() << ", verified for n <= " << r.horizon << '\n';
            return kOk;
        }
        if (*verify) {
            std::vector<VerificationReport> reports;
            SuiteOptions so;
            so.class_level_max = class_max;
            auto run = [&](const std::string& name) { return suite == "all" || suite == name; };
            if (run("A")) reports.push_back(verify_A_relations(vmax));
            if (run("reflection")) reports.push_back(verify_reflection_fuzz(fuzz, vmax, vseed));
            if (run("pd"))
                for (auto& r : verify_pd_suite(vmax, so)) reports.push_back(std::move(r));
            if (run("tm"))
                for (auto& r : verify_tm_suite(vmax, so)) reports.push_back(std::move(r));
            if (run("cross")) reports.push_back(verify_cross_word(vmax));
            if (run("conjecture")) reports.push_back(conjecture_blocks(catalog::word(vword, 64), vlevel, vmax));
            emit(vformat == "json" ? io::reports_to_json(reports) + "\n" : io::reports_to_text(reports), voutput);
            return all_passed(reports) ? kOk : kVerification;
        }
    } catch (const NotStabilized& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNotStabilized;
    } catch (const NotClosed& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNotClosed;
    } catch (const StateCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNotClosed;
    } catch (const VerificationFailed& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
