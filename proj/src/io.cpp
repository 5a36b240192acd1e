#include "abelianlab/io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace abelianlab::io {

namespace {

using nlohmann::json;

json integer(const mpz_class& z) {
    if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

mpz_class integer(const json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(std::to_string(j.get<std::int64_t>()));
}

json rational(const mpq_class& q) { return json::array({integer(q.get_num()), integer(q.get_den())}); }

mpq_class rational(const json& j) {
    mpq_class q(integer(j.at(0)), integer(j.at(1)));
    q.canonicalize();
    return q;
}

json matrix(const std::vector<std::vector<mpq_class>>& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& q : row) r.push_back(rational(q));
        out.push_back(r);
    }
    return out;
}

json label_json(const KernelLabel& l, std::uint32_t k) {
    return {{"i", l.i}, {"j", l.j}, {"name", l.to_string(k)}};
}

}  // namespace

std::string series_to_csv(const ComplexitySeries& s) {
    std::ostringstream os;
    os << "n,value\n";
    for (std::size_t i = 0; i < s.values.size(); ++i) os << s.n_lo + i << ',' << s.values[i] << '\n';
    return os.str();
}

ComplexitySeries series_from_csv(const std::string& text, const std::string& word_id, const StatisticKind& kind) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.rfind("n,value", 0) != 0) throw std::invalid_argument("missing CSV header");
    ComplexitySeries s;
    s.word_id = word_id;
    s.kind = kind;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad CSV row: " + line);
        std::size_t n = std::stoull(line.substr(0, comma));
        std::int64_t v = std::stoll(line.substr(comma + 1));
        if (first) {
            s.n_lo = n;
            first = false;
        } else if (n != s.n_lo + s.values.size()) {
            throw std::invalid_argument("CSV rows are not consecutive");
        }
        s.values.push_back(v);
    }
    if (first) throw std::invalid_argument("empty CSV series");
    s.n_hi = s.n_lo + s.values.size() - 1;
    return s;
}

std::string series_to_json(const ComplexitySeries& s) {
    json j = {{"word", s.word_id},
              {"kind", s.kind.to_string()},
              {"range", {s.n_lo, s.n_hi}},
              {"values", s.values}};
    return j.dump(2);
}

ComplexitySeries series_from_json(const std::string& text) {
    json j = json::parse(text);
    ComplexitySeries s;
    s.word_id = j.at("word").get<std::string>();
    s.kind = StatisticKind::parse(j.at("kind").get<std::string>());
    s.n_lo = j.at("range").at(0).get<std::size_t>();
    s.n_hi = j.at("range").at(1).get<std::size_t>();
    s.values = j.at("values").get<std::vector<std::int64_t>>();
    if (s.values.size() != s.n_hi - s.n_lo + 1) throw std::invalid_argument("range does not match values");
    return s;
}

std::string series_to_text(const ComplexitySeries& s) {
    std::ostringstream os;
    os << (s.word_id.empty() ? "word" : s.word_id) << ' ' << s.kind.to_string() << " n=" << s.n_lo << ".." << s.n_hi
       << '\n';
    for (std::size_t i = 0; i < s.values.size(); ++i) os << (i ? ", " : "") << s.values[i];
    os << '\n';
    return os.str();
}

std::string relations_to_json(const RelationSet& r) {
    json basis = json::array();
    for (const auto& b : r.basis) basis.push_back(label_json(b, r.k));
    json rels = json::array();
    for (std::size_t b = 0; b < r.relations.size(); ++b) {
        for (std::uint32_t d = 0; d < r.k; ++d) {
            json coeffs = json::array();
            for (const auto& q : r.relations[b][d]) coeffs.push_back(rational(q));
            rels.push_back({{"from", b}, {"digit", d}, {"child", label_json(r.child(b, d), r.k)}, {"coefficients", coeffs}});
        }
    }
    json j = {{"series", r.label},        {"k", r.k},
              {"rank", r.rank()},         {"basis", basis},
              {"relations", rels},        {"initial_values", r.initial_values},
              {"truncation", r.truncation}, {"horizon", r.horizon}};
    return j.dump(2);
}

RelationSet relations_from_json(const std::string& text) {
    json j = json::parse(text);
    RelationSet r;
    r.label = j.at("series").get<std::string>();
    r.k = j.at("k").get<std::uint32_t>();
    for (const auto& b : j.at("basis")) r.basis.push_back({b.at("i").get<std::uint32_t>(), b.at("j").get<std::uint64_t>()});
    r.relations.assign(r.basis.size(), std::vector<std::vector<mpq_class>>(r.k));
    for (const auto& rel : j.at("relations")) {
        auto b = rel.at("from").get<std::size_t>();
        auto d = rel.at("digit").get<std::uint32_t>();
        if (b >= r.basis.size() || d >= r.k) throw std::invalid_argument("relation index out of range");
        for (const auto& q : rel.at("coefficients")) r.relations[b][d].push_back(rational(q));
    }
    r.initial_values = j.at("initial_values").get<std::vector<std::int64_t>>();
    r.truncation = j.at("truncation").get<std::size_t>();
    r.horizon = j.at("horizon").get<std::uint64_t>();
    return r;
}

std::string linear_representation_to_json(const LinearRepresentation& rep) {
    json row = json::array(), col = json::array(), mats = json::array();
    for (const auto& q : rep.row) row.push_back(rational(q));
    for (const auto& q : rep.column) col.push_back(rational(q));
    for (const auto& m : rep.digit_matrices) mats.push_back(matrix(m));
    json j = {{"k", rep.k}, {"dimension", rep.dimension}, {"row", row}, {"matrices", mats},
              {"column", col}, {"horizon", rep.horizon}};
    return j.dump(2);
}

std::string automatic_to_json(const AutomaticKernel& a, const std::string& label) {
    json states = json::array();
    for (const auto& s : a.states) states.push_back(label_json(s, a.k));
    json j = {{"series", label},          {"k", a.k},
              {"states", states},         {"transitions", a.transitions},
              {"initial", a.initial},     {"outputs", a.outputs},
              {"horizon", a.horizon}};
    return j.dump(2);
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    json out = json::array();
    for (const auto& r : reports) {
        json ce = json::array();
        for (const auto& c : r.counterexamples) ce.push_back({{"inputs", c.inputs}, {"expected", c.expected}, {"got", c.got}});
        out.push_back({{"claim", r.claim},
                       {"range", r.range},
                       {"outcome", r.passed() ? "pass" : "fail"},
                       {"empirical", r.empirical},
                       {"checks", r.checks},
                       {"failures", r.failures},
                       {"counterexamples", ce},
                       {"notes", r.notes}});
    }
    return out.dump(2);
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.passed() ? "pass" : "FAIL") << (r.empirical ? " (empirical)" : "") << "  " << r.claim << "\n"
           << "      range: " << r.range << ", " << r.checks << " checks, " << r.failures << " failures\n";
        for (const auto& c : r.counterexamples)
            os << "      counterexample: " << c.inputs << ": expected " << c.expected << ", got " << c.got << "\n";
        for (const auto& n : r.notes) os << "      note: " << n << "\n";
    }
    return os.str();
}

}  // namespace abelianlab::io
