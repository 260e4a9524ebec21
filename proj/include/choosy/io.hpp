#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "choosy/graph.hpp"
#include "choosy/reductions/artifact.hpp"
#include "choosy/reductions/formula.hpp"

namespace choosy {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

inline long long parse_integer(const std::string& word, int line) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(word, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, found '" + word + "'");
    }
    if (used != word.size()) throw ParseError(line, "expected an integer, found '" + word + "'");
    return value;
}

}  // namespace detail

/// Edge-list format: "p edge <n> <m>" followed by m lines "e <u> <v>" (1-based). Lines
/// starting with 'c' and blank lines are ignored.
inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        const auto words = detail::split_words(line);
        if (words.empty() || words[0] == "c") continue;
        if (words[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            if (words.size() != 4 || words[1] != "edge") throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            const long long nn = detail::parse_integer(words[2], line_no);
            m = detail::parse_integer(words[3], line_no);
            if (nn < 0 || m < 0 || nn > 10'000'000) throw ParseError(line_no, "malformed header counts");
            n = static_cast<int>(nn);
            seen.assign(static_cast<std::size_t>(n), {});
            have_header = true;
            continue;
        }
        if (words[0] != "e") throw ParseError(line_no, "unexpected line '" + line + "'");
        if (!have_header) throw ParseError(line_no, "edge before header");
        if (words.size() != 3) throw ParseError(line_no, "edge line must be 'e <u> <v>'");
        const long long u = detail::parse_integer(words[1], line_no);
        const long long v = detail::parse_integer(words[2], line_no);
        if (u < 1 || v < 1 || u > n || v > n) throw ParseError(line_no, "vertex out of range");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        auto a = static_cast<Vertex>(std::min(u, v) - 1), b = static_cast<Vertex>(std::max(u, v) - 1);
        auto& list = seen[a];
        if (std::find(list.begin(), list.end(), b) != list.end())
            throw ParseError(line_no, "duplicate edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
        list.push_back(b);
        edges.emplace_back(a, b);
    }
    if (!have_header) throw ParseError(line_no, "missing 'p edge' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(n, edges);
}

inline std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

/// DIMACS CNF restricted to clauses of exactly three literals, one clause per line. The
/// comment "c rot <j> <a> <b> <c>" gives the 1-based slots of clause j attached to c_{j1..3}.
inline CnfFormula parse_dimacs_cnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long declared_clauses = 0;
    CnfFormula phi;
    std::vector<std::pair<int, std::array<int, 3>>> rotations;
    int last_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto words = detail::split_words(line);
        if (words.empty()) continue;
        if (words[0] == "c") {
            if (words.size() >= 2 && words[1] == "rot") {
                if (words.size() != 6) throw ParseError(line_no, "rotation must be 'c rot <j> <a> <b> <c>'");
                const long long j = detail::parse_integer(words[2], line_no);
                std::array<int, 3> perm{};
                std::array<int, 3> hits{0, 0, 0};
                for (int r = 0; r < 3; ++r) {
                    const long long s = detail::parse_integer(words[3 + r], line_no);
                    if (s < 1 || s > 3 || hits[s - 1]++) throw ParseError(line_no, "rotation is not a permutation of 1 2 3");
                    perm[r] = static_cast<int>(s) - 1;
                }
                if (j < 1) throw ParseError(line_no, "rotation clause index out of range");
                rotations.emplace_back(static_cast<int>(j) - 1, perm);
                last_line = line_no;
            }
            continue;
        }
        if (words[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            if (words.size() != 4 || words[1] != "cnf") throw ParseError(line_no, "malformed header, expected 'p cnf <n> <k>'");
            const long long n = detail::parse_integer(words[2], line_no);
            declared_clauses = detail::parse_integer(words[3], line_no);
            if (n < 1 || n > 1'000'000 || declared_clauses < 0) throw ParseError(line_no, "malformed header counts");
            phi.num_vars = static_cast<int>(n);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "clause before header");
        std::vector<long long> lits;
        for (const auto& w : words) lits.push_back(detail::parse_integer(w, line_no));
        if (lits.back() != 0) throw ParseError(line_no, "clause is not terminated by 0");
        lits.pop_back();
        for (long long l : lits) {
            if (l == 0) throw ParseError(line_no, "zero literal inside clause");
            if (std::llabs(l) > phi.num_vars) throw ParseError(line_no, "literal " + std::to_string(l) + " out of range");
        }
        if (lits.size() != 3) throw ParseError(line_no, "clause has " + std::to_string(lits.size()) + " literals, expected 3");
        std::array<int, 3> clause{static_cast<int>(lits[0]), static_cast<int>(lits[1]), static_cast<int>(lits[2])};
        for (int r = 0; r < 3; ++r)
            for (int q = 0; q < r; ++q)
                if (clause[q] == clause[r]) throw ParseError(line_no, "duplicate literal " + std::to_string(clause[r]));
        phi.clauses.push_back(clause);
        last_line = line_no;
    }
    if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
    if (phi.num_clauses() != declared_clauses)
        throw ParseError(line_no, "header announces " + std::to_string(declared_clauses) + " clauses, found " +
                                      std::to_string(phi.num_clauses()));
    if (!rotations.empty()) {
        phi.rotation.assign(phi.clauses.size(), {0, 1, 2});
        std::vector<char> given(phi.clauses.size(), 0);
        for (const auto& [j, perm] : rotations) {
            if (j >= phi.num_clauses()) throw ParseError(last_line, "rotation names clause " + std::to_string(j + 1) + " which does not exist");
            if (given[j]++) throw ParseError(last_line, "rotation for clause " + std::to_string(j + 1) + " given twice");
            phi.rotation[j] = perm;
        }
    }
    return phi;
}

inline std::string write_dimacs_cnf(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << ' ' << phi.num_clauses() << '\n';
    for (std::size_t j = 0; j < phi.rotation.size(); ++j) {
        const auto& r = phi.rotation[j];
        out << "c rot " << j + 1 << ' ' << r[0] + 1 << ' ' << r[1] + 1 << ' ' << r[2] + 1 << '\n';
    }
    for (const auto& c : phi.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
    return out.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

inline std::string sha256_hex(const std::string& data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream out;
    out << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < length; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
    return out.str();
}

// ---- role sidecar -------------------------------------------------------------------

inline json formula_to_json(const CnfFormula& phi) {
    json j;
    j["num_vars"] = phi.num_vars;
    j["clauses"] = phi.clauses;
    if (!phi.rotation.empty()) j["rotation"] = phi.rotation;
    return j;
}

inline CnfFormula formula_from_json(const json& j) {
    CnfFormula phi;
    phi.num_vars = j.at("num_vars").get<int>();
    phi.clauses = j.at("clauses").get<std::vector<std::array<int, 3>>>();
    if (j.contains("rotation")) phi.rotation = j.at("rotation").get<std::vector<std::array<int, 3>>>();
    phi.validate();
    return phi;
}

inline json role_to_json(const Role& r) {
    json j;
    j["kind"] = to_string(r.kind);
    if (r.gadget >= 0) j["gadget"] = r.gadget;
    if (r.row >= 0) j["row"] = r.row;
    if (r.column >= 0) j["column"] = r.column;
    if (r.index >= 0) j["index"] = r.index;
    if (!r.label.empty()) j["label"] = r.label;
    if (!r.tag.empty()) j["tag"] = r.tag;
    return j;
}

inline Role role_from_json(const json& j) {
    Role r;
    const auto kind = role_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown role kind " + j.at("kind").dump());
    r.kind = *kind;
    r.gadget = j.value("gadget", -1);
    r.row = j.value("row", -1);
    r.column = j.value("column", -1);
    r.index = j.value("index", -1);
    r.label = j.value("label", std::string());
    r.tag = j.value("tag", std::string());
    return r;
}

/// Sidecar schema: {"kind", "p"?, "formula"?, "vertices", "roles": {"<1-based id>": role}}.
inline json artifact_sidecar(const ReductionArtifact& art) {
    json j;
    j["kind"] = art.kind;
    j["vertices"] = art.graph.order();
    if (art.p > 0) j["p"] = art.p;
    if (art.formula) j["formula"] = formula_to_json(*art.formula);
    json roles = json::object();
    for (std::size_t v = 0; v < art.roles.size(); ++v) roles[std::to_string(v + 1)] = role_to_json(art.roles[v]);
    j["roles"] = std::move(roles);
    return j;
}

struct Sidecar {
    std::string kind;
    int p = 0;
    int vertices = 0;
    std::optional<CnfFormula> formula;
    std::vector<Role> roles;
};

inline Sidecar parse_sidecar(const json& j) {
    Sidecar s;
    s.kind = j.at("kind").get<std::string>();
    s.p = j.value("p", 0);
    s.vertices = j.at("vertices").get<int>();
    if (j.contains("formula")) s.formula = formula_from_json(j.at("formula"));
    s.roles.assign(static_cast<std::size_t>(s.vertices), Role{});
    for (const auto& [key, value] : j.at("roles").items()) {
        const long long id = std::stoll(key);
        if (id < 1 || id > s.vertices) throw std::invalid_argument("role for vertex " + key + " out of range");
        s.roles[static_cast<std::size_t>(id - 1)] = role_from_json(value);
    }
    return s;
}

// ---- reports ------------------------------------------------------------------------

struct Report {
    std::string command;
    std::string input_digest;
    json verdicts = json::object();
    json witnesses = json::object();
    std::uint64_t search_nodes = 0;
    std::int64_t runtime_us = 0;
    std::string version = kVersion;

    friend bool operator==(const Report&, const Report&) = default;
};

inline json report_to_json(const Report& r) {
    json j;
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    j["verdicts"] = r.verdicts;
    j["witnesses"] = r.witnesses;
    j["counters"] = {{"search_nodes", r.search_nodes}, {"runtime_us", r.runtime_us}};
    j["version"] = r.version;
    return j;
}

inline Report report_from_json(const json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input_digest = j.at("input_digest").get<std::string>();
    r.verdicts = j.at("verdicts");
    r.witnesses = j.at("witnesses");
    r.search_nodes = j.at("counters").at("search_nodes").get<std::uint64_t>();
    r.runtime_us = j.at("counters").at("runtime_us").get<std::int64_t>();
    r.version = j.at("version").get<std::string>();
    return r;
}

/// Keys are sorted, so equal reports serialize to identical bytes.
inline std::string serialize_report(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

}  // namespace choosy
