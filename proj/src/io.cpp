#include "semistrong/io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace semistrong {

namespace {

bool significant(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(ch))) return true;
    }
    return false;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

std::int64_t parse_int(const std::string& tok, int line_no, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw FormatError("line " + std::to_string(line_no) + ": expected " + what +
                          ", got '" + tok + "'");
    return value;
}

// "key=value" with an integer value.
std::int64_t parse_kv(const std::string& tok, const std::string& key, int line_no) {
    if (tok.rfind(key + "=", 0) != 0)
        throw FormatError("line " + std::to_string(line_no) + ": expected '" + key +
                          "=<int>', got '" + tok + "'");
    return parse_int(tok.substr(key.size() + 1), line_no, "an integer");
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::vector<int>> edges;
    bool implicit_seen = false;
    ImplicitCompleteUniform implicit(1, 1);

    while (std::getline(in, line)) {
        ++line_no;
        if (!significant(line)) continue;
        const auto toks = tokens_of(line);

        if (implicit_seen)
            throw FormatError("line " + std::to_string(line_no) +
                              ": trailing content after complete-uniform header");

        if (n < 0 && edges.empty() && toks[0] == "complete-uniform") {
            if (toks.size() != 3)
                throw FormatError("line " + std::to_string(line_no) +
                                  ": expected 'complete-uniform n=<n> k=<k>'");
            const std::int64_t un = parse_kv(toks[1], "n", line_no);
            const std::int64_t uk = parse_kv(toks[2], "k", line_no);
            try {
                implicit = ImplicitCompleteUniform(un, uk);
            } catch (const std::invalid_argument& e) {
                throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
            }
            implicit_seen = true;
            continue;
        }

        if (n < 0) {
            if (toks[0] != "n" || toks.size() != 2)
                throw FormatError("line " + std::to_string(line_no) +
                                  ": expected header 'n <count>'");
            const std::int64_t count = parse_int(toks[1], line_no, "a vertex count");
            if (count < 1 || count > 100'000'000)
                throw FormatError("line " + std::to_string(line_no) +
                                  ": vertex count out of range");
            n = static_cast<int>(count);
            continue;
        }

        std::vector<int> edge;
        edge.reserve(toks.size());
        for (const auto& t : toks) {
            const std::int64_t v = parse_int(t, line_no, "a vertex id");
            if (v < 1 || v > n)
                throw FormatError("line " + std::to_string(line_no) + ": vertex id " +
                                  std::to_string(v) + " outside [1.." + std::to_string(n) + "]");
            edge.push_back(static_cast<int>(v));
        }
        edges.push_back(std::move(edge));
    }

    if (implicit_seen) return implicit;
    if (n < 0) throw FormatError("empty input: expected 'n <count>' or a complete-uniform header");
    try {
        return Hypergraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Hypergraph parse_hypergraph(std::istream& in) {
    Instance inst = parse_instance(in);
    if (auto* g = std::get_if<Hypergraph>(&inst)) return std::move(*g);
    throw FormatError("expected an explicit hypergraph, got a complete-uniform header");
}

Coloring parse_coloring(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::vector<int> colors;
    bool seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!significant(line)) continue;
        if (seen)
            throw FormatError("line " + std::to_string(line_no) +
                              ": coloring must be a single line");
        for (const auto& t : tokens_of(line)) {
            const std::int64_t c = parse_int(t, line_no, "a color id");
            if (c < 1 || c > std::numeric_limits<int>::max())
                throw FormatError("line " + std::to_string(line_no) + ": color id " +
                                  std::to_string(c) + " must be a positive integer");
            colors.push_back(static_cast<int>(c));
        }
        seen = true;
    }
    if (!seen) throw FormatError("empty input: expected one line of color ids");
    return Coloring(std::move(colors));
}

void write_hypergraph(std::ostream& out, const Hypergraph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
}

void write_implicit(std::ostream& out, const ImplicitCompleteUniform& g) {
    out << "complete-uniform n=" << g.n << " k=" << g.k << '\n';
}

void write_instance(std::ostream& out, const Instance& inst) {
    if (const auto* g = std::get_if<Hypergraph>(&inst)) write_hypergraph(out, *g);
    else write_implicit(out, std::get<ImplicitCompleteUniform>(inst));
}

void write_coloring(std::ostream& out, const Coloring& col) {
    const auto& cs = col.colors();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i > 0) out << ' ';
        out << cs[i];
    }
    out << '\n';
}

}  // namespace semistrong
