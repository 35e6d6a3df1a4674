#include "hrl/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hrl {

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long parse_long(const std::string& tok, int line) {
    size_t pos = 0;
    long v;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw parse_error(line, "expected integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw parse_error(line, "trailing junk in '" + tok + "'");
    return v;
}

struct EdgeListHeader {
    int n;
    int k;
};

// Returns header and fills rows with (line_number, ids) for each edge line.
EdgeListHeader parse_edge_lines(const std::string& text,
                                std::vector<std::pair<int, std::vector<int>>>& rows) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    EdgeListHeader hdr{0, 0};
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty()) continue;
        std::istringstream ls(s);
        if (!have_header) {
            std::string a, b;
            ls >> a >> b;
            std::string extra;
            if (ls >> extra) throw parse_error(lineno, "junk after header");
            if (a.rfind("n=", 0) != 0 || b.rfind("k=", 0) != 0)
                throw parse_error(lineno, "expected header 'n=<int> k=<2|3>'");
            hdr.n = static_cast<int>(parse_long(a.substr(2), lineno));
            hdr.k = static_cast<int>(parse_long(b.substr(2), lineno));
            if (hdr.n < 0) throw parse_error(lineno, "negative n");
            if (hdr.k != 2 && hdr.k != 3) throw parse_error(lineno, "k must be 2 or 3");
            have_header = true;
            continue;
        }
        std::vector<int> ids;
        std::string tok;
        while (ls >> tok) ids.push_back(static_cast<int>(parse_long(tok, lineno)));
        if (static_cast<int>(ids.size()) != hdr.k)
            throw parse_error(lineno, "expected " + std::to_string(hdr.k) +
                                          " vertex ids, got " +
                                          std::to_string(ids.size()));
        for (int v : ids)
            if (v < 0 || v >= hdr.n)
                throw parse_error(lineno, "vertex " + std::to_string(v) +
                                              " outside [0," + std::to_string(hdr.n) + ")");
        rows.push_back({lineno, std::move(ids)});
    }
    if (!have_header) throw parse_error(lineno ? lineno : 1, "missing header line");
    return hdr;
}

}  // namespace

Hypergraph3 parse_hypergraph3(const std::string& text) {
    std::vector<std::pair<int, std::vector<int>>> rows;
    EdgeListHeader hdr = parse_edge_lines(text, rows);
    if (hdr.k != 3) throw parse_error(1, "expected k=3 edge list");
    std::vector<Triple> edges;
    edges.reserve(rows.size());
    std::set<Triple> seen;
    for (const auto& [ln, ids] : rows) {
        if (ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2])
            throw parse_error(ln, "repeated vertex in edge");
        Triple t = make_triple(ids[0], ids[1], ids[2]);
        // report the repeated occurrence, not the original
        if (!seen.insert(t).second) throw parse_error(ln, "duplicate edge");
        edges.push_back(t);
    }
    return Hypergraph3(hdr.n, std::move(edges));
}

Graph2 parse_graph2(const std::string& text) {
    std::vector<std::pair<int, std::vector<int>>> rows;
    EdgeListHeader hdr = parse_edge_lines(text, rows);
    if (hdr.k != 2) throw parse_error(1, "expected k=2 edge list");
    std::vector<VPair> edges;
    edges.reserve(rows.size());
    std::set<VPair> seen;
    for (const auto& [ln, ids] : rows) {
        if (ids[0] == ids[1]) throw parse_error(ln, "repeated vertex in edge");
        VPair e = make_pair(ids[0], ids[1]);
        if (!seen.insert(e).second) throw parse_error(ln, "duplicate edge");
        edges.push_back(e);
    }
    return Graph2(hdr.n, std::move(edges));
}

std::string serialize(const Hypergraph3& h) {
    std::ostringstream out;
    out << "n=" << h.n() << " k=3\n";
    for (const auto& t : h.edges()) out << t[0] << " " << t[1] << " " << t[2] << "\n";
    return out.str();
}

std::string serialize(const Graph2& g) {
    std::ostringstream out;
    out << "n=" << g.n() << " k=2\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

VertexPartition parse_partition(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::vector<int>> parts;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty()) continue;
        std::istringstream ls(s);
        std::string kw;
        ls >> kw;
        if (kw != "part") throw parse_error(lineno, "expected 'part <id>: ...'");
        std::string idtok;
        ls >> idtok;
        if (idtok.empty() || idtok.back() != ':')
            throw parse_error(lineno, "expected 'part <id>:'");
        long id = parse_long(idtok.substr(0, idtok.size() - 1), lineno);
        if (id != static_cast<long>(parts.size()))
            throw parse_error(lineno, "part ids must be consecutive from 0");
        std::vector<int> vs;
        std::string tok;
        while (ls >> tok) vs.push_back(static_cast<int>(parse_long(tok, lineno)));
        if (vs.empty()) throw parse_error(lineno, "empty part");
        parts.push_back(std::move(vs));
    }
    if (parts.empty()) throw parse_error(1, "no parts");
    try {
        return VertexPartition(n, std::move(parts));
    } catch (const std::exception& e) {
        throw parse_error(lineno, e.what());
    }
}

std::string serialize(const VertexPartition& p) {
    std::ostringstream out;
    for (int i = 0; i < p.t(); ++i) {
        out << "part " << i << ":";
        for (int v : p.parts[i]) out << " " << v;
        out << "\n";
    }
    return out.str();
}

std::map<std::string, std::string> parse_config(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::map<std::string, std::string> out;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty()) continue;
        auto eq = s.find('=');
        if (eq == std::string::npos) throw parse_error(lineno, "expected key = value");
        std::string key = strip(s.substr(0, eq));
        std::string val = strip(s.substr(eq + 1));
        if (key.empty()) throw parse_error(lineno, "empty key");
        out[key] = val;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

Hypergraph3 load_hypergraph3(const std::string& path) {
    return parse_hypergraph3(read_file(path));
}
Graph2 load_graph2(const std::string& path) { return parse_graph2(read_file(path)); }
VertexPartition load_partition(const std::string& path, int n) {
    return parse_partition(read_file(path), n);
}
std::map<std::string, std::string> load_config(const std::string& path) {
    return parse_config(read_file(path));
}

}  // namespace hrl
