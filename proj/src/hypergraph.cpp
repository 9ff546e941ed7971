#include "hcov/hypergraph.hpp"

#include <fstream>
#include <queue>
#include <sstream>

namespace hcov {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("hypergraph: negative vertex count");
    for (const auto& e : edges_) {
        if (e.size() < 2) throw std::invalid_argument("hypergraph: edge of size < 2");
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n)
                throw std::invalid_argument("hypergraph: vertex index out of range");
            if (i > 0 && e[i] <= e[i - 1])
                throw std::invalid_argument("hypergraph: non-ascending vertices in edge");
        }
    }
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& e : edges_)
        for (int v : e) deg[v]++;
    return deg;
}

int Hypergraph::incidence_count() const {
    int m = 0;
    for (const auto& e : edges_) m += static_cast<int>(e.size());
    return m;
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int stage = 0;  // 0: expect header, 1: expect n, 2: edges
    int n = 0;
    std::vector<std::vector<int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!significant(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (stage == 0) {
            int version = -1;
            if (tag != "hg" || !(ls >> version) || version != 1)
                throw ParseError(lineno, "malformed header (expected 'hg 1')");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "malformed header (trailing tokens)");
            stage = 1;
        } else if (stage == 1) {
            if (tag != "n" || !(ls >> n) || n < 0)
                throw ParseError(lineno, "malformed vertex count (expected 'n <count>')");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "malformed vertex count (trailing tokens)");
            stage = 2;
        } else {
            if (tag != "e") throw ParseError(lineno, "unknown directive '" + tag + "'");
            std::vector<int> e;
            int v;
            while (ls >> v) {
                if (v < 0 || v >= n) throw ParseError(lineno, "vertex index out of range");
                if (!e.empty() && v <= e.back()) throw ParseError(lineno, "non-ascending vertices");
                e.push_back(v);
            }
            if (!ls.eof()) throw ParseError(lineno, "malformed edge line");
            if (e.size() < 2) throw ParseError(lineno, "edge of size < 2");
            edges.push_back(std::move(e));
        }
    }
    if (stage == 0) throw ParseError(lineno, "malformed header (empty input)");
    if (stage == 1) throw ParseError(lineno, "missing vertex count");
    return Hypergraph(n, std::move(edges));
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_hypergraph(in);
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "hg 1\n";
    out << "n " << h.vertex_count() << "\n";
    for (const auto& e : h.edges()) {
        out << "e";
        for (int v : e) out << " " << v;
        out << "\n";
    }
    return out.str();
}

void save_hypergraph(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << serialize_hypergraph(h);
}

RegularityReport validate(const Hypergraph& h) {
    RegularityReport rep;
    rep.nu = h.vertex_count();
    rep.e = h.edge_count();
    rep.tau = std::min(rep.nu, rep.e);

    rep.is_uniform = true;
    rep.r = h.edge_count() > 0 ? static_cast<int>(h.edge(0).size()) : 0;
    for (const auto& e : h.edges())
        if (static_cast<int>(e.size()) != rep.r) {
            rep.is_uniform = false;
            rep.r = 0;
            break;
        }

    auto deg = h.degrees();
    rep.is_regular = true;
    rep.d = rep.nu > 0 ? deg[0] : 0;
    for (int dv : deg)
        if (dv != rep.d) {
            rep.is_regular = false;
            rep.d = 0;
            break;
        }

    // Walk connectivity equals connectivity of the incidence graph.
    int total = rep.nu + rep.e;
    if (total == 0) {
        rep.is_connected = true;
        return rep;
    }
    std::vector<std::vector<int>> adj(total);
    for (int j = 0; j < rep.e; ++j)
        for (int v : h.edge(j)) {
            adj[v].push_back(rep.nu + j);
            adj[rep.nu + j].push_back(v);
        }
    std::vector<char> seen(total, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                q.push(y);
            }
    }
    rep.is_connected = reached == total;
    return rep;
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
    IncidenceGraph b;
    b.left = h.vertex_count();
    b.right = h.edge_count();
    for (int j = 0; j < h.edge_count(); ++j)
        for (int v : h.edge(j)) b.adjacency.push_back({v, j});
    return b;
}

Hypergraph dual(const Hypergraph& h) {
    auto deg = h.degrees();
    for (int v = 0; v < h.vertex_count(); ++v)
        if (deg[v] < 2)
            throw std::invalid_argument("dual: vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(deg[v]) + " (< 2)");
    std::vector<std::vector<int>> dedges(h.vertex_count());
    for (int j = 0; j < h.edge_count(); ++j)
        for (int v : h.edge(j)) dedges[v].push_back(j);  // ascending in j
    return Hypergraph(h.edge_count(), std::move(dedges));
}

}  // namespace hcov
