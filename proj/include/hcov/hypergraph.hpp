#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcov {

// A hypergraph: n vertices indexed 0..n-1 and an ordered multiset of edges.
// Each edge is a strictly ascending list of at least two vertex indices.
// Duplicate edges are allowed and meaningful (derived covers and duals
// produce them); edge order is preserved exactly.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<std::vector<int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int i) const { return edges_[i]; }

    std::vector<int> degrees() const;
    int incidence_count() const;

    bool operator==(const Hypergraph&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
};

// One (vertex, edge) containment pair. Canonical incidence order is edges
// in file order, vertices ascending within each edge.
struct Incidence {
    int vertex;
    int edge;
    bool operator==(const Incidence&) const = default;
};

// Bipartite incidence graph B_H: left nodes are vertices, right nodes edges.
struct IncidenceGraph {
    int left = 0;
    int right = 0;
    std::vector<Incidence> adjacency;  // canonical order
};

struct RegularityReport {
    bool is_uniform = false;
    int r = 0;  // common edge size when uniform
    bool is_regular = false;
    int d = 0;  // common degree when regular
    bool is_connected = false;
    int nu = 0;
    int e = 0;
    int tau = 0;  // min(nu, e)
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

// `.hg` text format: "hg 1" header, "n <count>", one "e v1 ... vr" line per
// edge. '#' starts a comment line; blank lines are ignored.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph load_hypergraph(const std::string& path);
std::string serialize_hypergraph(const Hypergraph& h);
void save_hypergraph(const Hypergraph& h, const std::string& path);

RegularityReport validate(const Hypergraph& h);
IncidenceGraph incidence_graph(const Hypergraph& h);

// Dual hypergraph: vertices are the edges of h, edge j of the dual collects
// the edges containing vertex j of h. Requires every vertex degree >= 2.
Hypergraph dual(const Hypergraph& h);

}  // namespace hcov
