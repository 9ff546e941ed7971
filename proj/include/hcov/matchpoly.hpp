#pragma once

#include <vector>

#include "hcov/hypergraph.hpp"
#include "hcov/intpoly.hpp"

namespace hcov {

// Simple graph: no loops, no duplicate edges. Pairs are stored with the
// smaller endpoint first, in insertion order.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);
    static Graph from_incidence(const IncidenceGraph& b);
};

// Matching counts m_0 = 1, m_1, ..., m_{floor(n/2)}; the matching polynomial
// is mu(x) = sum_i (-1)^i m_i x^{n-2i}.
struct MatchingPolynomial {
    int n = 0;
    std::vector<BigInt> match_counts;
    IntPoly to_poly() const;
};

struct RootItem {
    double value;
    int multiplicity;
};

struct RootList {
    int n = 0;
    std::vector<RootItem> roots;  // descending
    std::vector<double> expanded() const;
};

// Exact matching counts by the vertex recursion
//   mu_G = x mu_{G-u} - sum_{v ~ u} mu_{G-u-v}
// memoized on induced-subgraph bitmasks with component splitting. n <= 40.
MatchingPolynomial matching_polynomial(const Graph& g);

// All n real roots via Sturm isolation on the square-free part; errors if
// the polynomial fails to be real-rooted (which would signal a bug).
RootList matching_roots(const MatchingPolynomial& p);

// tau_H-th largest root of mu_{B_H}, tau_H = min(nu, e); requires H
// (d,r)-regular.
double mu_tau(const Hypergraph& h);

// Maximum matching by augmenting paths; requires G bipartite.
int max_matching_size(const Graph& g);

// Exact identity sum_s psi_s(x) = 2^m mu_G(x) over all edge signings.
// Enumeration budget m <= 20.
bool verify_godsil_gutman(const Graph& g);

// Exact identity x^nu 2^m mu_{B_H}(x) = x^e sum_s psi_{Q(H,phi_s)}(x^2)
// over all incidence signings. Budget: incidence count <= 20.
bool verify_expected_laplacian(const Hypergraph& h);

using EdgeSigning = std::vector<int>;  // +-1 per graph edge

// Exhaustively finds signings witnessing both directions of the
// interlacing bound: one whose l-th largest eigenvalue is at most the l-th
// largest matching root, and one with at least. Budget |E| <= 16.
struct SigningRootWitness {
    EdgeSigning below;
    EdgeSigning above;
    double root;
    int ell;
};
SigningRootWitness verify_signing_root_bound(const Graph& g, int ell);

}  // namespace hcov
