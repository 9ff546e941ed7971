#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hcov/hypergraph.hpp"
#include "hcov/spectra.hpp"

namespace hcov {

// Permutation voltage assignment on the incidence graph: one permutation of
// {0..k-1} per incidence in canonical order. The stored permutation is the
// edge-to-vertex voltage phi(e,u); the reverse arc carries its inverse.
struct VoltageAssignment {
    int k = 2;
    std::vector<std::vector<int>> perms;  // perms[i][j] = phi(e,u)(j)
};

// k = 2 specialization: +1 for the identity, -1 for the transposition.
struct Signing {
    std::vector<int> signs;  // one of {+1, -1} per incidence
};

// A derived cover together with the fiber bookkeeping: cover vertex (u, i)
// has index u + i*nu, cover edge (e, j) has index e + j*e(H).
struct CoverResult {
    Hypergraph cover;
    std::vector<std::pair<int, int>> edge_labels;  // cover edge -> (base edge, sheet)
    int k = 1;
};

void check_voltage(const Hypergraph& h, const VoltageAssignment& phi);
void check_signing(const Hypergraph& h, const Signing& s);

VoltageAssignment signing_to_voltage(const Signing& s);
Signing voltage_to_signing(const VoltageAssignment& phi);  // requires k == 2

// Derived k-cover: edge (e, j) = { (u, phi(e,u)(j)) : u in e }.
CoverResult derived_cover(const Hypergraph& h, const VoltageAssignment& phi);

// A(H,phi)_{uv} = sum over edges containing both of s(u,e) s(v,e).
SymMatrix signed_adjacency(const Hypergraph& h, const Signing& s);

// Z(H,phi): rows vertices, columns edges, entries the incidence signs.
std::vector<double> signed_incidence(const Hypergraph& h, const Signing& s);

// Q(H,phi) = Z Z^T = D + A(H,phi); both routes are computed and compared.
SymMatrix signed_laplacian(const Hypergraph& h, const Signing& s);

// Spec A(cover) contains Spec A(H) (any k); equals the union with
// Spec A(H,phi) for k = 2. Tolerance 1e-7, greedy multiset matching.
bool verify_spectral_inclusion(const Hypergraph& h, const VoltageAssignment& phi);
bool verify_spectral_union(const Hypergraph& h, const Signing& s);

// Cyclic pivot lift: the k-cycle on one incidence, identity elsewhere,
// plus the k Hermitian blocks A_{x_j} (A(B_H) with the pivot entry replaced
// by e^{2 pi i j / k}) whose spectra union to Spec A(B of the lift).
struct AbelianLift {
    CoverResult cover;
    std::vector<HermMatrix> blocks;
};
AbelianLift abelian_cyclic_lift(const Hypergraph& h, int k, int pivot);

// switching: flip all incidence signs at one vertex / within one edge
Signing switched_at_vertex(const Hypergraph& h, Signing s, int u);
Signing switched_in_edge(const Hypergraph& h, Signing s, int e);

Signing random_signing(const Hypergraph& h, std::uint64_t seed);
VoltageAssignment random_voltage(const Hypergraph& h, int k, std::uint64_t seed);

// `.sg` and `.vt` text formats
Signing parse_signing(const std::string& text);
std::string serialize_signing(const Signing& s);
Signing load_signing(const std::string& path);
void save_signing(const Signing& s, const std::string& path);
VoltageAssignment parse_voltage(const std::string& text);
std::string serialize_voltage(const VoltageAssignment& phi);
VoltageAssignment load_voltage(const std::string& path);
void save_voltage(const VoltageAssignment& phi, const std::string& path);

}  // namespace hcov
