#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hcov/covering.hpp"
#include "hcov/hypergraph.hpp"
#include "hcov/ramanujan.hpp"

namespace hcov {

enum class Side { Right, Left, Full };
enum class SearchMode { Exhaustive, Random };

struct SearchConfig {
    Side side = Side::Right;
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    bool reduce_switching = true;
    int jobs = 1;
};

// The witness is the lexicographically smallest free-sign pattern
// (order '-' < '+') passing the requested side. `explored` is the witness
// pattern index + 1 when found, otherwise the number of patterns scanned;
// `exhausted` is true iff the whole reduced space was scanned.
struct SearchResult {
    std::optional<std::pair<Signing, CoveringCertificate>> witness;
    std::uint64_t explored = 0;
    bool exhausted = false;
};

// Incidences outside a BFS spanning tree of B_H, in canonical order.
// Pinning the tree to +1 picks one representative per switching class.
std::vector<int> free_incidences(const Hypergraph& h);

SearchResult search_cover(const Hypergraph& h, const SearchConfig& cfg);

// mu_tau(B_H) >= |sqrt(d-1) - sqrt(r-1)|, the hypothesis under which a
// left-sided witness is guaranteed to exist.
struct LeftCondition {
    bool holds = false;
    double mu_tau = 0.0;
    double threshold = 0.0;
};
LeftCondition left_condition(const Hypergraph& h);

// Iterated 2-covers: each level searches the current hypergraph for a
// witness whose derived cover is connected and doubles into the next level.
struct TowerLevel {
    Hypergraph cover;
    Signing signing;  // on the previous level's hypergraph
    CoveringCertificate cert;
};
std::vector<TowerLevel> build_tower(const Hypergraph& h0, int levels, Side side);

// Cyclic-pivot lifts of AG(2,q) for q >= 5: per fold k the block-spectrum
// union is checked against the lift's incidence spectrum and the two lower
// bounds sqrt(q) - sqrt(q-1) and q - 2 - 2 sqrt(q(q-1)) are verified.
struct AbelianLevel {
    int k = 1;
    CoverResult lift;
    bool block_union_ok = false;
    double lambda_incidence = 0.0;  // lambda_{k q^2} of A(B of lift)
    double bound_incidence = 0.0;
    double lambda_adjacency = 0.0;  // lambda_{k q^2} of A(lift)
    double bound_adjacency = 0.0;
};
std::vector<AbelianLevel> abelian_tower(int q, const std::vector<int>& folds);

}  // namespace hcov
