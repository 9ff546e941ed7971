#include "hcov/matchpoly.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "hcov/spectra.hpp"

namespace hcov {

Graph::Graph(int n_, std::vector<std::pair<int, int>> edges_) : n(n_), edges(std::move(edges_)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    std::vector<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: loop edge");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("graph: vertex index out of range");
    }
    seen = edges;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("graph: duplicate edge");
}

Graph Graph::from_incidence(const IncidenceGraph& b) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(b.adjacency.size());
    for (const auto& inc : b.adjacency) edges.emplace_back(inc.vertex, b.left + inc.edge);
    return Graph(b.left + b.right, std::move(edges));
}

IntPoly MatchingPolynomial::to_poly() const {
    std::vector<BigInt> c(n + 1, BigInt(0));
    for (size_t i = 0; i < match_counts.size(); ++i) {
        int pw = n - 2 * static_cast<int>(i);
        if (pw < 0) break;
        c[pw] = (i % 2 == 0) ? match_counts[i] : -match_counts[i];
    }
    return IntPoly(std::move(c));
}

std::vector<double> RootList::expanded() const {
    std::vector<double> out;
    out.reserve(n);
    for (const auto& r : roots)
        for (int i = 0; i < r.multiplicity; ++i) out.push_back(r.value);
    return out;
}

namespace {

using Mask = std::uint64_t;
using Counts = std::vector<BigInt>;  // counts[i] = number of i-matchings

Counts convolve(const Counts& a, const Counts& b) {
    Counts r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

struct MatchCounter {
    const std::vector<Mask>& adj;
    std::unordered_map<Mask, Counts> memo;

    Counts count(Mask mask) {
        if (mask == 0) return Counts{BigInt(1)};
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;

        // split off the component of the lowest vertex
        int start = __builtin_ctzll(mask);
        Mask comp = 0, frontier = Mask(1) << start;
        while (frontier) {
            comp |= frontier;
            Mask next = 0;
            Mask f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= adj[v] & mask;
            }
            frontier = next & ~comp;
        }

        Counts result;
        if (comp != mask) {
            result = convolve(component(comp), count(mask & ~comp));
        } else {
            result = component(mask);
        }
        memo.emplace(mask, result);
        return result;
    }

    // mask is a single connected component here
    Counts component(Mask mask) {
        if ((mask & (mask - 1)) == 0) return Counts{BigInt(1)};  // single vertex
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;

        // pivot on the highest-degree vertex inside (lowest index on ties)
        int pivot = -1, best = -1;
        Mask f = mask;
        while (f) {
            int v = __builtin_ctzll(f);
            f &= f - 1;
            int deg = __builtin_popcountll(adj[v] & mask);
            if (deg > best) {
                best = deg;
                pivot = v;
            }
        }

        Counts res = count(mask & ~(Mask(1) << pivot));  // pivot unmatched
        Mask nbrs = adj[pivot] & mask;
        while (nbrs) {
            int v = __builtin_ctzll(nbrs);
            nbrs &= nbrs - 1;
            Counts sub = count(mask & ~(Mask(1) << pivot) & ~(Mask(1) << v));
            if (res.size() < sub.size() + 1) res.resize(sub.size() + 1, BigInt(0));
            for (size_t i = 0; i < sub.size(); ++i) res[i + 1] += sub[i];
        }
        memo.emplace(mask, res);
        return res;
    }
};

}  // namespace

MatchingPolynomial matching_polynomial(const Graph& g) {
    if (g.n > 40) throw std::invalid_argument("matching_polynomial: size budget exceeded (n > 40)");
    std::vector<Mask> adj(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        adj[u] |= Mask(1) << v;
        adj[v] |= Mask(1) << u;
    }
    MatchCounter mc{adj, {}};
    Mask full = g.n == 64 ? ~Mask(0) : (Mask(1) << g.n) - 1;
    Counts counts = mc.count(full);
    counts.resize(g.n / 2 + 1, BigInt(0));

    MatchingPolynomial p;
    p.n = g.n;
    p.match_counts = std::move(counts);
    return p;
}

RootList matching_roots(const MatchingPolynomial& p) {
    RootList out;
    out.n = p.n;
    if (p.n == 0) return out;
    IntPoly mu = p.to_poly();
    auto roots = real_roots(mu);
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    if (total != p.n)
        throw std::runtime_error("matching_roots: polynomial is not real-rooted (bug)");
    double coeff_scale = 0.0;
    for (const auto& c : mu.coeffs()) coeff_scale = std::max(coeff_scale, std::abs(c.get_d()));
    for (const auto& r : roots) {
        double bound = 0.0, xp = 1.0;
        for (const auto& c : mu.coeffs()) {
            bound += std::abs(c.get_d()) * xp;
            xp *= std::max(1.0, std::abs(r.value));
        }
        if (std::abs(mu.eval_double(r.value)) > 1e-9 * std::max(1.0, bound))
            throw std::runtime_error("matching_roots: residual above tolerance (bug)");
        out.roots.push_back({r.value, r.multiplicity});
    }
    return out;
}

double mu_tau(const Hypergraph& h) {
    auto rep = validate(h);
    if (!rep.is_uniform || !rep.is_regular)
        throw std::invalid_argument("mu_tau: hypergraph must be (d,r)-regular");
    auto roots = matching_roots(matching_polynomial(Graph::from_incidence(incidence_graph(h))));
    auto vals = roots.expanded();
    return vals[rep.tau - 1];
}

namespace {

// 2-coloring; throws on odd cycles
std::vector<int> bipartition(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x]) {
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    q.push(y);
                } else if (color[y] == color[x]) {
                    throw std::invalid_argument("max_matching_size: graph is not bipartite");
                }
            }
        }
    }
    return color;
}

}  // namespace

int max_matching_size(const Graph& g) {
    auto color = bipartition(g);
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [u, v] : g.edges) {
        int a = color[u] == 0 ? u : v;
        int b = color[u] == 0 ? v : u;
        adj[a].push_back(b);
    }
    std::vector<int> match(g.n, -1);
    std::vector<char> used(g.n, 0);

    auto augment = [&](auto&& self, int u) -> bool {
        for (int v : adj[u]) {
            if (used[v]) continue;
            used[v] = 1;
            if (match[v] == -1 || self(self, match[v])) {
                match[v] = u;
                match[u] = v;
                return true;
            }
        }
        return false;
    };

    int size = 0;
    for (int u = 0; u < g.n; ++u) {
        if (color[u] != 0 || match[u] != -1) continue;
        std::fill(used.begin(), used.end(), 0);
        if (augment(augment, u)) ++size;
    }
    return size;
}

namespace {

SymMatrix graph_signed_adjacency(const Graph& g, std::uint32_t bits) {
    SymMatrix a(g.n);
    for (size_t t = 0; t < g.edges.size(); ++t) {
        double sv = (bits >> t) & 1 ? 1.0 : -1.0;
        a.set(g.edges[t].first, g.edges[t].second, sv);
    }
    return a;
}

}  // namespace

bool verify_godsil_gutman(const Graph& g) {
    int m = static_cast<int>(g.edges.size());
    if (m > 20) throw std::invalid_argument("verify_godsil_gutman: budget exceeded (m > 20)");
    IntPoly sum;
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits)
        sum = sum + char_poly(graph_signed_adjacency(g, bits));
    IntPoly expect = matching_polynomial(g).to_poly() * (BigInt(1) << m);
    return sum == expect;
}

bool verify_expected_laplacian(const Hypergraph& h) {
    int m = h.incidence_count();
    if (m > 20)
        throw std::invalid_argument("verify_expected_laplacian: budget exceeded (incidences > 20)");
    int nu = h.vertex_count(), e = h.edge_count();
    auto deg = h.degrees();

    IntPoly sum;
    Signing s;
    s.signs.resize(m);
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        for (int i = 0; i < m; ++i) s.signs[i] = (bits >> i) & 1 ? 1 : -1;
        SymMatrix q = signed_adjacency(h, s);
        for (int v = 0; v < nu; ++v) q.add(v, v, static_cast<double>(deg[v]));
        sum = sum + char_poly(q);
    }

    IntPoly mu = matching_polynomial(Graph::from_incidence(incidence_graph(h))).to_poly();
    IntPoly lhs = (mu * (BigInt(1) << m)).times_power(nu);
    IntPoly rhs = sum.compose_square().times_power(e);
    return lhs == rhs;
}

SigningRootWitness verify_signing_root_bound(const Graph& g, int ell) {
    int m = static_cast<int>(g.edges.size());
    if (m > 16)
        throw std::invalid_argument("verify_signing_root_bound: budget exceeded (m > 16)");
    if (ell < 1 || ell > g.n) throw std::invalid_argument("verify_signing_root_bound: bad index");

    double target = matching_roots(matching_polynomial(g)).expanded()[ell - 1];

    SigningRootWitness w;
    w.root = target;
    w.ell = ell;
    bool have_below = false, have_above = false;
    for (std::uint32_t bits = 0; bits < (1u << m) && !(have_below && have_above); ++bits) {
        auto eigs = sym_eigenvalues(graph_signed_adjacency(g, bits)).values;
        double le = eigs[ell - 1];
        EdgeSigning sg(m);
        for (int i = 0; i < m; ++i) sg[i] = (bits >> i) & 1 ? 1 : -1;
        if (!have_below && le <= target + 1e-9) {
            w.below = sg;
            have_below = true;
        }
        if (!have_above && le >= target - 1e-9) {
            w.above = sg;
            have_above = true;
        }
    }
    if (!have_below || !have_above)
        throw std::logic_error("verify_signing_root_bound: no witness found (bug)");
    return w;
}

}  // namespace hcov
