#include "hcov/ramanujan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hcov/util.hpp"

namespace hcov {

RamanujanInterval ramanujan_interval(int d, int r) {
    if (d < 1 || r < 2) throw std::invalid_argument("ramanujan_interval: need d >= 1, r >= 2");
    RamanujanInterval iv;
    iv.d = d;
    iv.r = r;
    double w = 2.0 * std::sqrt(static_cast<double>(d - 1) * (r - 1));
    iv.lo = r - 2 - w;
    iv.hi = r - 2 + w;
    iv.trivial_value = static_cast<double>(d) * (r - 1);
    iv.obvious_value = -static_cast<double>(d);
    return iv;
}

const char* to_string(EigLabel label) {
    switch (label) {
        case EigLabel::Trivial: return "trivial";
        case EigLabel::Obvious: return "obvious";
        case EigLabel::Pass: return "pass";
        case EigLabel::FailLow: return "fail_low";
        case EigLabel::FailHigh: return "fail_high";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Full: return "full";
        case Verdict::RightOnly: return "right_only";
        case Verdict::LeftOnly: return "left_only";
        case Verdict::None: return "none";
    }
    return "?";
}

namespace {

RegularityReport require_regular_connected(const Hypergraph& h, const char* op) {
    auto rep = validate(h);
    if (!rep.is_connected)
        throw std::invalid_argument(std::string(op) + ": hypergraph must be connected");
    if (!rep.is_uniform || !rep.is_regular)
        throw std::invalid_argument(std::string(op) + ": hypergraph must be (d,r)-regular");
    return rep;
}

// Band classification shared by the hypergraph and covering certificates.
// `budget` is the number of eigenvalues at the obvious value allowed to be
// labeled obvious; `trivial` marks at most one group at d(r-1).
std::vector<LabeledEig> label_groups(const std::vector<SpectrumGroup>& groups,
                                     const RamanujanInterval& iv, int budget, bool mark_trivial) {
    std::vector<LabeledEig> out;
    bool trivial_done = false;
    for (const auto& g : groups) {
        if (mark_trivial && !trivial_done && std::abs(g.value - iv.trivial_value) <= kValueTol) {
            out.push_back({g.value, g.multiplicity, EigLabel::Trivial});
            trivial_done = true;
            continue;
        }
        int mult = g.multiplicity;
        if (budget > 0 && std::abs(g.value - iv.obvious_value) <= kValueTol) {
            int take = std::min(budget, mult);
            out.push_back({g.value, take, EigLabel::Obvious});
            budget -= take;
            mult -= take;
            if (mult == 0) continue;
        }
        EigLabel label = EigLabel::Pass;
        if (g.value < iv.lo - kBandSlack) label = EigLabel::FailLow;
        else if (g.value > iv.hi + kBandSlack) label = EigLabel::FailHigh;
        out.push_back({g.value, mult, label});
    }
    if (mark_trivial && !trivial_done)
        throw std::runtime_error("classify_eigenvalues: no trivial eigenvalue found "
                                 "(disconnection or bug)");
    return out;
}

}  // namespace

std::vector<LabeledEig> classify_eigenvalues(const Hypergraph& h, const Spectrum& spec) {
    auto rep = require_regular_connected(h, "classify_eigenvalues");
    auto iv = ramanujan_interval(rep.d, rep.r);
    int budget = std::max(0, rep.nu - rep.e);
    return label_groups(spec.groups, iv, budget, true);
}

RamanujanCertificate certify(const Hypergraph& h) {
    auto rep = require_regular_connected(h, "certify");
    RamanujanCertificate cert;
    cert.interval = ramanujan_interval(rep.d, rep.r);
    cert.tolerance = kBandSlack;
    cert.labeled = classify_eigenvalues(h, sym_eigenvalues(adjacency_matrix(h)));

    bool right_ok = true, left_ok = true;
    for (const auto& le : cert.labeled) {
        if (le.label == EigLabel::FailHigh) right_ok = false;
        if (le.label == EigLabel::FailLow) left_ok = false;
    }
    cert.verdict = right_ok && left_ok ? Verdict::Full
                 : right_ok           ? Verdict::RightOnly
                 : left_ok            ? Verdict::LeftOnly
                                      : Verdict::None;
    return cert;
}

CoveringCertificate certify_covering(const Hypergraph& h, const Signing& s) {
    auto rep = require_regular_connected(h, "certify_covering");
    CoveringCertificate cert;
    cert.interval = ramanujan_interval(rep.d, rep.r);
    cert.base_spectrum = sym_eigenvalues(adjacency_matrix(h));
    cert.new_spectrum = sym_eigenvalues(signed_adjacency(h, s));
    int budget = std::max(0, rep.nu - rep.e);
    cert.labeled = label_groups(cert.new_spectrum.groups, cert.interval, budget, false);

    cert.right_sided = true;
    cert.left_sided = true;
    for (const auto& le : cert.labeled) {
        // right-sided quantifies over all new eigenvalues; -d always passes
        if (le.value > cert.interval.hi + kBandSlack) cert.right_sided = false;
        if (le.label == EigLabel::FailLow) cert.left_sided = false;
    }
    cert.full = cert.right_sided && cert.left_sided;
    return cert;
}

namespace {

// Ball of radius `depth` in the universal cover of H, built from
// non-backtracking walks in B_H rooted at vertex 0. Returns the spectral
// radius of its adjacency by power iteration.
double ball_radius(const Hypergraph& h, int depth, int node_budget) {
    // incidence lists
    int nu = h.vertex_count();
    std::vector<std::vector<int>> edges_at(nu);
    for (int j = 0; j < h.edge_count(); ++j)
        for (int v : h.edge(j)) edges_at[v].push_back(j);

    struct VertexNode {
        int base;         // base vertex
        int parent_edge;  // base edge used to reach it, -1 at the root
        int dist;
    };
    std::vector<VertexNode> nodes;
    std::vector<std::vector<int>> hyperedges;  // vertex-node index lists
    nodes.push_back({0, -1, 0});

    size_t head = 0;
    while (head < nodes.size()) {
        VertexNode cur = nodes[head];
        if (cur.dist >= depth) {
            ++head;
            continue;
        }
        for (int j : edges_at[cur.base]) {
            if (j == cur.parent_edge) continue;  // non-backtracking
            std::vector<int> members{static_cast<int>(head)};
            for (int w : h.edge(j)) {
                if (w == cur.base) continue;
                nodes.push_back({w, j, cur.dist + 1});
                if (static_cast<int>(nodes.size()) > node_budget)
                    throw std::runtime_error("universal_cover_radius: ball exceeds node budget");
                members.push_back(static_cast<int>(nodes.size()) - 1);
            }
            hyperedges.push_back(std::move(members));
        }
        ++head;
    }

    size_t n = nodes.size();
    if (n <= 1 || hyperedges.empty()) return 0.0;

    // Power iteration on A + I (the shift makes the Perron value strictly
    // dominant even when the ball is bipartite); all-pairs within hyperedges.
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
    double rho = 0.0;
    for (int it = 0; it < 5000; ++it) {
        for (size_t i = 0; i < n; ++i) y[i] = x[i];
        for (const auto& he : hyperedges) {
            double total = 0.0;
            for (int v : he) total += x[v];
            for (int v : he) y[v] += total - x[v];
        }
        double dot = 0.0, norm2 = 0.0;
        for (size_t i = 0; i < n; ++i) {
            dot += x[i] * y[i];
            norm2 += y[i] * y[i];
        }
        double norm = std::sqrt(norm2);
        if (norm == 0.0) return 0.0;
        for (size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (it > 3 && std::abs(dot - rho) <= 1e-13 * std::max(1.0, std::abs(dot))) {
            rho = dot;
            break;
        }
        rho = dot;
    }
    return rho - 1.0;
}

}  // namespace

RadiusEstimate universal_cover_radius(const Hypergraph& h, int depth, int node_budget) {
    auto rep = validate(h);
    if (!rep.is_connected)
        throw std::invalid_argument("universal_cover_radius: hypergraph must be connected");
    if (!rep.is_regular)
        throw std::invalid_argument("universal_cover_radius: hypergraph must be d-regular");
    RadiusEstimate est;
    if (rep.is_uniform && rep.e > 0) {
        double val =
            rep.r - 2 + 2.0 * std::sqrt(static_cast<double>(rep.d - 1) * (rep.r - 1));
        est.estimate = val;
        est.exact = val;
        return est;
    }
    est.estimate = ball_radius(h, depth, node_budget);
    return est;
}

AlonBoppanaReport alon_boppana_report(const Hypergraph& h, int depth) {
    auto spec = sym_eigenvalues(adjacency_matrix(h));
    auto radius = universal_cover_radius(h, depth);
    AlonBoppanaReport rep;
    rep.lambda2 = spec.values.size() > 1 ? spec.values[1] : 0.0;
    rep.radius = radius.estimate;
    rep.gap = rep.radius - rep.lambda2;
    rep.exact_radius = radius.exact.has_value();
    return rep;
}

std::string format_certificate(const RamanujanCertificate& cert) {
    std::ostringstream out;
    out << "verdict " << to_string(cert.verdict) << "\n";
    out << "interval " << fixed9(cert.interval.lo) << " " << fixed9(cert.interval.hi) << "\n";
    out << "trivial " << fixed9(cert.interval.trivial_value) << "\n";
    for (const auto& le : cert.labeled)
        out << "eig " << fixed9(le.value) << " x" << le.multiplicity << " " << to_string(le.label)
            << "\n";
    return out.str();
}

std::string format_covering_certificate(const CoveringCertificate& cert) {
    std::ostringstream out;
    out << "right_sided " << (cert.right_sided ? "true" : "false") << "\n";
    out << "left_sided " << (cert.left_sided ? "true" : "false") << "\n";
    out << "full " << (cert.full ? "true" : "false") << "\n";
    out << "interval " << fixed9(cert.interval.lo) << " " << fixed9(cert.interval.hi) << "\n";
    for (const auto& le : cert.labeled)
        out << "eig " << fixed9(le.value) << " x" << le.multiplicity << " " << to_string(le.label)
            << "\n";
    return out.str();
}

}  // namespace hcov
