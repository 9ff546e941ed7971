#include "hcov/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <thread>

#include "hcov/geometry.hpp"
#include "hcov/matchpoly.hpp"
#include "hcov/util.hpp"

namespace hcov {

std::vector<int> free_incidences(const Hypergraph& h) {
    int nu = h.vertex_count(), ne = h.edge_count();
    auto inc = incidence_graph(h);
    int m = static_cast<int>(inc.adjacency.size());

    // adjacency of B_H keyed by incidence index
    std::vector<std::vector<std::pair<int, int>>> adj(nu + ne);  // (neighbor, incidence)
    for (int i = 0; i < m; ++i) {
        int v = inc.adjacency[i].vertex, en = nu + inc.adjacency[i].edge;
        adj[v].emplace_back(en, i);
        adj[en].emplace_back(v, i);
    }
    for (auto& lst : adj) std::sort(lst.begin(), lst.end());

    std::vector<char> seen(nu + ne, 0);
    std::vector<char> in_tree(m, 0);
    if (nu + ne > 0) {
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (auto [y, i] : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    in_tree[i] = 1;
                    q.push(y);
                }
        }
    }
    std::vector<int> free;
    for (int i = 0; i < m; ++i)
        if (!in_tree[i]) free.push_back(i);
    return free;
}

namespace {

bool passes(const CoveringCertificate& cert, Side side) {
    switch (side) {
        case Side::Right: return cert.right_sided;
        case Side::Left: return cert.left_sided;
        case Side::Full: return cert.full;
    }
    return false;
}

using ExtraCheck = std::function<bool(const Hypergraph&, const Signing&)>;

// MSB-first pattern: bit set means '+', clear means '-', so ascending
// pattern indices enumerate sign vectors in lexicographic order with
// '-' < '+'.
Signing pattern_to_signing(int m, const std::vector<int>& slots, std::uint64_t pattern) {
    Signing s;
    s.signs.assign(m, 1);
    int f = static_cast<int>(slots.size());
    for (int i = 0; i < f; ++i)
        s.signs[slots[i]] = (pattern >> (f - 1 - i)) & 1 ? 1 : -1;
    return s;
}

SearchResult exhaustive_scan(const Hypergraph& h, const SearchConfig& cfg,
                             const std::vector<int>& slots, const ExtraCheck& extra) {
    int m = h.incidence_count();
    int f = static_cast<int>(slots.size());
    if (f > 24) throw std::invalid_argument("search_cover: exhaustive budget exceeded (free > 24)");
    const std::uint64_t total = std::uint64_t(1) << f;

    int jobs = std::max(1, cfg.jobs);
    std::atomic<std::uint64_t> best(total);  // smallest witness index so far

    auto scan_range = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t c = lo; c < hi; ++c) {
            if (best.load(std::memory_order_relaxed) < lo) return;  // a lower chunk won
            Signing s = pattern_to_signing(m, slots, c);
            auto cert = certify_covering(h, s);
            if (passes(cert, cfg.side) && (!extra || extra(h, s))) {
                std::uint64_t cur = best.load();
                while (c < cur && !best.compare_exchange_weak(cur, c)) {}
                return;  // first hit in this chunk is its minimum
            }
        }
    };

    if (jobs == 1 || total < 64) {
        scan_range(0, total);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(scan_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    SearchResult res;
    std::uint64_t found = best.load();
    if (found < total) {
        Signing s = pattern_to_signing(m, slots, found);
        res.witness = {s, certify_covering(h, s)};
        res.explored = found + 1;
        res.exhausted = found + 1 == total;
    } else {
        res.explored = total;
        res.exhausted = true;
    }
    return res;
}

SearchResult random_scan(const Hypergraph& h, const SearchConfig& cfg,
                         const std::vector<int>& slots, const ExtraCheck& extra) {
    int m = h.incidence_count();
    int f = static_cast<int>(slots.size());
    int words = (f + 63) / 64;
    const std::uint64_t trials = cfg.trials;

    int jobs = std::max(1, cfg.jobs);
    std::vector<std::vector<int>> best_per_job(jobs);

    auto pattern_bits = [&](std::uint64_t trial, Signing& s) {
        s.signs.assign(m, 1);
        for (int i = 0; i < f; ++i) {
            std::uint64_t w = SplitMix64::word(cfg.seed, trial * words + i / 64);
            s.signs[slots[i]] = (w >> (63 - i % 64)) & 1 ? 1 : -1;
        }
    };

    auto run_job = [&](int job) {
        Signing s;
        std::vector<int>& best = best_per_job[job];
        for (std::uint64_t t = job; t < trials; t += jobs) {
            pattern_bits(t, s);
            if (!best.empty() && !std::lexicographical_compare(s.signs.begin(), s.signs.end(),
                                                               best.begin(), best.end()))
                continue;
            auto cert = certify_covering(h, s);
            if (passes(cert, cfg.side) && (!extra || extra(h, s))) best = s.signs;
        }
    };

    if (jobs == 1) {
        run_job(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(run_job, t);
        for (auto& th : pool) th.join();
    }

    SearchResult res;
    res.explored = trials;
    res.exhausted = false;
    const std::vector<int>* best = nullptr;
    for (const auto& b : best_per_job) {
        if (b.empty()) continue;
        if (!best || std::lexicographical_compare(b.begin(), b.end(), best->begin(), best->end()))
            best = &b;
    }
    if (best) {
        Signing s{*best};
        res.witness = {s, certify_covering(h, s)};
    }
    return res;
}

SearchResult search_filtered(const Hypergraph& h, const SearchConfig& cfg,
                             const ExtraCheck& extra) {
    auto rep = validate(h);
    if (!rep.is_connected || !rep.is_uniform || !rep.is_regular)
        throw std::invalid_argument("search_cover: hypergraph must be connected (d,r)-regular");

    std::vector<int> slots;
    if (cfg.reduce_switching) {
        slots = free_incidences(h);
    } else {
        slots.resize(h.incidence_count());
        for (size_t i = 0; i < slots.size(); ++i) slots[i] = static_cast<int>(i);
    }

    if (cfg.mode == SearchMode::Exhaustive) return exhaustive_scan(h, cfg, slots, extra);
    return random_scan(h, cfg, slots, extra);
}

}  // namespace

SearchResult search_cover(const Hypergraph& h, const SearchConfig& cfg) {
    return search_filtered(h, cfg, ExtraCheck());
}

LeftCondition left_condition(const Hypergraph& h) {
    auto rep = validate(h);
    if (!rep.is_uniform || !rep.is_regular)
        throw std::invalid_argument("left_condition: hypergraph must be (d,r)-regular");
    LeftCondition lc;
    lc.mu_tau = mu_tau(h);
    lc.threshold = std::abs(std::sqrt(static_cast<double>(rep.d - 1)) -
                            std::sqrt(static_cast<double>(rep.r - 1)));
    lc.holds = lc.mu_tau >= lc.threshold - 1e-9;
    return lc;
}

std::vector<TowerLevel> build_tower(const Hypergraph& h0, int levels, Side side) {
    if (levels < 1) throw std::invalid_argument("build_tower: levels >= 1 required");
    if (side == Side::Full)
        throw std::invalid_argument("build_tower: side must be right or left");

    auto base_cert = certify(h0);
    bool base_ok = side == Side::Right
                       ? (base_cert.verdict == Verdict::Full ||
                          base_cert.verdict == Verdict::RightOnly)
                       : (base_cert.verdict == Verdict::Full ||
                          base_cert.verdict == Verdict::LeftOnly);
    if (!base_ok)
        throw std::invalid_argument("build_tower: base hypergraph is not certified for the "
                                    "requested side");

    // the next level must be connected, so skip balanced witnesses
    ExtraCheck connected_cover = [](const Hypergraph& h, const Signing& s) {
        auto cover = derived_cover(h, signing_to_voltage(s));
        return validate(cover.cover).is_connected;
    };

    std::vector<TowerLevel> out;
    Hypergraph current = h0;
    for (int t = 1; t <= levels; ++t) {
        int f = static_cast<int>(free_incidences(current).size());
        SearchConfig cfg;
        cfg.side = side;
        if (f <= 24) {
            cfg.mode = SearchMode::Exhaustive;
        } else {
            cfg.mode = SearchMode::Random;
            cfg.trials = 100000;
            cfg.seed = 0;
        }
        auto res = search_filtered(current, cfg, connected_cover);
        if (!res.witness) {
            if (side == Side::Right)
                throw std::runtime_error(
                    "build_tower: no right-sided witness at level " + std::to_string(t) +
                    " (existence is guaranteed; this signals a bug)");
            throw std::runtime_error(
                "build_tower: no left-sided witness at level " + std::to_string(t) +
                " (the matching-root condition may fail here)");
        }
        auto [s, cert] = *res.witness;
        auto cover = derived_cover(current, signing_to_voltage(s));
        out.push_back({cover.cover, s, cert});
        current = cover.cover;
    }
    return out;
}

std::vector<AbelianLevel> abelian_tower(int q, const std::vector<int>& folds) {
    if (q < 5 || !Field::supported(q))
        throw std::invalid_argument("abelian_tower: q must be a supported prime power >= 5");
    Hypergraph h = affine_plane(q);
    double bound_b = std::sqrt(static_cast<double>(q)) - std::sqrt(static_cast<double>(q - 1));
    double bound_a = q - 2 - 2.0 * std::sqrt(static_cast<double>(q) * (q - 1));

    std::vector<AbelianLevel> out;
    for (int k : folds) {
        if (k < 1) throw std::invalid_argument("abelian_tower: fold must be >= 1");
        auto lift = abelian_cyclic_lift(h, k, 0);

        AbelianLevel level;
        level.k = k;
        level.bound_incidence = bound_b;
        level.bound_adjacency = bound_a;

        auto lift_b_spec = sym_eigenvalues(incidence_adjacency(lift.cover.cover));
        std::vector<double> union_vals;
        for (const auto& block : lift.blocks) {
            auto vals = herm_eigenvalues(block).values;
            union_vals.insert(union_vals.end(), vals.begin(), vals.end());
        }
        std::sort(union_vals.begin(), union_vals.end(), std::greater<double>());
        level.block_union_ok = multiset_equal(lift_b_spec.values, union_vals, 1e-7);

        int idx = k * q * q;  // 1-based index of lambda_{k q^2}
        level.lambda_incidence = lift_b_spec.values[idx - 1];
        auto lift_spec = sym_eigenvalues(adjacency_matrix(lift.cover.cover));
        level.lambda_adjacency = lift_spec.values[idx - 1];

        if (!level.block_union_ok)
            throw std::logic_error("abelian_tower: block spectrum union mismatch (bug)");
        if (level.lambda_incidence < bound_b - 1e-8 || level.lambda_adjacency < bound_a - 1e-8)
            throw std::logic_error("abelian_tower: eigenvalue bound violation (bug)");

        level.lift = std::move(lift.cover);
        out.push_back(std::move(level));
    }
    return out;
}

}  // namespace hcov
