#include "hcov/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hcov/util.hpp"

namespace hcov {

double SymMatrix::inf_norm() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
        double row = 0.0;
        for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
        best = std::max(best, row);
    }
    return best;
}

bool SymMatrix::is_integral() const {
    for (double v : a_)
        if (v != std::floor(v)) return false;
    return true;
}

Spectrum make_spectrum(std::vector<double> values) {
    std::sort(values.begin(), values.end(), std::greater<double>());
    Spectrum s;
    s.values = std::move(values);
    size_t i = 0;
    while (i < s.values.size()) {
        size_t j = i + 1;
        while (j < s.values.size() && s.values[j - 1] - s.values[j] <= kGroupTol) ++j;
        double sum = 0.0;
        for (size_t k = i; k < j; ++k) sum += s.values[k];
        s.groups.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return s;
}

SymMatrix adjacency_matrix(const Hypergraph& h) {
    SymMatrix a(h.vertex_count());
    for (const auto& e : h.edges())
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) a.add(e[i], e[j], 1.0);
    return a;
}

SymMatrix signless_laplacian(const Hypergraph& h) {
    SymMatrix q = adjacency_matrix(h);
    auto deg = h.degrees();
    for (int v = 0; v < h.vertex_count(); ++v) q.add(v, v, static_cast<double>(deg[v]));
    return q;
}

SymMatrix incidence_adjacency(const Hypergraph& h) {
    int nu = h.vertex_count();
    SymMatrix b(nu + h.edge_count());
    for (int j = 0; j < h.edge_count(); ++j)
        for (int v : h.edge(j)) b.set(v, nu + j, 1.0);
    return b;
}

namespace {

// Cyclic-by-row Jacobi sweeps; rotation order is fixed, so repeated runs on
// identical input produce identical output bit for bit.
std::vector<double> jacobi(const SymMatrix& m) {
    int n = m.order();
    std::vector<double> a(m.data());
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0 || n < 2) {
        std::vector<double> diag(n);
        for (int i = 0; i < n; ++i) diag[i] = at(i, i);
        return diag;
    }

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (std::sqrt(off) <= 1e-14 * scale * n) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) <= 1e-300) {
                    at(p, q) = at(q, p) = 0.0;
                    continue;
                }
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                double h = t * apq;
                at(p, p) -= h;
                at(q, q) += h;
                at(p, q) = at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = akp - s * (akq + tau * akp);
                    at(p, k) = at(k, p);
                    at(k, q) = akq + s * (akp - tau * akq);
                    at(q, k) = at(k, q);
                }
            }
        }
    }
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = at(i, i);
    return diag;
}

}  // namespace

Spectrum sym_eigenvalues(const SymMatrix& m) { return make_spectrum(jacobi(m)); }

Spectrum herm_eigenvalues(const HermMatrix& m) {
    int n = m.order();
    SymMatrix embed(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> v = m(i, j);
            embed.set(i, j, v.real());
            embed.set(n + i, n + j, v.real());
            embed.set(n + i, j, v.imag());
            embed.set(i, n + j, -v.imag());
        }
    // the embedding is symmetric because Re is symmetric and Im antisymmetric
    std::vector<double> doubled = sym_eigenvalues(embed).values;
    double scale = std::max(1.0, embed.inf_norm());
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) {
        double a = doubled[2 * i], b = doubled[2 * i + 1];
        if (std::abs(a - b) > 1e-8 * scale)
            throw std::runtime_error("herm_eigenvalues: odd multiplicity after embedding");
        vals[i] = (a + b) / 2.0;
    }
    return make_spectrum(std::move(vals));
}

namespace {

std::vector<BigInt> to_bigint_matrix(const SymMatrix& m) {
    if (!m.is_integral())
        throw std::invalid_argument("char_poly: matrix entries must be integral");
    int n = m.order();
    std::vector<BigInt> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i) * n + j] = BigInt(static_cast<long>(m(i, j)));
    return a;
}

}  // namespace

IntPoly char_poly(const SymMatrix& m) {
    int n = m.order();
    std::vector<BigInt> a = to_bigint_matrix(m);
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    if (n == 0) return IntPoly(std::move(c));

    auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };
    std::vector<BigInt> mk = a;  // M_1 = A
    BigInt tr(0);
    for (int i = 0; i < n; ++i) tr += mk[idx(i, i)];
    c[n - 1] = -tr;

    std::vector<BigInt> next(static_cast<size_t>(n) * n);
    for (int k = 2; k <= n; ++k) {
        // M_k = A (M_{k-1} + c_{n-k+1} I)
        for (int i = 0; i < n; ++i) mk[idx(i, i)] += c[n - k + 1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigInt s(0);
                for (int l = 0; l < n; ++l) s += a[idx(i, l)] * mk[idx(l, j)];
                next[idx(i, j)] = s;
            }
        std::swap(mk, next);
        tr = 0;
        for (int i = 0; i < n; ++i) tr += mk[idx(i, i)];
        tr = -tr;
        // the trace recursion divides exactly
        mpz_divexact_ui(c[n - k].get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return IntPoly(std::move(c));
}

bool verify_poly_relation(const Hypergraph& h) {
    auto deg = h.degrees();
    for (int dv : deg)
        if (dv < 1)
            throw std::invalid_argument("verify_poly_relation: vertex of degree 0");

    int nu = h.vertex_count(), e = h.edge_count();
    IntPoly psi_b = char_poly(incidence_adjacency(h));
    IntPoly psi_q = char_poly(signless_laplacian(h));

    // Q(H*) = Z^T Z
    SymMatrix qdual(e);
    for (int i = 0; i < e; ++i)
        for (int j = i; j < e; ++j) {
            int common = 0;
            const auto& a = h.edge(i);
            const auto& b = h.edge(j);
            size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] == b[y]) ++common, ++x, ++y;
                else if (a[x] < b[y]) ++x;
                else ++y;
            }
            qdual.set(i, j, static_cast<double>(common));
        }
    IntPoly psi_qdual = char_poly(qdual);

    bool first = psi_b.times_power(nu) == psi_q.compose_square().times_power(e);
    bool second = psi_q.times_power(e) == psi_qdual.times_power(nu);
    return first && second;
}

bool multiset_contains(const std::vector<double>& super, const std::vector<double>& sub,
                       double tol) {
    // both descending; greedy two-pointer matching
    size_t i = 0;
    for (double v : sub) {
        while (i < super.size() && super[i] > v + tol) ++i;
        if (i >= super.size() || std::abs(super[i] - v) > tol) return false;
        ++i;
    }
    return true;
}

bool multiset_equal(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

std::string format_spectrum(const Spectrum& s) {
    std::ostringstream out;
    for (const auto& g : s.groups)
        out << "eig " << fixed9(g.value) << " x" << g.multiplicity << "\n";
    return out.str();
}

}  // namespace hcov
