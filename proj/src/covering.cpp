#include "hcov/covering.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hcov/util.hpp"

namespace hcov {

void check_voltage(const Hypergraph& h, const VoltageAssignment& phi) {
    if (phi.k < 2) throw std::invalid_argument("voltage: fold count must be >= 2");
    if (static_cast<int>(phi.perms.size()) != h.incidence_count())
        throw std::invalid_argument("voltage: length does not match incidence count");
    for (const auto& p : phi.perms) {
        if (static_cast<int>(p.size()) != phi.k)
            throw std::invalid_argument("voltage: permutation of wrong size");
        std::vector<char> hit(phi.k, 0);
        for (int img : p) {
            if (img < 0 || img >= phi.k || hit[img])
                throw std::invalid_argument("voltage: not a permutation");
            hit[img] = 1;
        }
    }
}

void check_signing(const Hypergraph& h, const Signing& s) {
    if (static_cast<int>(s.signs.size()) != h.incidence_count())
        throw std::invalid_argument("signing: length does not match incidence count");
    for (int v : s.signs)
        if (v != 1 && v != -1) throw std::invalid_argument("signing: values must be +-1");
}

VoltageAssignment signing_to_voltage(const Signing& s) {
    VoltageAssignment phi;
    phi.k = 2;
    phi.perms.reserve(s.signs.size());
    for (int v : s.signs)
        phi.perms.push_back(v == 1 ? std::vector<int>{0, 1} : std::vector<int>{1, 0});
    return phi;
}

Signing voltage_to_signing(const VoltageAssignment& phi) {
    if (phi.k != 2) throw std::invalid_argument("voltage_to_signing: fold count must be 2");
    Signing s;
    s.signs.reserve(phi.perms.size());
    for (const auto& p : phi.perms) s.signs.push_back(p[0] == 0 ? 1 : -1);
    return s;
}

CoverResult derived_cover(const Hypergraph& h, const VoltageAssignment& phi) {
    check_voltage(h, phi);
    int nu = h.vertex_count(), ne = h.edge_count(), k = phi.k;

    // permutation index per (vertex-in-edge) position, canonical order
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<size_t>(k) * ne);
    std::vector<std::pair<int, int>> labels;
    labels.reserve(edges.capacity());

    std::vector<int> first_inc(ne);  // incidence index of first vertex of each edge
    for (int j = 0, pos = 0; j < ne; ++j) {
        first_inc[j] = pos;
        pos += static_cast<int>(h.edge(j).size());
    }

    for (int j = 0; j < k; ++j) {
        for (int e = 0; e < ne; ++e) {
            const auto& base = h.edge(e);
            std::vector<int> ce(base.size());
            for (size_t t = 0; t < base.size(); ++t) {
                int sheet = phi.perms[first_inc[e] + static_cast<int>(t)][j];
                ce[t] = base[t] + sheet * nu;
            }
            std::sort(ce.begin(), ce.end());
            edges.push_back(std::move(ce));
            labels.emplace_back(e, j);
        }
    }
    return CoverResult{Hypergraph(k * nu, std::move(edges)), std::move(labels), k};
}

SymMatrix signed_adjacency(const Hypergraph& h, const Signing& s) {
    check_signing(h, s);
    SymMatrix a(h.vertex_count());
    int pos = 0;
    for (const auto& e : h.edges()) {
        int m = static_cast<int>(e.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                a.add(e[i], e[j], static_cast<double>(s.signs[pos + i] * s.signs[pos + j]));
        pos += m;
    }
    return a;
}

std::vector<double> signed_incidence(const Hypergraph& h, const Signing& s) {
    check_signing(h, s);
    int nu = h.vertex_count(), ne = h.edge_count();
    std::vector<double> z(static_cast<size_t>(nu) * ne, 0.0);
    int pos = 0;
    for (int j = 0; j < ne; ++j)
        for (int v : h.edge(j)) z[static_cast<size_t>(v) * ne + j] = s.signs[pos++];
    return z;
}

SymMatrix signed_laplacian(const Hypergraph& h, const Signing& s) {
    int nu = h.vertex_count(), ne = h.edge_count();
    auto z = signed_incidence(h, s);
    SymMatrix gram(nu);
    for (int i = 0; i < nu; ++i)
        for (int j = i; j < nu; ++j) {
            double acc = 0.0;
            for (int t = 0; t < ne; ++t)
                acc += z[static_cast<size_t>(i) * ne + t] * z[static_cast<size_t>(j) * ne + t];
            gram.set(i, j, acc);
        }
    SymMatrix da = signed_adjacency(h, s);
    auto deg = h.degrees();
    for (int v = 0; v < nu; ++v) da.add(v, v, static_cast<double>(deg[v]));
    if (!(gram == da))
        throw std::logic_error("signed_laplacian: ZZ^T disagrees with D + A(H,phi)");
    return gram;
}

namespace {

void require_connected(const Hypergraph& h, const char* op) {
    if (!validate(h).is_connected)
        throw std::invalid_argument(std::string(op) + ": hypergraph must be connected");
}

}  // namespace

bool verify_spectral_inclusion(const Hypergraph& h, const VoltageAssignment& phi) {
    require_connected(h, "verify_spectral_inclusion");
    auto cover = derived_cover(h, phi);
    auto cover_spec = sym_eigenvalues(adjacency_matrix(cover.cover));
    auto base_spec = sym_eigenvalues(adjacency_matrix(h));
    return multiset_contains(cover_spec.values, base_spec.values, 1e-7);
}

bool verify_spectral_union(const Hypergraph& h, const Signing& s) {
    require_connected(h, "verify_spectral_union");
    auto cover = derived_cover(h, signing_to_voltage(s));
    auto cover_spec = sym_eigenvalues(adjacency_matrix(cover.cover));
    auto base = sym_eigenvalues(adjacency_matrix(h)).values;
    auto extra = sym_eigenvalues(signed_adjacency(h, s)).values;
    std::vector<double> merged;
    merged.reserve(base.size() + extra.size());
    std::merge(base.begin(), base.end(), extra.begin(), extra.end(),
               std::back_inserter(merged), std::greater<double>());
    return multiset_equal(cover_spec.values, merged, 1e-7);
}

AbelianLift abelian_cyclic_lift(const Hypergraph& h, int k, int pivot) {
    require_connected(h, "abelian_cyclic_lift");
    int m = h.incidence_count();
    if (pivot < 0 || pivot >= m) throw std::invalid_argument("abelian_cyclic_lift: invalid pivot");
    if (k < 1) throw std::invalid_argument("abelian_cyclic_lift: fold count must be >= 1");

    AbelianLift out;
    if (k == 1) {
        std::vector<std::pair<int, int>> labels;
        for (int e = 0; e < h.edge_count(); ++e) labels.emplace_back(e, 0);
        out.cover = CoverResult{h, std::move(labels), 1};
    } else {
        VoltageAssignment phi;
        phi.k = k;
        std::vector<int> identity(k), shift_inv(k);
        for (int j = 0; j < k; ++j) {
            identity[j] = j;
            shift_inv[j] = (j + k - 1) % k;  // inverse of the k-cycle 0->1->...->0
        }
        phi.perms.assign(m, identity);
        phi.perms[pivot] = shift_inv;
        out.cover = derived_cover(h, phi);
    }

    auto inc = incidence_graph(h);
    int v0 = inc.adjacency[pivot].vertex;
    int e0 = h.vertex_count() + inc.adjacency[pivot].edge;
    SymMatrix b = incidence_adjacency(h);
    int order = b.order();
    for (int j = 0; j < k; ++j) {
        HermMatrix block(order);
        for (int r = 0; r < order; ++r)
            for (int c = r; c < order; ++c)
                block.set(r, c, std::complex<double>(b(r, c), 0.0));
        double angle = 2.0 * std::numbers::pi * j / k;
        block.set(v0, e0, std::polar(1.0, angle));
        out.blocks.push_back(std::move(block));
    }
    return out;
}

Signing switched_at_vertex(const Hypergraph& h, Signing s, int u) {
    check_signing(h, s);
    int pos = 0;
    for (const auto& e : h.edges())
        for (int v : e) {
            if (v == u) s.signs[pos] = -s.signs[pos];
            ++pos;
        }
    return s;
}

Signing switched_in_edge(const Hypergraph& h, Signing s, int e) {
    check_signing(h, s);
    int pos = 0;
    for (int j = 0; j < h.edge_count(); ++j) {
        int sz = static_cast<int>(h.edge(j).size());
        if (j == e)
            for (int t = 0; t < sz; ++t) s.signs[pos + t] = -s.signs[pos + t];
        pos += sz;
    }
    return s;
}

Signing random_signing(const Hypergraph& h, std::uint64_t seed) {
    SplitMix64 g(seed);
    Signing s;
    s.signs.resize(h.incidence_count());
    for (auto& v : s.signs) v = (g.next() & 1) ? 1 : -1;
    return s;
}

VoltageAssignment random_voltage(const Hypergraph& h, int k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("random_voltage: fold count must be >= 2");
    SplitMix64 g(seed);
    VoltageAssignment phi;
    phi.k = k;
    phi.perms.resize(h.incidence_count());
    for (auto& p : phi.perms) {
        p.resize(k);
        for (int j = 0; j < k; ++j) p[j] = j;
        for (int j = k - 1; j > 0; --j)
            std::swap(p[j], p[static_cast<int>(g.below(static_cast<std::uint64_t>(j) + 1))]);
    }
    return phi;
}

namespace {

std::vector<std::string> significant_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool keep = false;
        for (char c : line) {
            if (c == '#') break;
            if (!isspace(static_cast<unsigned char>(c))) {
                keep = true;
                break;
            }
        }
        if (keep) out.push_back(line);
    }
    return out;
}

}  // namespace

Signing parse_signing(const std::string& text) {
    auto lines = significant_lines(text);
    if (lines.size() < 3) throw std::runtime_error("signing: truncated file");
    std::istringstream l1(lines[0]), l2(lines[1]), l3(lines[2]);
    std::string tag;
    int version = 0, m = -1;
    if (!(l1 >> tag >> version) || tag != "sg" || version != 1)
        throw std::runtime_error("signing: malformed header (expected 'sg 1')");
    if (!(l2 >> tag >> m) || tag != "m" || m < 0)
        throw std::runtime_error("signing: malformed incidence count");
    Signing s;
    std::string sym;
    while (l3 >> sym) {
        if (sym == "+") s.signs.push_back(1);
        else if (sym == "-") s.signs.push_back(-1);
        else throw std::runtime_error("signing: bad symbol '" + sym + "'");
    }
    if (static_cast<int>(s.signs.size()) != m)
        throw std::runtime_error("signing: symbol count does not match m");
    return s;
}

std::string serialize_signing(const Signing& s) {
    std::ostringstream out;
    out << "sg 1\n";
    out << "m " << s.signs.size() << "\n";
    for (size_t i = 0; i < s.signs.size(); ++i) {
        if (i) out << " ";
        out << (s.signs[i] == 1 ? "+" : "-");
    }
    out << "\n";
    return out.str();
}

VoltageAssignment parse_voltage(const std::string& text) {
    auto lines = significant_lines(text);
    if (lines.size() < 2) throw std::runtime_error("voltage: truncated file");
    std::istringstream l1(lines[0]), l2(lines[1]);
    std::string tag;
    int version = 0, k = 0;
    if (!(l1 >> tag >> version) || tag != "vt" || version != 1)
        throw std::runtime_error("voltage: malformed header (expected 'vt 1')");
    if (!(l2 >> tag >> k) || tag != "k" || k < 2)
        throw std::runtime_error("voltage: malformed fold count");
    VoltageAssignment phi;
    phi.k = k;
    for (size_t i = 2; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        if (!(ls >> tag) || tag != "p")
            throw std::runtime_error("voltage: expected 'p' line");
        std::vector<int> p;
        int v;
        while (ls >> v) p.push_back(v);
        if (static_cast<int>(p.size()) != k)
            throw std::runtime_error("voltage: permutation of wrong size");
        phi.perms.push_back(std::move(p));
    }
    return phi;
}

std::string serialize_voltage(const VoltageAssignment& phi) {
    std::ostringstream out;
    out << "vt 1\n";
    out << "k " << phi.k << "\n";
    for (const auto& p : phi.perms) {
        out << "p";
        for (int v : p) out << " " << v;
        out << "\n";
    }
    return out.str();
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

}  // namespace

Signing load_signing(const std::string& path) { return parse_signing(read_file(path)); }
void save_signing(const Signing& s, const std::string& path) {
    write_file(path, serialize_signing(s));
}
VoltageAssignment load_voltage(const std::string& path) { return parse_voltage(read_file(path)); }
void save_voltage(const VoltageAssignment& phi, const std::string& path) {
    write_file(path, serialize_voltage(phi));
}

}  // namespace hcov
