#include "hcov/geometry.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hcov {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// reducing polynomial coefficients (constant first, without the leading 1)
std::vector<int> modulus_for(int q) {
    switch (q) {
        case 4: return {1, 1};     // x^2 + x + 1 over GF(2)
        case 8: return {1, 1, 0};  // x^3 + x + 1 over GF(2)
        case 9: return {1, 0};     // x^2 + 1 over GF(3)
        default: throw std::invalid_argument("unsupported field order " + std::to_string(q));
    }
}

}  // namespace

bool Field::supported(int q) { return is_prime(q) || q == 4 || q == 8 || q == 9; }

Field Field::make(int q) {
    if (!supported(q))
        throw std::invalid_argument("unsupported field order " + std::to_string(q));
    if (is_prime(q)) return Field(q, q);

    int p = (q == 9) ? 3 : 2;
    Field f(q, p);
    auto mod = modulus_for(q);
    int deg = static_cast<int>(mod.size());

    auto digits = [&](int a) {
        std::vector<int> d(deg);
        for (int i = 0; i < deg; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    };
    auto pack = [&](const std::vector<int>& d) {
        int a = 0;
        for (int i = deg - 1; i >= 0; --i) a = a * p + d[i];
        return a;
    };

    f.mul_table_.assign(static_cast<size_t>(q) * q, 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            auto da = digits(a), db = digits(b);
            std::vector<int> prod(2 * deg - 1, 0);
            for (int i = 0; i < deg; ++i)
                for (int j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (int i = 2 * deg - 2; i >= deg; --i) {
                int c = prod[i];
                if (c == 0) continue;
                prod[i] = 0;
                for (int t = 0; t < deg; ++t)
                    prod[i - deg + t] = ((prod[i - deg + t] - c * mod[t]) % p + p) % p;
            }
            prod.resize(deg);
            f.mul_table_[static_cast<size_t>(a) * q + b] = pack(prod);
        }

    f.inv_table_.assign(q, 0);
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (f.mul_table_[static_cast<size_t>(a) * q + b] == 1) {
                f.inv_table_[a] = b;
                break;
            }
    return f;
}

Field::Field(int q, int p) : q_(q), p_(p) {}

int Field::add(int a, int b) const {
    if (p_ == q_) return (a + b) % q_;
    // componentwise digit addition mod p
    int r = 0, mul = 1;
    while (a > 0 || b > 0) {
        r += ((a % p_ + b % p_) % p_) * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return r;
}

int Field::neg(int a) const {
    if (p_ == q_) return (q_ - a) % q_;
    int r = 0, mul = 1;
    while (a > 0) {
        r += ((p_ - a % p_) % p_) * mul;
        a /= p_;
        mul *= p_;
    }
    return r;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
    if (p_ == q_) return (a * b) % q_;
    return mul_table_[static_cast<size_t>(a) * q_ + b];
}

int Field::inv(int a) const {
    if (a == 0) throw std::invalid_argument("field: inverse of zero");
    if (p_ == q_) {
        // extended Euclid
        int t = 0, nt = 1, r = q_, nr = a;
        while (nr != 0) {
            int quo = r / nr;
            t -= quo * nt;
            std::swap(t, nt);
            r -= quo * nr;
            std::swap(r, nr);
        }
        return ((t % q_) + q_) % q_;
    }
    return inv_table_[a];
}

Hypergraph complete_uniform(int d) {
    if (d < 2) throw std::invalid_argument("complete_uniform: d must be >= 2");
    int n = d + 1;
    std::vector<std::vector<int>> edges;
    // all d-subsets of [0, d+1) in lex order = drop vertex n-1-t
    std::vector<int> pick(d);
    // iterate subsets lexicographically
    for (int skip = n - 1; skip >= 0; --skip) {
        std::vector<int> e;
        for (int v = 0; v < n; ++v)
            if (v != skip) e.push_back(v);
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph projective_plane(int q) {
    Field f = Field::make(q);
    // canonical representatives in lex order
    std::vector<std::array<int, 3>> pts;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                std::array<int, 3> v{a, b, c};
                int nz = -1;
                for (int i = 0; i < 3; ++i)
                    if (v[i] != 0) {
                        nz = i;
                        break;
                    }
                if (nz >= 0 && v[nz] == 1) pts.push_back(v);
            }
    std::sort(pts.begin(), pts.end());

    auto dot_zero = [&](const std::array<int, 3>& c, const std::array<int, 3>& p) {
        int s = 0;
        for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(c[i], p[i]));
        return s == 0;
    };

    std::vector<std::vector<int>> lines;
    lines.reserve(pts.size());
    for (const auto& c : pts) {
        std::vector<int> line;
        for (size_t i = 0; i < pts.size(); ++i)
            if (dot_zero(c, pts[i])) line.push_back(static_cast<int>(i));
        lines.push_back(std::move(line));
    }
    return Hypergraph(static_cast<int>(pts.size()), std::move(lines));
}

Hypergraph affine_plane(int q) {
    Field f = Field::make(q);
    // point (x, y) -> index x*q + y
    std::vector<std::vector<int>> lines;
    for (int m = 0; m < q; ++m)
        for (int b = 0; b < q; ++b) {
            std::vector<int> line;
            for (int x = 0; x < q; ++x) line.push_back(x * q + f.add(f.mul(m, x), b));
            std::sort(line.begin(), line.end());
            lines.push_back(std::move(line));
        }
    for (int c = 0; c < q; ++c) {
        std::vector<int> line;
        for (int y = 0; y < q; ++y) line.push_back(c * q + y);
        lines.push_back(std::move(line));
    }
    return Hypergraph(q * q, std::move(lines));
}

}  // namespace hcov
