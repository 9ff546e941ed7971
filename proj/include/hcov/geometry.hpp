#pragma once

#include <vector>

#include "hcov/hypergraph.hpp"

namespace hcov {

// GF(q) arithmetic for prime q, plus fixed tables for q in {4, 8, 9} built
// from x^2+x+1 over GF(2), x^3+x+1 over GF(2) and x^2+1 over GF(3).
// Elements are canonical indices in [0, q): base-p digit vectors read as
// polynomial coefficients.
class Field {
public:
    static bool supported(int q);
    static Field make(int q);  // throws std::invalid_argument on unsupported q

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // a != 0

private:
    Field(int q, int p);
    int q_ = 0, p_ = 0;
    std::vector<int> mul_table_;  // empty for prime q
    std::vector<int> inv_table_;
};

// Complete d-uniform hypergraph on d+1 vertices; (d,d)-regular.
Hypergraph complete_uniform(int d);

// Projective plane PG(2,q): points are the 1-dimensional subspaces of
// GF(q)^3 (canonical representative: first nonzero coordinate 1, lex
// ordered), lines the kernels of the canonical nonzero functionals.
Hypergraph projective_plane(int q);

// Affine plane AG(2,q): points GF(q)^2 in lex order, lines y = mx + b
// ordered by (m, b) followed by the verticals x = c.
Hypergraph affine_plane(int q);

}  // namespace hcov
