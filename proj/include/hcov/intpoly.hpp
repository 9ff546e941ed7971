#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace hcov {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Dense univariate polynomial with exact integer coefficients.
// Stored ascending and trimmed; the zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

    static IntPoly constant(BigInt c);
    static IntPoly monomial(BigInt c, int k);
    static IntPoly from_desc(const std::vector<BigInt>& descending);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    BigInt coeff(int i) const;
    const BigInt& leading() const { return c_.back(); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator*(const BigInt& s) const;

    IntPoly times_power(int k) const;  // * x^k
    IntPoly compose_square() const;    // p(x^2)
    IntPoly derivative() const;

    BigInt content() const;      // gcd of |coefficients|, 0 for the zero poly
    IntPoly primitive() const;   // content removed, sign kept
    IntPoly normalized() const;  // primitive with positive leading coefficient

    // Exact division; throws std::logic_error when the division is inexact.
    static IntPoly div_exact(const IntPoly& num, const IntPoly& den);

    BigRat eval(const BigRat& t) const;
    double eval_double(double t) const;
    int sign_at(const BigRat& t) const;

    bool operator==(const IntPoly&) const = default;

    // "poly c_n c_{n-1} ... c_0"
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

IntPoly poly_gcd(IntPoly a, IntPoly b);

// Yun square-free decomposition: p = lead * prod factor_i ^ mult_i with the
// factors primitive, positive-leading, pairwise coprime and square-free.
std::vector<std::pair<IntPoly, int>> squarefree_factors(const IntPoly& p);

struct PolyRoot {
    double value;
    int multiplicity;
};

// All real roots with multiplicities, descending, isolated by Sturm
// sequences on the square-free part and refined by exact bisection to
// better than 1e-10.
std::vector<PolyRoot> real_roots(const IntPoly& p);

}  // namespace hcov
