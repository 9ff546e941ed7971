#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hcov/hypergraph.hpp"
#include "hcov/intpoly.hpp"

namespace hcov {

class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

    int order() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = v;
    }
    void add(int i, int j, double v) {
        a_[static_cast<size_t>(i) * n_ + j] += v;
        if (i != j) a_[static_cast<size_t>(j) * n_ + i] += v;
    }

    double inf_norm() const;
    bool is_integral() const;
    const std::vector<double>& data() const { return a_; }

    bool operator==(const SymMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<double> a_;
};

class HermMatrix {
public:
    HermMatrix() = default;
    explicit HermMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    int order() const { return n_; }
    std::complex<double> operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * n_ + j];
    }
    void set(int i, int j, std::complex<double> v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = std::conj(v);
    }

private:
    int n_ = 0;
    std::vector<std::complex<double>> a_;
};

struct SpectrumGroup {
    double value;
    int multiplicity;
};

// Eigenvalues sorted descending plus multiplicity groups merged at an
// absolute tolerance of 1e-6 (spectra at this scale are integers or well
// separated surds).
struct Spectrum {
    std::vector<double> values;
    std::vector<SpectrumGroup> groups;
};

constexpr double kGroupTol = 1e-6;

Spectrum make_spectrum(std::vector<double> values);

SymMatrix adjacency_matrix(const Hypergraph& h);
SymMatrix signless_laplacian(const Hypergraph& h);
SymMatrix incidence_adjacency(const Hypergraph& h);  // A(B_H)

// Cyclic Jacobi to machine precision; deterministic rotation order.
Spectrum sym_eigenvalues(const SymMatrix& m);

// Hermitian eigenvalues via the doubled real embedding
// [[Re, -Im], [Im, Re]]; every eigenvalue appears twice there.
Spectrum herm_eigenvalues(const HermMatrix& m);

// Exact monic characteristic polynomial det(xI - M) by the
// Faddeev-LeVerrier trace recursion; requires integral entries.
IntPoly char_poly(const SymMatrix& m);

// Checks the exact identities
//   x^nu psi_{A(B_H)}(x) = x^e psi_{Q(H)}(x^2)
//   x^e  psi_{Q(H)}(x)   = x^nu psi_{Q(H*)}(x)
// as integer polynomials. False signals an implementation bug.
bool verify_poly_relation(const Hypergraph& h);

// multiset helpers on descending eigenvalue lists
bool multiset_contains(const std::vector<double>& super, const std::vector<double>& sub,
                       double tol);
bool multiset_equal(const std::vector<double>& a, const std::vector<double>& b, double tol);

std::string format_spectrum(const Spectrum& s);

}  // namespace hcov
