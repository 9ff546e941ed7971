#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcov/covering.hpp"
#include "hcov/hypergraph.hpp"
#include "hcov/spectra.hpp"

namespace hcov {

// Spectral band for a (d,r)-regular hypergraph:
//   [r-2 - 2 sqrt((d-1)(r-1)),  r-2 + 2 sqrt((d-1)(r-1))]
// with trivial eigenvalue d(r-1) and obvious eigenvalue -d.
struct RamanujanInterval {
    int d = 0, r = 0;
    double lo = 0.0, hi = 0.0;
    double trivial_value = 0.0;
    double obvious_value = 0.0;
};

RamanujanInterval ramanujan_interval(int d, int r);

enum class EigLabel { Trivial, Obvious, Pass, FailLow, FailHigh };
const char* to_string(EigLabel label);

struct LabeledEig {
    double value;
    int multiplicity;
    EigLabel label;
};

enum class Verdict { Full, RightOnly, LeftOnly, None };
const char* to_string(Verdict v);

struct RamanujanCertificate {
    Verdict verdict = Verdict::None;
    RamanujanInterval interval;
    std::vector<LabeledEig> labeled;
    double tolerance = 0.0;
};

// Acceptance slack applied toward acceptance on both bound comparisons.
constexpr double kBandSlack = 1e-8;
// Proximity tolerance for recognising the trivial / obvious values.
constexpr double kValueTol = 1e-6;

// Labels the trivial eigenvalue (exactly one group), up to max(0, nu - e)
// eigenvalues at -d as obvious, and the rest pass/fail against the band.
std::vector<LabeledEig> classify_eigenvalues(const Hypergraph& h, const Spectrum& spec);

RamanujanCertificate certify(const Hypergraph& h);

// Certificate for the 2-cover defined by a signing: the new eigenvalues are
// Spec A(H, phi_s). Right-sided: every new eigenvalue <= hi. Left-sided:
// every non-obvious new eigenvalue >= lo.
struct CoveringCertificate {
    Spectrum base_spectrum;
    Spectrum new_spectrum;
    std::vector<LabeledEig> labeled;  // labels for the new eigenvalues
    RamanujanInterval interval;
    bool right_sided = false;
    bool left_sided = false;
    bool full = false;  // every non-obvious new eigenvalue inside the band
};

CoveringCertificate certify_covering(const Hypergraph& h, const Signing& s);

// Spectral radius of the universal cover. Closed form for (d,r)-regular
// input; otherwise the truncated ball of non-backtracking walks to depth L,
// whose radius estimates are monotone nondecreasing in L.
struct RadiusEstimate {
    double estimate = 0.0;
    std::optional<double> exact;
};

RadiusEstimate universal_cover_radius(const Hypergraph& h, int depth, int node_budget = 200000);

struct AlonBoppanaReport {
    double lambda2 = 0.0;
    double radius = 0.0;
    double gap = 0.0;  // radius - lambda2
    bool exact_radius = false;
};

AlonBoppanaReport alon_boppana_report(const Hypergraph& h, int depth);

std::string format_certificate(const RamanujanCertificate& cert);
std::string format_covering_certificate(const CoveringCertificate& cert);

}  // namespace hcov
