#pragma once

namespace ramsey {

// The host graph is G(cn, d/n); sets of size alpha*n with alpha = (c-3)/4 are
// the "large" sets whose mutual adjacency the argument needs.
inline constexpr double kReferenceC = 7.29;
inline constexpr double kReferenceD = 5.14;
inline constexpr double kDefaultMargin = 0.00846;
inline constexpr double kClaimedBound = 137.0;
inline constexpr double kClaimedEntropyCeiling = -0.008;
// Best known lower bound on the size-Ramsey number of P_n is (1 + sqrt 2) n - 2.
inline constexpr double kLowerBoundConstant = 2.41421356237309504880;

// alpha = (c - 3)/4. Throws ParameterError unless c > 3.
double alpha_of(double c);

// Exponential growth rate (per n) of the expected number of edge-free pairs
// of disjoint alpha*n-sets in G(cn, d/n):
//   f(c, d) = c ln c - 2 alpha ln alpha - (c - 2 alpha) ln(c - 2 alpha) - d alpha^2.
double entropy_gap(double c, double d);

// The d solving f(c, d) = -margin.
double boundary_d(double c, double margin);

struct ProofConstants {
    double c = kReferenceC;
    double d = kReferenceD;
    double alpha = 0;
    double margin = 0;
    double objective = 0;  // c^2 d / 2, edges per n
    double f = 0;          // entropy_gap(c, d)

    static ProofConstants from(double c, double d, double margin);
};

// Minimizes c^2 * boundary_d(c, margin) / 2 over c in (3, 30]. f is strictly
// decreasing in d and the objective increasing, so the constrained optimum
// sits on the boundary d = boundary_d(c, margin) and the search is one
// dimensional: a grid scan brackets the minimum, Brent's method refines it.
ProofConstants optimize_constants(double margin = kDefaultMargin);

struct PaperConstantsReport {
    ProofConstants constants;
    bool entropy_ok = false;    // f(7.29, 5.14) < -0.008
    bool objective_ok = false;  // 7.29^2 * 5.14 / 2 < 137
    double lower_bound_constant = kLowerBoundConstant;
    bool pass() const { return entropy_ok && objective_ok; }
};

PaperConstantsReport verify_paper_constants();

}  // namespace ramsey
