#include "ramsey/constants.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "ramsey/errors.hpp"

namespace ramsey {
namespace {

constexpr double kSearchLow = 3.0;
constexpr double kSearchHigh = 30.0;
constexpr int kGridPoints = 27000;

// Entropy part of f, i.e. f(c, 0).
double entropy_part(double c) {
    const double a = alpha_of(c);
    const double rest = c - 2.0 * a;
    return c * std::log(c) - 2.0 * a * std::log(a) - rest * std::log(rest);
}

double objective_on_boundary(double c, double margin) { return c * c * boundary_d(c, margin) / 2.0; }

}  // namespace

double alpha_of(double c) {
    if (!(c > 3.0)) throw ParameterError("c must exceed 3 so that alpha = (c - 3)/4 is positive");
    return (c - 3.0) / 4.0;
}

double entropy_gap(double c, double d) {
    const double a = alpha_of(c);
    return entropy_part(c) - d * a * a;
}

double boundary_d(double c, double margin) {
    if (margin < 0.0) throw ParameterError("boundary_d: margin must be nonnegative");
    const double a = alpha_of(c);
    return (entropy_part(c) + margin) / (a * a);
}

ProofConstants ProofConstants::from(double c, double d, double margin) {
    ProofConstants k;
    k.c = c;
    k.d = d;
    k.alpha = alpha_of(c);
    k.margin = margin;
    k.objective = c * c * d / 2.0;
    k.f = entropy_gap(c, d);
    return k;
}

ProofConstants optimize_constants(double margin) {
    if (!(margin >= 0.0)) throw ParameterError("optimize_constants: margin must be nonnegative");
    const double step = (kSearchHigh - kSearchLow) / kGridPoints;
    int best = 1;
    double best_value = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= kGridPoints; ++i) {
        const double v = objective_on_boundary(kSearchLow + i * step, margin);
        if (v < best_value) {
            best_value = v;
            best = i;
        }
    }
    const double lo = best > 1 ? kSearchLow + (best - 1) * step : kSearchLow + 0.5 * step;
    const double hi = std::min(kSearchLow + (best + 1) * step, kSearchHigh);
    std::uintmax_t iterations = 200;
    const auto [c, value] = boost::math::tools::brent_find_minima(
        [margin](double x) { return objective_on_boundary(x, margin); }, lo, hi,
        std::numeric_limits<double>::digits / 2, iterations);
    const double c_best = value < best_value ? c : kSearchLow + best * step;
    return ProofConstants::from(c_best, boundary_d(c_best, margin), margin);
}

PaperConstantsReport verify_paper_constants() {
    PaperConstantsReport r;
    r.constants = ProofConstants::from(kReferenceC, kReferenceD, kDefaultMargin);
    r.entropy_ok = r.constants.f < kClaimedEntropyCeiling;
    r.objective_ok = r.constants.objective < kClaimedBound;
    return r;
}

}  // namespace ramsey
