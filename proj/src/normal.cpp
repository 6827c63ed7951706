#include "fpr/normal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fpr::stdnorm {

namespace {
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

double pdf(double z) {
    if (!std::isfinite(z)) throw std::invalid_argument("stdnorm::pdf: z must be finite");
    return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

double cdf(double z) {
    if (!std::isfinite(z)) throw std::invalid_argument("stdnorm::cdf: z must be finite");
    return 0.5 * std::erfc(-z * kInvSqrt2);
}

double quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("stdnorm::quantile: p must lie strictly inside (0, 1)");
    if (p == 0.5) return 0.0;

    // Tail asymptote as the starting point, then Newton steps against cdf.
    // The bracket [lo, hi] always contains the root; any step that escapes
    // it falls back to bisection.
    double lo = -42.0;
    double hi = 42.0;
    double z = (p < 0.5) ? -std::sqrt(-2.0 * std::log(p)) : std::sqrt(-2.0 * std::log1p(-p));

    for (int it = 0; it < 120; ++it) {
        const double f = cdf(z) - p;
        if (f == 0.0) break;
        if (f > 0.0) hi = z; else lo = z;

        double next = z - f / pdf(z);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == z) break;
        z = next;

        if (hi - lo < 1e-15 * (1.0 + std::min(std::abs(lo), std::abs(hi)))) break;
    }
    return z;
}

}  // namespace fpr::stdnorm
