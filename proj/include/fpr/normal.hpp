#pragma once

// Standard normal pdf / cdf / quantile. Everything else in the library
// funnels its distribution work through these three functions, so their
// accuracy targets are the strictest in the project: absolute cdf error
// below 1e-12 for |z| <= 8, quantile consistent with the cdf to 1e-12.

namespace fpr::stdnorm {

// Density (1/sqrt(2*pi)) * exp(-z^2/2). Throws std::invalid_argument for
// non-finite z.
double pdf(double z);

// Distribution function Phi(z), computed through erfc so the lower tail
// keeps full relative accuracy. Phi(-z) is therefore also the accurate way
// to evaluate the upper tail 1 - Phi(z). Throws std::invalid_argument for
// non-finite z.
double cdf(double z);

// Inverse of cdf on (0, 1): bracketed Newton iteration against cdf itself,
// no closed-form approximation. Throws std::domain_error for p outside
// the open interval.
double quantile(double p);

}  // namespace fpr::stdnorm
