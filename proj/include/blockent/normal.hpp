#pragma once

namespace blockent {

/// Standard normal CDF, evaluated through erfc for full double accuracy in
/// both tails.
double norm_cdf(double z);

/// Standard normal quantile. Acklam's rational approximation polished with
/// one Halley step against norm_cdf; absolute error is far below 1e-9 over
/// p in [1e-10, 1 - 1e-10] (checked by round-trip tests rather than trusting
/// the published coefficients). Throws Error("domain") unless 0 < p < 1.
double inv_norm_cdf(double p);

}  // namespace blockent
