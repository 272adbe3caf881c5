#pragma once

#include <cstddef>
#include <vector>

#include "portes/acf.hpp"
#include "portes/rng.hpp"

namespace portes {

/// Parameters of one alpha-stable law S(alpha, beta, scale, location) in the
/// S1 (Chambers-Mallows-Stuck) parameterization: location enters linearly
/// after the alpha != 1 tangent correction.
struct StableParams {
    double alpha = 2.0;     ///< index, in (0, 2]
    double beta = 0.0;      ///< skewness, in [-1, 1]
    double scale = 1.0;     ///< > 0
    double location = 0.0;

    /// Throws InvalidAlpha/InvalidBeta/StableParamsInvalid outside ranges.
    void validate() const;
};

/// One standard-scale draw (scale and location applied) via the
/// Chambers-Mallows-Stuck transform.
double rstable_draw(const StableParams& p, Rng& rng);

/// n independent draws per component; components are mutually independent.
SeriesMatrix rstable(std::size_t n, const std::vector<StableParams>& params, Rng& rng);

/// Quantile-method estimate of stable parameters, per column.
///
/// Uses the five sample quantiles q05..q95 (type-7 interpolation), the
/// ratio statistics (q95-q05)/(q75-q25) and (q95+q05-2*q50)/(q95-q05), and
/// bilinear inversion of precomputed lookup tables; estimates outside the
/// table range clamp to the nearest boundary. Requires n >= 50 rows; throws
/// DegenerateQuantiles when the interquartile range is zero.
std::vector<StableParams> fitstable(const SeriesMatrix& x);

}  // namespace portes
