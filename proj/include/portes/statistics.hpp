#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "portes/acf.hpp"
#include "portes/chisq.hpp"

namespace portes {

/// Callback for user-supplied diagnostic statistics: evaluated once per
/// requested lag. Must be reentrant when used inside the Monte Carlo engine.
using StatFn = std::function<double(const SeriesMatrix&, std::size_t lag)>;

/// What to compute: which statistic, at which lags, with which seasonal
/// stride, on residuals or their squares.
struct StatRequest {
    std::vector<std::size_t> lags{5, 10, 15, 20, 25, 30};
    std::size_t season = 1;
    bool squared_residuals = false;
    Method method = Method::MahdiMcLeod;
    StatFn custom;  ///< required when method == Method::Custom

    void validate(std::size_t n) const;
};

/// Entrywise square; n and k unchanged.
SeriesMatrix squared_transform(const SeriesMatrix& e);

double box_pierce(const SeriesMatrix& e, std::size_t m, std::size_t season = 1);
double ljung_box(const SeriesMatrix& e, std::size_t m, std::size_t season = 1);
double hosking(const SeriesMatrix& e, std::size_t m, std::size_t season = 1);
double li_mcleod(const SeriesMatrix& e, std::size_t m, std::size_t season = 1);

/// Generalized-variance statistic -3n(2m+1)^-1 log det of the block-Toeplitz
/// correlation matrix. Throws NonPositiveDeterminant when the determinant is
/// not positive (numerically degenerate correlation structure).
double mahdi_mcleod(const SeriesMatrix& e, std::size_t m, std::size_t season = 1);

/// Generalized Durbin-Watson statistic at one lag (univariate only):
/// sum (e_t - e_{t-l})^2 / sum e_t^2. Throws ZeroDenominator when the
/// residual sum of squares is zero.
double durbin_watson(const SeriesMatrix& e, std::size_t lag);

/// Evaluate fn once per lag; results are positionally aligned with lags.
std::vector<double> custom_statistic(const SeriesMatrix& e,
                                     const std::vector<std::size_t>& lags,
                                     const StatFn& fn);

/// Evaluate the requested statistic at every requested lag, sharing one
/// autocorrelation pass. Applies the squared-residual transform first when
/// flagged. This is the entry point the Monte Carlo engine uses for both
/// observed and replicate panels.
std::vector<double> statistics_at_lags(const SeriesMatrix& e, const StatRequest& req);

}  // namespace portes
