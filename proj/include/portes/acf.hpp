#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "portes/matrix.hpp"

namespace portes {

/// An n x k panel of observations or model residuals, one column per
/// component series.
class SeriesMatrix {
public:
    SeriesMatrix() = default;
    explicit SeriesMatrix(Matrix values) : values_(std::move(values)) {}
    SeriesMatrix(std::size_t n, std::size_t k) : values_(n, k) {}

    /// Univariate series from a flat vector.
    static SeriesMatrix column(std::vector<double> x);

    std::size_t n() const { return values_.rows(); }
    std::size_t k() const { return values_.cols(); }

    double& operator()(std::size_t t, std::size_t i) { return values_(t, i); }
    double operator()(std::size_t t, std::size_t i) const { return values_(t, i); }

    const Matrix& values() const { return values_; }
    Matrix& values() { return values_; }

    bool operator==(const SeriesMatrix&) const = default;

private:
    Matrix values_;
};

/// Standardized residual autocorrelation matrices R_1..R_m at stride
/// `season`, plus the contemporaneous covariance they were standardized by.
struct LagCorrelationSet {
    Matrix gamma0;             ///< k x k residual covariance at lag 0
    std::vector<Matrix> corr;  ///< R_(1*s) .. R_(m*s)
    bool lags_are_seasonal = false;
    std::size_t season = 1;
};

/// Lag-l residual autocovariance (1/n) * sum_{t>l} e_t e'_{t-l}.
/// The divisor is n, not n-l. Throws LagTooLarge when l >= n.
Matrix autocovariance(const SeriesMatrix& e, std::size_t lag);

/// Standardized correlation matrices R_(l*s) = L' G_(l*s) L for l = 1..m,
/// where L L' is the inverse of the lag-0 covariance (L is canonicalized as
/// the inverse-transpose of the Cholesky factor of G_0; the statistics
/// downstream are invariant to that choice). Throws SingularCovariance when
/// the lag-0 covariance is not positive definite.
LagCorrelationSet standardized_corr(const SeriesMatrix& e, std::size_t max_lag,
                                    std::size_t season = 1);

/// Block-Toeplitz correlation matrix of size k(m+1): identity blocks on the
/// diagonal, R_((j-i)*s) above it and transposed blocks below.
Matrix block_toeplitz(const LagCorrelationSet& set);

}  // namespace portes
