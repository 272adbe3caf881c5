#pragma once

#include <cstddef>
#include <vector>

#include "portes/acf.hpp"
#include "portes/innovations.hpp"
#include "portes/matrix.hpp"
#include "portes/rng.hpp"

namespace portes {

/// Ordered lag-coefficient matrices of an AR or MA operator,
/// I - A_1 B - ... - A_p B^p (minus convention on both sides).
struct CoeffArray {
    std::size_t k = 1;
    std::vector<Matrix> mats;  ///< each k x k; order() == mats.size()

    static CoeffArray empty(std::size_t k) { return CoeffArray{k, {}}; }

    /// Promote a univariate coefficient list to 1 x 1 matrices.
    static CoeffArray univariate(const std::vector<double>& coeffs);

    std::size_t order() const { return mats.size(); }
    void validate() const;
};

/// The k*order x k*order companion matrix: top block-row [A_1 ... A_p],
/// identity blocks on the subdiagonal, zeros elsewhere.
/// Throws EmptyOrder when order == 0.
Matrix companion(const CoeffArray& c);

enum class Admissibility { Admissible, Violated };

/// Stationarity (AR side) / invertibility (MA side) check: Violated iff the
/// companion spectral radius is >= 1 - 1e-8. Order 0 is Admissible.
Admissibility invertq(const CoeffArray& c);

/// A VAR(p) fitted by least squares.
struct FittedVar {
    std::size_t p = 1;
    bool include_constant = true;
    bool include_trend = false;
    CoeffArray coeffs;
    std::vector<double> intercept;   ///< k-vector (zeros when absent)
    std::vector<double> trend_coef;  ///< k-vector (zeros when absent)
    SeriesMatrix residuals;          ///< (n - p) x k
    Matrix sigma;                    ///< residual covariance, divisor n - p
};

/// Least-squares VAR(p) fit of z_t on (1, t, z_{t-1}, ..., z_{t-p}) per the
/// included regressors; equation-by-equation OLS, which coincides with
/// multivariate OLS. Throws RankDeficient when the regressor cross-product
/// matrix is numerically singular.
FittedVar fit_var(const SeriesMatrix& z, std::size_t p, bool constant = true,
                  bool trend = false);

/// Simulate n_out points from a fitted VAR by the recursion
/// z_t = intercept + trend*t + sum Phi_i z_{t-i} + e_t, discarding a 200
/// point burn-in. Throws NonStationary when the fitted AR operator fails
/// the companion check.
SeriesMatrix simulate_fitted(const FittedVar& f, const InnovationSource& src,
                             std::size_t n_out, Rng& rng);

}  // namespace portes
