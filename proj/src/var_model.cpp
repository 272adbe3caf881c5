#include "portes/var_model.hpp"

#include <cmath>

#include "portes/errors.hpp"

namespace portes {

CoeffArray CoeffArray::univariate(const std::vector<double>& coeffs) {
    CoeffArray out;
    out.k = 1;
    out.mats.reserve(coeffs.size());
    for (double c : coeffs) out.mats.push_back(Matrix(1, 1, {c}));
    return out;
}

void CoeffArray::validate() const {
    if (k < 1) throw DomainError("coefficient array dimension must be >= 1");
    for (const Matrix& m : mats)
        if (m.rows() != k || m.cols() != k)
            throw DomainError("coefficient matrices must all be k x k");
}

Matrix companion(const CoeffArray& c) {
    c.validate();
    const std::size_t p = c.order();
    if (p == 0) throw EmptyOrder("companion: order must be >= 1");
    const std::size_t k = c.k;
    Matrix out(k * p, k * p);
    for (std::size_t l = 0; l < p; ++l)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) out(i, l * k + j) = c.mats[l](i, j);
    for (std::size_t l = 1; l < p; ++l)
        for (std::size_t i = 0; i < k; ++i) out(l * k + i, (l - 1) * k + i) = 1.0;
    return out;
}

Admissibility invertq(const CoeffArray& c) {
    c.validate();
    if (c.order() == 0) return Admissibility::Admissible;
    // values within 1e-8 of the unit circle count as violations, erring
    // toward the warning
    return spectral_radius(companion(c)) >= 1.0 - 1e-8 ? Admissibility::Violated
                                                       : Admissibility::Admissible;
}

FittedVar fit_var(const SeriesMatrix& z, std::size_t p, bool constant, bool trend) {
    const std::size_t n = z.n();
    const std::size_t k = z.k();
    if (p < 1) throw DomainError("fit_var: order must be >= 1");
    if (n <= k * p + 2 + p) throw DomainError("fit_var: series too short for the order");

    const std::size_t rows = n - p;
    const std::size_t c0 = (constant ? 1u : 0u) + (trend ? 1u : 0u);
    const std::size_t ncol = c0 + k * p;

    // design matrix: [1, t, z_{t-1}, ..., z_{t-p}], t absolute (p+1 .. n)
    Matrix x(rows, ncol);
    Matrix y(rows, k);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t t = r + p;  // 0-based time of the response
        std::size_t col = 0;
        if (constant) x(r, col++) = 1.0;
        if (trend) x(r, col++) = static_cast<double>(t + 1);
        for (std::size_t l = 1; l <= p; ++l)
            for (std::size_t i = 0; i < k; ++i) x(r, col++) = z(t - l, i);
        for (std::size_t i = 0; i < k; ++i) y(r, i) = z(t, i);
    }

    const Matrix xt = transpose(x);
    const Matrix xtx = xt * x;
    const Matrix xty = xt * y;
    Matrix b;  // ncol x k
    try {
        // solve via the normal equations; Cholesky doubles as the rank check
        const Matrix l = cholesky_lower(xtx);
        const Matrix lt = transpose(l);
        b = solve(lt, solve(l, xty));
    } catch (const NotPositiveDefinite&) {
        throw RankDeficient("fit_var: regressor cross-product matrix is singular");
    } catch (const Singular&) {
        throw RankDeficient("fit_var: regressor cross-product matrix is singular");
    }

    FittedVar f;
    f.p = p;
    f.include_constant = constant;
    f.include_trend = trend;
    f.intercept.assign(k, 0.0);
    f.trend_coef.assign(k, 0.0);
    std::size_t row = 0;
    if (constant)
        for (std::size_t i = 0; i < k; ++i) f.intercept[i] = b(0, i);
    row += constant ? 1 : 0;
    if (trend)
        for (std::size_t i = 0; i < k; ++i) f.trend_coef[i] = b(row, i);
    row += trend ? 1 : 0;
    f.coeffs.k = k;
    for (std::size_t l = 0; l < p; ++l) {
        Matrix phi(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) phi(i, j) = b(row + l * k + j, i);
        f.coeffs.mats.push_back(phi);
    }

    const Matrix fitted = x * b;
    Matrix res(rows, k);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t i = 0; i < k; ++i) res(r, i) = y(r, i) - fitted(r, i);
    f.residuals = SeriesMatrix(res);

    Matrix sigma(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < rows; ++r) s += res(r, i) * res(r, j);
            sigma(i, j) = s / static_cast<double>(rows);
        }
    f.sigma = sigma;
    return f;
}

SeriesMatrix simulate_fitted(const FittedVar& f, const InnovationSource& src,
                             std::size_t n_out, Rng& rng) {
    if (invertq(f.coeffs) == Admissibility::Violated)
        throw NonStationary("simulate_fitted: fitted AR operator is not stationary");
    const std::size_t k = f.coeffs.k;
    const std::size_t p = f.p;
    constexpr std::size_t kBurnIn = 200;

    const SeriesMatrix e = src.draw(kBurnIn + n_out, rng);
    Matrix z(kBurnIn + n_out, k);
    for (std::size_t t = 0; t < kBurnIn + n_out; ++t) {
        // trend indexed so output points carry t = 1..n_out
        const double tt = static_cast<double>(t) - static_cast<double>(kBurnIn) + 1.0;
        for (std::size_t i = 0; i < k; ++i) {
            double s = f.intercept[i] + f.trend_coef[i] * tt + e(t, i);
            for (std::size_t l = 1; l <= p && l <= t; ++l) {
                const Matrix& phi = f.coeffs.mats[l - 1];
                for (std::size_t j = 0; j < k; ++j) s += phi(i, j) * z(t - l, j);
            }
            z(t, i) = s;
        }
    }
    Matrix out(n_out, k);
    for (std::size_t t = 0; t < n_out; ++t)
        for (std::size_t i = 0; i < k; ++i) out(t, i) = z(kBurnIn + t, i);
    return SeriesMatrix(out);
}

}  // namespace portes
