#include "portes/acf.hpp"

#include <utility>

#include "portes/errors.hpp"

namespace portes {

SeriesMatrix SeriesMatrix::column(std::vector<double> x) {
    const std::size_t n = x.size();
    return SeriesMatrix(Matrix(n, 1, std::move(x)));
}

Matrix autocovariance(const SeriesMatrix& e, std::size_t lag) {
    const std::size_t n = e.n();
    const std::size_t k = e.k();
    if (lag >= n) throw LagTooLarge("autocovariance: lag >= series length");
    Matrix g(k, k);
    for (std::size_t t = lag; t < n; ++t)
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) g(a, b) += e(t, a) * e(t - lag, b);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) g(a, b) *= inv_n;
    return g;
}

namespace {

// Inverse of a lower-triangular matrix by forward substitution.
Matrix invert_lower(const Matrix& c) {
    const std::size_t n = c.rows();
    Matrix inv(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        inv(col, col) = 1.0 / c(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = col; j < i; ++j) s -= c(i, j) * inv(j, col);
            inv(i, col) = s / c(i, i);
        }
    }
    return inv;
}

}  // namespace

LagCorrelationSet standardized_corr(const SeriesMatrix& e, std::size_t max_lag,
                                    std::size_t season) {
    const std::size_t n = e.n();
    if (season < 1) throw DomainError("standardized_corr: season must be >= 1");
    if (max_lag * season >= n)
        throw LagTooLarge("standardized_corr: max lag * season >= series length");

    LagCorrelationSet set;
    set.gamma0 = autocovariance(e, 0);
    set.lags_are_seasonal = season > 1;
    set.season = season;

    Matrix c_inv;
    try {
        c_inv = invert_lower(cholesky_lower(set.gamma0));
    } catch (const NotPositiveDefinite&) {
        throw SingularCovariance("standardized_corr: lag-0 covariance not positive definite");
    }
    const Matrix c_inv_t = transpose(c_inv);

    set.corr.reserve(max_lag);
    for (std::size_t l = 1; l <= max_lag; ++l)
        set.corr.push_back(c_inv * autocovariance(e, l * season) * c_inv_t);
    return set;
}

Matrix block_toeplitz(const LagCorrelationSet& set) {
    const std::size_t k = set.gamma0.rows();
    const std::size_t m = set.corr.size();
    Matrix out((m + 1) * k, (m + 1) * k);
    for (std::size_t bi = 0; bi <= m; ++bi) {
        for (std::size_t bj = 0; bj <= m; ++bj) {
            if (bi == bj) {
                for (std::size_t a = 0; a < k; ++a) out(bi * k + a, bj * k + a) = 1.0;
            } else if (bj > bi) {
                const Matrix& r = set.corr[bj - bi - 1];
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) out(bi * k + a, bj * k + b) = r(a, b);
            } else {
                const Matrix& r = set.corr[bi - bj - 1];
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) out(bi * k + a, bj * k + b) = r(b, a);
            }
        }
    }
    return out;
}

}  // namespace portes
