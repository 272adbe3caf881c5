#include "portes/statistics.hpp"

#include <algorithm>
#include <cmath>

#include "portes/errors.hpp"

namespace portes {

void StatRequest::validate(std::size_t n) const {
    if (lags.empty()) throw DomainError("lags must be nonempty");
    for (std::size_t i = 0; i < lags.size(); ++i) {
        if (lags[i] < 1) throw DomainError("lags must be positive");
        if (i > 0 && lags[i] <= lags[i - 1])
            throw DomainError("lags must be strictly increasing");
    }
    if (season < 1) throw DomainError("season must be >= 1");
    if (lags.back() * season >= n)
        throw LagTooLarge("max lag * season must be < series length");
    if (method == Method::Custom && !custom)
        throw DomainError("method Custom requires a statistic callback");
}

SeriesMatrix squared_transform(const SeriesMatrix& e) {
    SeriesMatrix out = e;
    for (std::size_t t = 0; t < e.n(); ++t)
        for (std::size_t i = 0; i < e.k(); ++i) out(t, i) = e(t, i) * e(t, i);
    return out;
}

namespace {

// Squared Frobenius norm of each standardized correlation matrix. With the
// standardization R_0 = I, so r' (R_0^-1 (x) R_0^-1) r collapses to ||R_l||_F^2;
// the unit tests keep the explicit vec/Kronecker form as an oracle.
std::vector<double> frobenius_terms(const LagCorrelationSet& set) {
    std::vector<double> q;
    q.reserve(set.corr.size());
    for (const Matrix& r : set.corr) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) s += r(i, j) * r(i, j);
        q.push_back(s);
    }
    return q;
}

enum class Weighting { BoxPierce, LjungBox, Hosking, LiMcLeod };

// Shared weighted partial sums: all four additive statistics differ only in
// the per-term weight and the Li-McLeod offset, so computing them from the
// same q_l terms keeps the k=1 algebraic identities exact in floating point.
std::vector<double> additive_stat(std::size_t n, std::size_t k, std::size_t season,
                                  const std::vector<double>& q,
                                  const std::vector<std::size_t>& lags, Weighting w) {
    const double nd = static_cast<double>(n);
    std::vector<double> out;
    out.reserve(lags.size());
    double acc = 0.0;
    std::size_t l = 0;
    for (std::size_t m : lags) {
        for (; l < m; ++l) {
            const double denom = nd - static_cast<double>((l + 1) * season);
            switch (w) {
                case Weighting::BoxPierce:
                case Weighting::LiMcLeod:
                    acc += nd * q[l];
                    break;
                case Weighting::LjungBox:
                    acc += nd * (nd + 2.0) / denom * q[l];
                    break;
                case Weighting::Hosking:
                    acc += nd * nd / denom * q[l];
                    break;
            }
        }
        double value = acc;
        if (w == Weighting::LiMcLeod) {
            const double md = static_cast<double>(m);
            const double k2 = static_cast<double>(k) * static_cast<double>(k);
            value += k2 * md * (md + 1.0) / (2.0 * nd);
        }
        out.push_back(value);
    }
    return out;
}

std::vector<double> mahdi_mcleod_at(std::size_t n, const LagCorrelationSet& set,
                                    const std::vector<std::size_t>& lags) {
    std::vector<double> out;
    out.reserve(lags.size());
    for (std::size_t m : lags) {
        LagCorrelationSet head{set.gamma0,
                               {set.corr.begin(), set.corr.begin() + static_cast<long>(m)},
                               set.lags_are_seasonal,
                               set.season};
        const LogDet det = lu_logdet(block_toeplitz(head));
        if (det.sign <= 0)
            throw NonPositiveDeterminant(
                "mahdi_mcleod: block-Toeplitz determinant not positive");
        out.push_back(-3.0 * static_cast<double>(n) / (2.0 * static_cast<double>(m) + 1.0) *
                      det.log_abs);
    }
    return out;
}

std::vector<double> evaluate(const SeriesMatrix& e, const StatRequest& req) {
    const std::size_t n = e.n();
    switch (req.method) {
        case Method::DurbinWatson: {
            std::vector<double> out;
            out.reserve(req.lags.size());
            for (std::size_t m : req.lags) out.push_back(durbin_watson(e, m * req.season));
            return out;
        }
        case Method::Custom:
            return custom_statistic(e, req.lags, req.custom);
        default:
            break;
    }
    const LagCorrelationSet set = standardized_corr(e, req.lags.back(), req.season);
    if (req.method == Method::MahdiMcLeod) return mahdi_mcleod_at(n, set, req.lags);
    const std::vector<double> q = frobenius_terms(set);
    switch (req.method) {
        case Method::BoxPierce:
            return additive_stat(n, e.k(), req.season, q, req.lags, Weighting::BoxPierce);
        case Method::LjungBox:
            return additive_stat(n, e.k(), req.season, q, req.lags, Weighting::LjungBox);
        case Method::Hosking:
            return additive_stat(n, e.k(), req.season, q, req.lags, Weighting::Hosking);
        case Method::LiMcLeod:
            return additive_stat(n, e.k(), req.season, q, req.lags, Weighting::LiMcLeod);
        default:
            throw DomainError("unreachable statistic method");
    }
}

double single(const SeriesMatrix& e, std::size_t m, std::size_t season, Method method) {
    StatRequest req;
    req.lags = {m};
    req.season = season;
    req.method = method;
    req.validate(e.n());
    return evaluate(e, req)[0];
}

}  // namespace

double box_pierce(const SeriesMatrix& e, std::size_t m, std::size_t season) {
    return single(e, m, season, Method::BoxPierce);
}

double ljung_box(const SeriesMatrix& e, std::size_t m, std::size_t season) {
    return single(e, m, season, Method::LjungBox);
}

double hosking(const SeriesMatrix& e, std::size_t m, std::size_t season) {
    return single(e, m, season, Method::Hosking);
}

double li_mcleod(const SeriesMatrix& e, std::size_t m, std::size_t season) {
    return single(e, m, season, Method::LiMcLeod);
}

double mahdi_mcleod(const SeriesMatrix& e, std::size_t m, std::size_t season) {
    return single(e, m, season, Method::MahdiMcLeod);
}

double durbin_watson(const SeriesMatrix& e, std::size_t lag) {
    if (e.k() != 1) throw DomainError("durbin_watson: univariate series required");
    const std::size_t n = e.n();
    if (lag >= n) throw LagTooLarge("durbin_watson: lag >= series length");
    double denom = 0.0;
    for (std::size_t t = 0; t < n; ++t) denom += e(t, 0) * e(t, 0);
    if (denom == 0.0) throw ZeroDenominator("durbin_watson: residual sum of squares is zero");
    double num = 0.0;
    for (std::size_t t = lag; t < n; ++t) {
        const double diff = e(t, 0) - e(t - lag, 0);
        num += diff * diff;
    }
    return num / denom;
}

std::vector<double> custom_statistic(const SeriesMatrix& e,
                                     const std::vector<std::size_t>& lags,
                                     const StatFn& fn) {
    if (!fn) throw DomainError("custom_statistic: callback is empty");
    std::vector<double> out;
    out.reserve(lags.size());
    for (std::size_t m : lags) out.push_back(fn(e, m));
    return out;
}

std::vector<double> statistics_at_lags(const SeriesMatrix& e, const StatRequest& req) {
    req.validate(e.n());
    if (req.squared_residuals) return evaluate(squared_transform(e), req);
    return evaluate(e, req);
}

}  // namespace portes
