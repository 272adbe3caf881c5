#include "portes/stable.hpp"

#include <algorithm>
#include <cmath>

#include "portes/errors.hpp"
#include "stable_tables.hpp"

namespace portes {

void StableParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw InvalidAlpha("stable alpha must be in (0, 2]");
    if (!(beta >= -1.0 && beta <= 1.0))
        throw InvalidBeta("stable beta must be in [-1, 1]");
    if (!(scale > 0.0)) throw StableParamsInvalid("stable scale must be > 0");
    if (!std::isfinite(location)) throw StableParamsInvalid("stable location must be finite");
}

double rstable_draw(const StableParams& p, Rng& rng) {
    const double u = M_PI * (rng.uniform() - 0.5);  // uniform angle in (-pi/2, pi/2)
    const double w = rng.exponential();
    const double a = p.alpha;
    const double b = p.beta;
    double x;
    if (a != 1.0) {
        const double ta = std::tan(0.5 * M_PI * a);
        const double b0 = std::atan(b * ta) / a;
        const double s = std::pow(1.0 + b * b * ta * ta, 0.5 / a);
        x = s * std::sin(a * (u + b0)) / std::pow(std::cos(u), 1.0 / a) *
            std::pow(std::cos(u - a * (u + b0)) / w, (1.0 - a) / a);
        return p.scale * x + p.location;
    }
    const double h = 0.5 * M_PI + b * u;
    x = (2.0 / M_PI) * (h * std::tan(u) - b * std::log(0.5 * M_PI * w * std::cos(u) / h));
    return p.scale * x + (2.0 / M_PI) * b * p.scale * std::log(p.scale) + p.location;
}

SeriesMatrix rstable(std::size_t n, const std::vector<StableParams>& params, Rng& rng) {
    if (params.empty()) throw DomainError("rstable: no component parameters");
    for (const auto& p : params) p.validate();
    SeriesMatrix out(n, params.size());
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < params.size(); ++i)
            out(t, i) = rstable_draw(params[i], rng);
    return out;
}

namespace {

template <std::size_t R, std::size_t C>
double bilinear(const std::array<double, R>& rows, const std::array<double, C>& cols,
                const std::array<std::array<double, C>, R>& tab, double x, double y) {
    x = std::clamp(x, rows.front(), rows.back());
    y = std::clamp(y, cols.front(), cols.back());
    std::size_t i = 0;
    while (i + 2 < R && rows[i + 1] <= x) ++i;
    std::size_t j = 0;
    while (j + 2 < C && cols[j + 1] <= y) ++j;
    const double tx = (x - rows[i]) / (rows[i + 1] - rows[i]);
    const double ty = (y - cols[j]) / (cols[j + 1] - cols[j]);
    return (1 - tx) * (1 - ty) * tab[i][j] + tx * (1 - ty) * tab[i + 1][j] +
           (1 - tx) * ty * tab[i][j + 1] + tx * ty * tab[i + 1][j + 1];
}

// Type-7 quantile (linear interpolation of order statistics) on sorted data.
double quantile_sorted(const std::vector<double>& xs, double p) {
    const std::size_t n = xs.size();
    const double h = static_cast<double>(n - 1) * p;
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return xs.back();
    return xs[lo] + (h - static_cast<double>(lo)) * (xs[lo + 1] - xs[lo]);
}

StableParams fit_column(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const double q05 = quantile_sorted(xs, 0.05);
    const double q25 = quantile_sorted(xs, 0.25);
    const double q50 = quantile_sorted(xs, 0.50);
    const double q75 = quantile_sorted(xs, 0.75);
    const double q95 = quantile_sorted(xs, 0.95);
    const double iqr = q75 - q25;
    if (iqr <= 0.0) throw DegenerateQuantiles("fitstable: interquartile range is zero");

    const double nu_alpha = (q95 - q05) / iqr;
    const double nu_beta = (q95 + q05 - 2.0 * q50) / (q95 - q05);
    const double sign = nu_beta < 0.0 ? -1.0 : 1.0;

    using namespace detail;
    double alpha = bilinear(kAlphaTable_rows, kAlphaTable_cols, kAlphaTable, nu_alpha,
                            std::abs(nu_beta));
    double beta =
        sign * bilinear(kBetaTable_rows, kBetaTable_cols, kBetaTable, nu_alpha,
                        std::abs(nu_beta));
    alpha = std::clamp(alpha, 0.5, 2.0);
    beta = std::clamp(beta, -1.0, 1.0);

    const double scale =
        iqr / bilinear(kIqrTable_rows, kIqrTable_cols, kIqrTable, alpha, std::abs(beta));
    const double shift = (beta < 0.0 ? -1.0 : 1.0) *
                         bilinear(kShiftTable_rows, kShiftTable_cols, kShiftTable, alpha,
                                  std::abs(beta));
    // median plus the tabulated shift gives the zeta form; undo the tangent
    // correction to return the S1 location
    const double zeta = q50 + scale * shift;
    double location = zeta;
    if (alpha != 1.0) location = zeta - beta * scale * std::tan(0.5 * M_PI * alpha);

    return StableParams{alpha, beta, scale, location};
}

}  // namespace

std::vector<StableParams> fitstable(const SeriesMatrix& x) {
    if (x.n() < 50)
        throw DomainError("fitstable: needs at least 50 observations per column");
    std::vector<StableParams> out;
    out.reserve(x.k());
    for (std::size_t i = 0; i < x.k(); ++i) {
        std::vector<double> col(x.n());
        for (std::size_t t = 0; t < x.n(); ++t) col[t] = x(t, i);
        out.push_back(fit_column(std::move(col)));
    }
    return out;
}

}  // namespace portes
