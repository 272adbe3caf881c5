#include "portes/varima.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "portes/errors.hpp"

namespace portes {

void VarimaSpec::validate() const {
    if (k < 1) throw DomainError("varima: dimension must be >= 1");
    auto check_arr = [this](const CoeffArray& c, const char* name) {
        c.validate();
        if (c.order() > 0 && c.k != k)
            throw DomainError(std::string("varima: ") + name + " dimension mismatch");
    };
    check_arr(ar, "ar");
    check_arr(ma, "ma");
    check_arr(ar_season, "ar.season");
    check_arr(ma_season, "ma.season");
    auto check_vec = [this](const auto& v, const char* name) {
        if (!v.empty() && v.size() != k)
            throw DomainError(std::string("varima: ") + name + " must have k entries");
    };
    check_vec(d, "d");
    check_vec(d_season, "d.season");
    check_vec(constant, "constant");
    check_vec(trend, "trend");
    check_vec(demean, "demean");
    for (int v : d)
        if (v < 0) throw DomainError("varima: differencing orders must be >= 0");
    for (int v : d_season)
        if (v < 0) throw DomainError("varima: seasonal differencing orders must be >= 0");
    const bool seasonal =
        ar_season.order() > 0 || ma_season.order() > 0 ||
        std::any_of(d_season.begin(), d_season.end(), [](int v) { return v > 0; });
    if (seasonal && period < 2)
        throw DomainError("varima: seasonal terms require period >= 2");
    if (trunc_lag && *trunc_lag < 1) throw DomainError("varima: trunc_lag must be >= 1");
}

CoeffArray expand_seasonal(const CoeffArray& base, const CoeffArray& seasonal,
                           std::size_t s) {
    base.validate();
    seasonal.validate();
    if (base.order() == 0) {
        if (seasonal.order() == 0) return base;
        // pure seasonal polynomial: matrices at lags s, 2s, ...
        CoeffArray out = CoeffArray::empty(seasonal.k);
        out.mats.assign(seasonal.order() * s, Matrix(seasonal.k, seasonal.k));
        for (std::size_t j = 1; j <= seasonal.order(); ++j)
            out.mats[j * s - 1] = seasonal.mats[j - 1];
        return out;
    }
    if (seasonal.order() == 0) return base;
    if (base.k != seasonal.k)
        throw DomainError("expand_seasonal: dimension mismatch");

    const std::size_t p = base.order();
    const std::size_t ps = seasonal.order();
    CoeffArray out = CoeffArray::empty(base.k);
    out.mats.assign(p + ps * s, Matrix(base.k, base.k));
    // (I - sum A_i B^i)(I - sum S_j B^(js)) =
    //   I - sum A_i B^i - sum S_j B^(js) + sum A_i S_j B^(i+js)
    for (std::size_t i = 1; i <= p; ++i) out.mats[i - 1] = out.mats[i - 1] + base.mats[i - 1];
    for (std::size_t j = 1; j <= ps; ++j)
        out.mats[j * s - 1] = out.mats[j * s - 1] + seasonal.mats[j - 1];
    for (std::size_t i = 1; i <= p; ++i)
        for (std::size_t j = 1; j <= ps; ++j)
            out.mats[i + j * s - 1] =
                out.mats[i + j * s - 1] - base.mats[i - 1] * seasonal.mats[j - 1];
    return out;
}

std::vector<Matrix> impulse_vma(const CoeffArray& phi, const CoeffArray& theta,
                                std::size_t trunc) {
    phi.validate();
    theta.validate();
    if (trunc < 1) throw DomainError("impulse_vma: truncation must be >= 1");
    const std::size_t k = phi.order() > 0 ? phi.k : theta.k;
    const std::size_t p = phi.order();
    const std::size_t q = theta.order();

    std::vector<Matrix> psi;
    psi.reserve(trunc + 1);
    psi.push_back(identity(k));  // Psi_0
    for (std::size_t j = 1; j <= trunc; ++j) {
        Matrix m(k, k);
        if (j <= q) m = m - theta.mats[j - 1];
        for (std::size_t i = 1; i <= p && i <= j; ++i)
            m = m + phi.mats[i - 1] * psi[j - i];
        psi.push_back(m);
    }
    psi.erase(psi.begin());
    return psi;
}

std::size_t default_trunc(std::size_t n) {
    if (n < 1) throw DomainError("default_trunc: n must be >= 1");
    const std::size_t third = (n + 2) / 3;  // ceil(n/3)
    return std::min<std::size_t>(100, third);
}

namespace {

void cumsum_in_place(std::vector<double>& x, std::size_t stride) {
    for (std::size_t t = stride; t < x.size(); ++t) x[t] += x[t - stride];
}

}  // namespace

SeriesMatrix integrate_differences(const SeriesMatrix& w, const std::vector<int>& d,
                                   const std::vector<int>& d_season, std::size_t s) {
    const std::size_t n = w.n();
    const std::size_t k = w.k();
    SeriesMatrix out = w;
    for (std::size_t i = 0; i < k; ++i) {
        const int di = i < d.size() ? d[i] : 0;
        const int dsi = i < d_season.size() ? d_season[i] : 0;
        if (di == 0 && dsi == 0) continue;
        std::vector<double> col(n);
        for (std::size_t t = 0; t < n; ++t) col[t] = out(t, i);
        for (int r = 0; r < di; ++r) cumsum_in_place(col, 1);
        for (int r = 0; r < dsi; ++r) cumsum_in_place(col, s);
        for (std::size_t t = 0; t < n; ++t) out(t, i) = col[t];
    }
    return out;
}

SeriesMatrix varima_sim(const VarimaSpec& spec, std::size_t n,
                        const InnovationSource& src, Rng& rng) {
    spec.validate();
    if (n < 1) throw DomainError("varima_sim: n must be >= 1");
    const std::size_t k = spec.k;
    if (src.k() != k) throw DomainError("varima_sim: innovation dimension mismatch");

    CoeffArray ma = spec.ma;
    CoeffArray ma_season = spec.ma_season;
    if (spec.ma_plus_convention && k == 1) {
        for (Matrix& m : ma.mats) m = -1.0 * m;
        for (Matrix& m : ma_season.mats) m = -1.0 * m;
    }

    const CoeffArray phi = expand_seasonal(spec.ar, spec.ar_season, spec.period);
    const CoeffArray theta = expand_seasonal(ma, ma_season, spec.period);
    if (invertq(phi) == Admissibility::Violated)
        throw NonStationary("varima_sim: check stationary/invertibility condition !");
    if (invertq(theta) == Admissibility::Violated)
        throw NonInvertible("varima_sim: check stationary/invertibility condition !");

    const std::size_t trunc = spec.trunc_lag ? *spec.trunc_lag : default_trunc(n);
    const std::vector<Matrix> psi = impulse_vma(phi, theta, trunc);

    // innovation prehistory: the trunc pre-sample draws come from the same
    // source so the first output point is already (approximately) stationary
    const SeriesMatrix e = src.draw(n + trunc, rng);

    Matrix w(n, k);
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t te = t + trunc;  // index of e_t in the extended panel
        for (std::size_t i = 0; i < k; ++i) {
            double acc = e(te, i);
            if (!spec.demean.empty()) acc += spec.demean[i];
            if (!spec.constant.empty()) acc += spec.constant[i];
            if (!spec.trend.empty()) acc += spec.trend[i] * static_cast<double>(t + 1);
            w(t, i) = acc;
        }
        for (std::size_t j = 1; j <= trunc; ++j) {
            const Matrix& pj = psi[j - 1];
            for (std::size_t i = 0; i < k; ++i) {
                double acc = 0.0;
                for (std::size_t l = 0; l < k; ++l) acc += pj(i, l) * e(te - j, l);
                w(t, i) += acc;
            }
        }
    }

    return integrate_differences(SeriesMatrix(w), spec.d, spec.d_season, spec.period);
}

}  // namespace portes
