#include "portes/innovations.hpp"

#include <cmath>
#include <utility>

#include "portes/errors.hpp"

namespace portes {

InnovationSource InnovationSource::gaussian(const Matrix& sigma) {
    InnovationSource src;
    src.kind_ = InnovKind::Gaussian;
    src.k_ = sigma.rows();
    try {
        src.chol_ = cholesky_lower(sigma);
    } catch (const NotPositiveDefinite&) {
        throw CovarianceSingular("innovation covariance not positive definite");
    }
    return src;
}

InnovationSource InnovationSource::student_t(int dft, const Matrix& sigma) {
    if (dft < 1) throw DomainError("t innovations require a positive integer dft");
    InnovationSource src = gaussian(sigma);
    src.kind_ = InnovKind::StudentT;
    src.dft_ = dft;
    src.t_scale_ =
        dft > 2 ? std::sqrt((static_cast<double>(dft) - 2.0) / static_cast<double>(dft)) : 1.0;
    return src;
}

InnovationSource InnovationSource::stable(std::vector<StableParams> params) {
    if (params.empty()) throw DomainError("stable innovations require parameters");
    for (const auto& p : params) p.validate();
    InnovationSource src;
    src.kind_ = InnovKind::Stable;
    src.k_ = params.size();
    src.stable_ = std::move(params);
    return src;
}

InnovationSource InnovationSource::bootstrap(SeriesMatrix donor) {
    if (donor.n() == 0) throw DomainError("bootstrap innovations require a donor panel");
    InnovationSource src;
    src.kind_ = InnovKind::Bootstrap;
    src.k_ = donor.k();
    src.donor_ = std::move(donor);
    return src;
}

SeriesMatrix InnovationSource::draw(std::size_t n, Rng& rng) const {
    SeriesMatrix out(n, k_);
    std::vector<double> z(k_);
    switch (kind_) {
        case InnovKind::Gaussian:
        case InnovKind::StudentT: {
            for (std::size_t t = 0; t < n; ++t) {
                for (std::size_t i = 0; i < k_; ++i)
                    z[i] = kind_ == InnovKind::Gaussian ? rng.normal() : rng.student_t(dft_);
                for (std::size_t i = 0; i < k_; ++i) {
                    double s = 0.0;
                    for (std::size_t j = 0; j <= i; ++j) s += chol_(i, j) * z[j];
                    out(t, i) = t_scale_ * s;
                }
            }
            break;
        }
        case InnovKind::Stable:
            for (std::size_t t = 0; t < n; ++t)
                for (std::size_t i = 0; i < k_; ++i) out(t, i) = rstable_draw(stable_[i], rng);
            break;
        case InnovKind::Bootstrap:
            for (std::size_t t = 0; t < n; ++t) {
                const std::size_t row = rng.uniform_index(donor_.n());
                for (std::size_t i = 0; i < k_; ++i) out(t, i) = donor_(row, i);
            }
            break;
    }
    return out;
}

}  // namespace portes
