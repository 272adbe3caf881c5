#pragma once

#include <cstddef>
#include <vector>

#include "portes/acf.hpp"
#include "portes/matrix.hpp"
#include "portes/rng.hpp"
#include "portes/stable.hpp"

namespace portes {

enum class InnovKind { Gaussian, StudentT, Stable, Bootstrap };

/// Generator of innovation panels for simulators and the Monte Carlo engine.
///
/// Gaussian and t draws are colored by the Cholesky factor of the supplied
/// covariance; t draws with dft > 2 are rescaled so the panel covariance
/// matches it (for dft <= 2 the raw colored draws are used, since no finite
/// covariance exists to match). Stable components are mutually independent.
/// Bootstrap draws whole rows of the donor panel with replacement.
class InnovationSource {
public:
    static InnovationSource gaussian(const Matrix& sigma);
    static InnovationSource student_t(int dft, const Matrix& sigma);
    static InnovationSource stable(std::vector<StableParams> params);
    static InnovationSource bootstrap(SeriesMatrix donor);

    InnovKind kind() const { return kind_; }
    std::size_t k() const { return k_; }

    SeriesMatrix draw(std::size_t n, Rng& rng) const;

private:
    InnovationSource() = default;

    InnovKind kind_ = InnovKind::Gaussian;
    std::size_t k_ = 1;
    Matrix chol_;       // lower Cholesky factor of sigma (Gaussian / t)
    double t_scale_ = 1.0;
    int dft_ = 5;
    std::vector<StableParams> stable_;
    SeriesMatrix donor_;
};

}  // namespace portes
