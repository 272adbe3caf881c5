#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "portes/acf.hpp"
#include "portes/innovations.hpp"
#include "portes/var_model.hpp"

namespace portes {

/// Specification of a seasonal/nonseasonal VARIMA process.
///
/// Both the AR and MA operators use the minus convention
/// I - A_1 B - ... - A_p B^p. Set `ma_plus_convention` to accept univariate
/// moving-average coefficients written in the plus convention
/// 1 + theta_1 B + ...; they are negated on entry.
struct VarimaSpec {
    std::size_t k = 1;
    CoeffArray ar = CoeffArray::empty(1);
    CoeffArray ma = CoeffArray::empty(1);
    CoeffArray ar_season = CoeffArray::empty(1);
    CoeffArray ma_season = CoeffArray::empty(1);
    std::vector<int> d;         ///< per-component differencing orders (empty = zeros)
    std::vector<int> d_season;  ///< per-component seasonal differencing orders
    std::size_t period = 1;
    std::vector<double> constant;  ///< drift a (empty = zeros)
    std::vector<double> trend;     ///< trend b
    std::vector<double> demean;    ///< mean mu
    std::optional<std::size_t> trunc_lag;
    bool ma_plus_convention = false;

    void validate() const;
};

/// Polynomial product of (I - sum A_i B^i) and (I - sum S_j B^(j*s)); the
/// result has lag matrices 1 .. p + s*ps. Empty inputs act as identity
/// polynomials.
CoeffArray expand_seasonal(const CoeffArray& base, const CoeffArray& seasonal,
                           std::size_t s);

/// Impulse response matrices Psi_1..Psi_T of the infinite moving-average
/// form, from Psi_j = -Theta_j + sum_{i<=min(j,p)} Phi_i Psi_{j-i} with
/// Psi_0 = I.
std::vector<Matrix> impulse_vma(const CoeffArray& phi, const CoeffArray& theta,
                                std::size_t trunc);

/// Default truncation point of the moving-average filter: min(100, ceil(n/3)).
std::size_t default_trunc(std::size_t n);

/// Invert the differencing operator: per component, d_i rounds of cumulative
/// summation and ds_i rounds of seasonal (stride s) cumulative summation,
/// with zero initial conditions.
SeriesMatrix integrate_differences(const SeriesMatrix& w, const std::vector<int>& d,
                                   const std::vector<int>& d_season, std::size_t s);

/// Simulate n points of the specified process: draw n + T innovations, run
/// the truncated moving-average filter around the mean, add the
/// deterministic part a + b*t on the differenced scale, then integrate.
/// Throws NonStationary / NonInvertible when the expanded operators fail
/// the companion check.
SeriesMatrix varima_sim(const VarimaSpec& spec, std::size_t n,
                        const InnovationSource& src, Rng& rng);

}  // namespace portes
