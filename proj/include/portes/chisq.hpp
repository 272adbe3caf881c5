#pragma once

#include <optional>

namespace portes {

/// Statistic selector shared by the statistics, asymptotic and Monte Carlo
/// layers.
enum class Method {
    BoxPierce,
    LjungBox,
    Hosking,
    LiMcLeod,
    MahdiMcLeod,
    DurbinWatson,
    Custom,
};

struct DfSpec {
    std::size_t k = 1;  ///< series dimension
    double order = 0;   ///< fitted-order total p + q + ps + qs
    Method method = Method::MahdiMcLeod;
};

/// Chi-square degrees of freedom at lag m for the given statistic. May be
/// non-integer (the generalized-variance statistic almost always is) and may
/// be <= 0; non-positive df is handled by the caller (p-value undefined).
/// Throws DomainError for methods without an asymptotic chi-square law.
double degrees_of_freedom(const DfSpec& spec, std::size_t m);

/// ln Gamma(x) for x > 0, accurate to ~1e-13 relative on [1e-3, 1e6].
/// Throws DomainError for x <= 0.
double log_gamma(double x);

/// Upper-tail chi-square probability P(X >= x) with (possibly fractional)
/// df degrees of freedom. Returns nullopt when df <= 0, where the asymptotic
/// p-value is undefined.
std::optional<double> chisq_upper_tail(double x, double df);

}  // namespace portes
