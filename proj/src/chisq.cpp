#include "portes/chisq.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "portes/errors.hpp"

namespace portes {

double degrees_of_freedom(const DfSpec& spec, std::size_t m) {
    const double k2 = static_cast<double>(spec.k) * static_cast<double>(spec.k);
    const double md = static_cast<double>(m);
    switch (spec.method) {
        case Method::BoxPierce:
        case Method::LjungBox:
        case Method::Hosking:
        case Method::LiMcLeod:
            return k2 * (md - spec.order);
        case Method::MahdiMcLeod:
            return k2 * (1.5 * md * (md + 1.0) / (2.0 * md + 1.0) - spec.order);
        default:
            throw DomainError("degrees_of_freedom: no chi-square law for this method");
    }
}

double log_gamma(double x) {
    if (x <= 0.0) throw DomainError("log_gamma: domain is x > 0");
    // Lanczos, g = 7, 9 coefficients (~15 significant digits).
    static const double c[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    if (x < 0.5) {
        // reflection keeps the approximation on its accurate half-line
        return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double sum = c[0];
    for (int i = 1; i < 9; ++i) sum += c[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

namespace {

// Regularized lower incomplete gamma P(a, x) by series, x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 10000; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by continued fraction, x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - log_gamma(a));
}

}  // namespace

std::optional<double> chisq_upper_tail(double x, double df) {
    if (x < 0.0) throw DomainError("chisq_upper_tail: statistic must be >= 0");
    if (df <= 0.0) return std::nullopt;
    if (x == 0.0) return 1.0;
    const double a = 0.5 * df;
    const double xg = 0.5 * x;
    double q = (xg < a + 1.0) ? 1.0 - gamma_p_series(a, xg) : gamma_q_cf(a, xg);
    if (q < 0.0) q = 0.0;
    if (q > 1.0) q = 1.0;
    return q;
}

}  // namespace portes
