#include "portes/rng.hpp"

#include <cmath>

#include "portes/errors.hpp"

namespace portes {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

double Rng::exponential() { return -std::log(uniform()); }

double Rng::gamma(double shape) {
    if (shape <= 0.0) throw DomainError("gamma: shape must be > 0");
    if (shape < 1.0) {
        // boost to shape+1, then scale back
        const double u = uniform();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double Rng::student_t(int dft) {
    if (dft < 1) throw DomainError("student_t: dft must be a positive integer");
    const double z = normal();
    const double w = chi_square(static_cast<double>(dft));
    return z / std::sqrt(w / static_cast<double>(dft));
}

}  // namespace portes
