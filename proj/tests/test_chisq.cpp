#include <doctest.h>

#include <cmath>

#include "portes/chisq.hpp"
#include "portes/errors.hpp"

using namespace portes;

TEST_CASE("log_gamma known values") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-13));
    CHECK(log_gamma(6.0) == doctest::Approx(std::log(120.0)).epsilon(1e-13));
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}

TEST_CASE("log_gamma tracks the standard library across its range") {
    for (double x : {1e-3, 0.02, 0.4, 1.3, 2.7, 9.9, 123.4, 5678.0, 1e6}) {
        CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
    }
}

TEST_CASE("degrees_of_freedom formulas") {
    CHECK(degrees_of_freedom({1, 0, Method::MahdiMcLeod}, 5) ==
          doctest::Approx(45.0 / 11.0).epsilon(1e-12));
    CHECK(degrees_of_freedom({4, 1, Method::MahdiMcLeod}, 4) ==
          doctest::Approx(37.33333333).epsilon(1e-8));
    CHECK(degrees_of_freedom({1, 2, Method::LjungBox}, 10) == doctest::Approx(8.0));
    CHECK(degrees_of_freedom({2, 3, Method::BoxPierce}, 5) == doctest::Approx(8.0));
    // may be negative; handled downstream
    CHECK(degrees_of_freedom({1, 11, Method::MahdiMcLeod}, 5) < 0.0);
    CHECK_THROWS_AS(degrees_of_freedom({1, 0, Method::DurbinWatson}, 5), DomainError);
}

TEST_CASE("chisq_upper_tail trivial and paper-grade values") {
    CHECK(chisq_upper_tail(0.0, 3.0) == 1.0);
    CHECK(*chisq_upper_tail(5.726436, 4.090909) == doctest::Approx(0.2302146).epsilon(1e-6));
    CHECK(*chisq_upper_tail(5.661285, 0.6129032) ==
          doctest::Approx(0.008190694).epsilon(1e-5));
    CHECK_FALSE(chisq_upper_tail(1.0, 0.0).has_value());
    CHECK_FALSE(chisq_upper_tail(1.0, -2.5).has_value());
    CHECK_THROWS_AS(chisq_upper_tail(-1.0, 3.0), DomainError);
}

TEST_CASE("chisq_upper_tail matches the closed form for even integer df") {
    // Q(x; 2k) = exp(-x/2) * sum_{j<k} (x/2)^j / j!
    for (double x : {0.5, 2.0, 7.3, 15.0}) {
        for (int k : {1, 2, 5}) {
            double sum = 0.0;
            double term = 1.0;
            for (int j = 0; j < k; ++j) {
                if (j > 0) term *= (0.5 * x) / j;
                sum += term;
            }
            const double expected = std::exp(-0.5 * x) * sum;
            CHECK(*chisq_upper_tail(x, 2.0 * k) == doctest::Approx(expected).epsilon(1e-10));
        }
    }
}

namespace {

// Trapezoid quadrature of the chi-square density on [x, x+60]; the remaining
// tail mass beyond the cut is below 1e-13 for the df used here.
double quadrature_upper_tail(double x, double df) {
    const double a = 0.5 * df;
    const double logc = -a * std::log(2.0) - log_gamma(a);
    auto density = [&](double t) {
        return std::exp(logc + (a - 1.0) * std::log(t) - 0.5 * t);
    };
    const int n = 1000000;
    const double hi = x + 60.0;
    const double h = (hi - x) / n;
    double sum = 0.5 * (density(x) + density(hi));
    for (int i = 1; i < n; ++i) sum += density(x + i * h);
    return sum * h;
}

}  // namespace

TEST_CASE("series / continued-fraction crossover is seamless") {
    // the implementation switches regimes at x = df + 2
    const double df = 3.7;
    for (double x : {df + 2.0 - 0.01, df + 2.0 + 0.01, df + 2.0}) {
        CHECK(*chisq_upper_tail(x, df) ==
              doctest::Approx(quadrature_upper_tail(x, df)).epsilon(1e-7));
    }
}

TEST_CASE("chisq_upper_tail monotonicity and bounds") {
    double prev = 1.0;
    for (double x = 0.0; x <= 30.0; x += 0.5) {
        const double p = *chisq_upper_tail(x, 4.2);
        CHECK(p <= prev + 1e-15);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        prev = p;
    }
    double prev_df = 0.0;
    for (double df = 0.5; df <= 20.0; df += 0.5) {
        const double p = *chisq_upper_tail(6.0, df);
        CHECK(p > prev_df);
        prev_df = p;
    }
}
