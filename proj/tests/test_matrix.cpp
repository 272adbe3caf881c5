#include <doctest.h>

#include <cmath>
#include <vector>

#include "portes/errors.hpp"
#include "portes/matrix.hpp"
#include "portes/rng.hpp"

using namespace portes;

namespace {

// Brute-force determinant by cofactor expansion; independent of the LU path.
double cofactor_det(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    double det = 0.0;
    double sign = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        Matrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = a(i, j);
            }
        }
        det += sign * a(0, c) * cofactor_det(minor);
        sign = -sign;
    }
    return det;
}

Matrix random_matrix(std::size_t n, std::size_t m, Rng& rng) {
    Matrix out(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, j) = 2.0 * rng.uniform() - 1.0;
    return out;
}

}  // namespace

TEST_CASE("matrix construction validates shape and finiteness") {
    CHECK_THROWS_AS(Matrix(0, 2), DomainError);
    CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), DomainError);
    CHECK_THROWS_AS(Matrix(1, 2, {1.0, std::nan("")}), DomainError);
    const Matrix a{{1, 2}, {3, 4}};
    CHECK(a(1, 0) == 3.0);
}

TEST_CASE("cholesky_lower identity and diagonal cases") {
    CHECK(cholesky_lower(identity(2)) == identity(2));
    const Matrix a{{4, 0}, {0, 9}};
    const Matrix l = cholesky_lower(a);
    CHECK(l(0, 0) == doctest::Approx(2.0));
    CHECK(l(1, 1) == doctest::Approx(3.0));
    CHECK(l(0, 1) == 0.0);
}

TEST_CASE("cholesky_lower multiply-back oracle") {
    const Matrix a{{1.0, 0.71}, {0.71, 1.0}};
    const Matrix l = cholesky_lower(a);
    const Matrix back = l * transpose(l);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(back(i, j) == doctest::Approx(a(i, j)).epsilon(1e-12));
}

TEST_CASE("cholesky_lower rejects asymmetric and non-PD inputs") {
    CHECK_THROWS_AS(cholesky_lower(Matrix{{1, 0.5}, {0.2, 1}}), DomainError);
    CHECK_THROWS_AS(cholesky_lower(Matrix{{1, 2}, {2, 1}}), NotPositiveDefinite);
    CHECK_THROWS_AS(cholesky_lower(Matrix{{1, 1}, {1, 1}}), NotPositiveDefinite);
}

TEST_CASE("lu_logdet trivial cases") {
    const LogDet id = lu_logdet(identity(5));
    CHECK(id.sign == 1);
    CHECK(id.log_abs == doctest::Approx(0.0));
    const LogDet d = lu_logdet(Matrix{{2, 0}, {0, 3}});
    CHECK(d.sign == 1);
    CHECK(d.log_abs == doctest::Approx(std::log(6.0)));
    const LogDet s = lu_logdet(Matrix{{1, 1}, {1, 1}});
    CHECK(s.sign == 0);
}

TEST_CASE("lu_logdet matches cofactor expansion on random 6x6") {
    Rng rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix a = random_matrix(6, 6, rng);
        const double det = cofactor_det(a);
        const LogDet ld = lu_logdet(a);
        const double recon = ld.sign * std::exp(ld.log_abs);
        CHECK(recon == doctest::Approx(det).epsilon(1e-9));
    }
}

TEST_CASE("lu_logdet of a PD product equals twice the Cholesky log-diagonal sum") {
    Rng rng(7);
    const Matrix a = random_matrix(4, 4, rng);
    const Matrix pd = a * transpose(a) + identity(4);
    const LogDet ld = lu_logdet(pd);
    CHECK(ld.sign == 1);
    const Matrix l = cholesky_lower(pd);
    double twice = 0.0;
    for (std::size_t i = 0; i < 4; ++i) twice += 2.0 * std::log(l(i, i));
    CHECK(ld.log_abs == doctest::Approx(twice).epsilon(1e-8));
}

TEST_CASE("kronecker products") {
    CHECK(kronecker(identity(2), identity(2)) == identity(4));

    const Matrix a{{1, 2}};
    const Matrix b{{3}, {4}};
    const Matrix ab = kronecker(a, b);
    CHECK(ab.rows() == 2);
    CHECK(ab.cols() == 2);
    CHECK(ab == Matrix{{3, 6}, {4, 8}});

    Rng rng(3);
    const Matrix x = random_matrix(3, 3, rng);
    const Matrix y = random_matrix(2, 2, rng);
    const Matrix k = kronecker(x, y);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t p = 0; p < 2; ++p)
                for (std::size_t q = 0; q < 2; ++q)
                    CHECK(k(i * 2 + p, j * 2 + q) == doctest::Approx(x(i, j) * y(p, q)));

    // tr(a (x) b) = tr(a) tr(b)
    auto trace = [](const Matrix& m) {
        double t = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
        return t;
    };
    CHECK(trace(kronecker(x, y)) == doctest::Approx(trace(x) * trace(y)));
    CHECK(trace(kronecker(y, x)) == doctest::Approx(trace(kronecker(x, y))));
}

TEST_CASE("spectral_radius on known spectra") {
    CHECK(spectral_radius(Matrix{{0.5, 0}, {0, -0.2}}) == doctest::Approx(0.5).epsilon(1e-6));

    // scaled rotation: complex pair of modulus exactly 0.9
    const double th = 0.7;
    const Matrix rot{{0.9 * std::cos(th), -0.9 * std::sin(th)},
                     {0.9 * std::sin(th), 0.9 * std::cos(th)}};
    CHECK(spectral_radius(rot) == doctest::Approx(0.9).epsilon(1e-6));

    // companion of (0.7, -0.3, 0.6) has a unit root
    const Matrix comp{{0.7, -0.3, 0.6}, {1, 0, 0}, {0, 1, 0}};
    CHECK(spectral_radius(comp) == doctest::Approx(1.0).epsilon(1e-6));

    CHECK(spectral_radius(Matrix{{0.0}}) == 0.0);
    CHECK(spectral_radius(Matrix{{0, 1}, {0, 0}}) == 0.0);  // nilpotent
}

TEST_CASE("spectral_radius is absolutely homogeneous") {
    Rng rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix a = random_matrix(4, 4, rng);
        const double r = spectral_radius(a);
        const double c = 4.0 * rng.uniform() - 2.0;
        CHECK(spectral_radius(c * a) == doctest::Approx(std::abs(c) * r).epsilon(1e-5));
    }
}

TEST_CASE("solve trivial and residual-oracle cases") {
    const Matrix b{{2}, {8}};
    CHECK(solve(identity(2), b) == b);
    const Matrix x = solve(Matrix{{2, 0}, {0, 4}}, b);
    CHECK(x(0, 0) == doctest::Approx(1.0));
    CHECK(x(1, 0) == doctest::Approx(2.0));

    Rng rng(19);
    const Matrix a = random_matrix(5, 5, rng) + 5.0 * identity(5);
    const Matrix rhs = random_matrix(5, 2, rng);
    const Matrix sol = solve(a, rhs);
    const Matrix back = a * sol;
    double err = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            err += (back(i, j) - rhs(i, j)) * (back(i, j) - rhs(i, j));
            scale += rhs(i, j) * rhs(i, j);
        }
    CHECK(std::sqrt(err / scale) < 1e-9);

    CHECK_THROWS_AS(solve(Matrix{{1, 1}, {1, 1}}, b), Singular);
}
