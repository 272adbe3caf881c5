#include "portes/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "portes/errors.hpp"

namespace portes {

namespace {

void check_finite(const std::vector<double>& data) {
    for (double v : data) {
        if (!std::isfinite(v)) throw DomainError("matrix entry is not finite");
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be >= 1");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be >= 1");
    if (data_.size() != rows * cols) throw DomainError("matrix data length mismatch");
    check_finite(data_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) throw DomainError("matrix dimensions must be >= 1");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DomainError("ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
    check_finite(data_);
}

Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("matrix shape mismatch in +");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("matrix shape mismatch in -");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch in *");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const double ail = a(i, l);
            if (ail == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += ail * b(l, j);
        }
    }
    return out;
}

Matrix operator*(double c, const Matrix& a) {
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= c;
    return out;
}

Matrix cholesky_lower(const Matrix& a) {
    if (!a.square()) throw DomainError("cholesky_lower: matrix not square");
    const std::size_t n = a.rows();

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(a(i, j) - a(j, i)) > 1e-10 * std::max(scale, 1.0))
                throw DomainError("cholesky_lower: matrix not symmetric");
        }
    }

    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, a(i, i));
    const double pivot_floor = 1e-12 * std::max(max_diag, 1e-300);

    Matrix L(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t l = 0; l < j; ++l) d -= L(j, l) * L(j, l);
        if (d <= pivot_floor) throw NotPositiveDefinite("cholesky_lower: pivot not positive");
        const double ljj = std::sqrt(d);
        L(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t l = 0; l < j; ++l) s -= L(i, l) * L(j, l);
            L(i, j) = s / ljj;
        }
    }
    return L;
}

namespace {

// In-place LU with partial pivoting. Returns false if a pivot underflows
// (|pivot| < 1e-300); `sign` tracks row swaps.
bool lu_decompose(Matrix& a, std::vector<std::size_t>& perm, int& sign) {
    const std::size_t n = a.rows();
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        double best = std::abs(a(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (std::abs(a(i, col)) > best) {
                best = std::abs(a(i, col));
                pivot_row = i;
            }
        }
        if (best < 1e-300) return false;
        if (pivot_row != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot_row, j));
            std::swap(perm[col], perm[pivot_row]);
            sign = -sign;
        }
        const double inv_pivot = 1.0 / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            const double f = a(i, col) * inv_pivot;
            a(i, col) = f;
            for (std::size_t j = col + 1; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return true;
}

}  // namespace

LogDet lu_logdet(const Matrix& a) {
    if (!a.square()) throw DomainError("lu_logdet: matrix not square");
    Matrix lu = a;
    std::vector<std::size_t> perm;
    int sign = 0;
    if (!lu_decompose(lu, perm, sign)) return {0.0, 0};
    double log_abs = 0.0;
    for (std::size_t i = 0; i < lu.rows(); ++i) {
        const double p = lu(i, i);
        if (p < 0.0) sign = -sign;
        log_abs += std::log(std::abs(p));
    }
    return {log_abs, sign};
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

double spectral_radius(const Matrix& a) {
    if (!a.square()) throw DomainError("spectral_radius: matrix not square");
    const std::size_t n = a.rows();

    auto frobenius = [n](const Matrix& m) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s += m(i, j) * m(i, j);
        return std::sqrt(s);
    };

    double norm = frobenius(a);
    if (norm == 0.0) return 0.0;
    Matrix b = (1.0 / norm) * a;
    double log_rho = std::log(norm);

    // rho(a) = lim ||a^(2^j)||^(1/2^j). After each squaring the implicit
    // power doubles, so the running log estimate halves in weight. 48
    // squarings put the polynomial-growth term of a defective eigenvalue
    // below 1e-12; 12 would leave ~1e-4 of it.
    constexpr int kSquarings = 48;
    for (int j = 0; j < kSquarings; ++j) {
        b = b * b;
        norm = frobenius(b);
        if (norm == 0.0) return 0.0;  // nilpotent
        b = (1.0 / norm) * b;
        log_rho += std::log(norm) / static_cast<double>(1ull << (j + 1));
    }
    return std::exp(log_rho);
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (!a.square()) throw DomainError("solve: matrix not square");
    if (a.rows() != b.rows()) throw DomainError("solve: shape mismatch");
    const std::size_t n = a.rows();
    Matrix lu = a;
    std::vector<std::size_t> perm;
    int sign = 0;
    if (!lu_decompose(lu, perm, sign)) throw Singular("solve: matrix is singular");

    Matrix x(n, b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        // forward substitution on permuted rhs (L has unit diagonal)
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            double s = b(perm[i], c);
            for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * y[j];
            y[i] = s;
        }
        for (std::size_t ii = n; ii-- > 0;) {
            double s = y[ii];
            for (std::size_t j = ii + 1; j < n; ++j) s -= lu(ii, j) * x(j, c);
            x(ii, c) = s / lu(ii, ii);
        }
    }
    return x;
}

}  // namespace portes
