#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace portes {

/// Dense row-major matrix of doubles.
///
/// This is the minimal kernel shared by every numeric module: residual
/// autocovariances, coefficient matrices, companion matrices and innovation
/// covariances are all small dense matrices, so no sparse or decomposed
/// storage is provided.
class Matrix {
public:
    Matrix() = default;

    /// rows x cols, zero-filled.
    Matrix(std::size_t rows, std::size_t cols);

    /// rows x cols from row-major data; throws DomainError on NaN/Inf
    /// entries or a size mismatch.
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    /// Brace construction from rows, e.g. Matrix{{1,2},{3,4}}.
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix identity(std::size_t n);
Matrix transpose(const Matrix& a);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double c, const Matrix& a);

/// Lower-triangular L with L*L' = a.
///
/// a must be square and symmetric to 1e-10 relative tolerance. Throws
/// NotPositiveDefinite when a pivot falls below 1e-12 times the largest
/// diagonal entry.
Matrix cholesky_lower(const Matrix& a);

struct LogDet {
    double log_abs;  ///< log |det a|; meaningful only when sign != 0
    int sign;        ///< +1, -1, or 0 when singular
};

/// Determinant of a square matrix in log-magnitude + sign form, via LU with
/// partial pivoting. Carrying the log avoids overflow on the k(m+1)-sized
/// block-Toeplitz matrices fed to the generalized-variance statistic.
LogDet lu_logdet(const Matrix& a);

/// Kronecker product: (p*r) x (q*s) with block (i,j) = a(i,j) * b.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Spectral radius of a square matrix.
///
/// Computed as the Gelfand limit ||a^(2^j)||^(1/2^j) by repeated squaring
/// with per-step renormalization. Robust for the real companion matrices
/// encountered here, including dominant complex pairs, without a full
/// eigensolver.
double spectral_radius(const Matrix& a);

/// Solve a*x = b for square nonsingular a (LU, partial pivoting).
/// Throws Singular when a pivot underflows.
Matrix solve(const Matrix& a, const Matrix& b);

}  // namespace portes
