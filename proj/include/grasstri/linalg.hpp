#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

namespace grasstri {

/// Random source used throughout the library. Every sampler takes one by
/// reference; seeding it identically reproduces results bit for bit.
using Rng = std::mt19937_64;

namespace tolerance {
inline constexpr double orthonormal = 1e-10;
inline constexpr double idempotent = 1e-9;
inline constexpr double unit_norm = 1e-10;
/// Default residual threshold below which Gram-Schmidt reports dependence.
inline constexpr double dependence = 1e-8;
}  // namespace tolerance

/// Row-major dense real matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> entries() const noexcept { return data_; }
    std::span<double> entries() noexcept { return data_; }

    std::vector<double> column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const double> values);

    DenseMatrix transpose() const;
    double trace() const;

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Largest absolute entry.
double max_abs(const DenseMatrix& m);

/// Orthonormal k-frame in R^n, stored as the n x k matrix of its columns.
class Frame {
public:
    Frame(std::size_t ambient_dim, std::size_t count);

    std::size_t ambient_dim() const noexcept { return columns_.rows(); }
    std::size_t count() const noexcept { return columns_.cols(); }
    const DenseMatrix& matrix() const noexcept { return columns_; }
    std::vector<double> column(std::size_t i) const { return columns_.column(i); }

private:
    friend Frame gram_schmidt(std::span<const std::vector<double>>, double);
    DenseMatrix columns_;
};

/// Modified Gram-Schmidt with one re-orthogonalization pass. Throws
/// LinearDependence when a residual norm falls below `tol`.
Frame gram_schmidt(std::span<const std::vector<double>> vectors,
                   double tol = tolerance::dependence);

/// Haar-distributed n x n orthogonal matrix: Gram-Schmidt of a Gaussian
/// matrix, which is QR with a positive-diagonal triangular factor.
DenseMatrix random_orthogonal(std::size_t n, Rng& rng);

/// A A^T for the frame matrix A. The result is exactly symmetric.
DenseMatrix projection_matrix(const Frame& frame);

double euclidean_distance(std::span<const double> p, std::span<const double> q);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

}  // namespace grasstri
