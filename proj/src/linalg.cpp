#include "grasstri/linalg.hpp"

#include <cmath>
#include <string>

#include "grasstri/error.hpp"

namespace grasstri {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw DimensionMismatch("matrix entry count " + std::to_string(data_.size()) +
                                " does not match " + std::to_string(rows) + "x" +
                                std::to_string(cols));
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> DenseMatrix::column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void DenseMatrix::set_column(std::size_t c, std::span<const double> values) {
    if (values.size() != rows_) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

double DenseMatrix::trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const double ail = a(i, l);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += ail * b(l, j);
        }
    return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix difference shape mismatch");
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

double max_abs(const DenseMatrix& m) {
    double best = 0.0;
    for (double v : m.entries()) best = std::max(best, std::abs(v));
    return best;
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of unequal lengths");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double euclidean_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw DimensionMismatch("distance between points of dimension " +
                                std::to_string(p.size()) + " and " + std::to_string(q.size()));
    }
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p[i] - q[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Frame::Frame(std::size_t ambient_dim, std::size_t count) : columns_(ambient_dim, count) {}

Frame gram_schmidt(std::span<const std::vector<double>> vectors, double tol) {
    if (vectors.empty()) throw InvalidArgument("gram_schmidt needs at least one vector");
    const std::size_t n = vectors.front().size();
    const std::size_t k = vectors.size();
    if (k > n) throw InvalidArgument("gram_schmidt: more vectors than the ambient dimension");

    Frame frame(n, k);
    std::vector<std::vector<double>> basis;
    basis.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (vectors[i].size() != n) throw DimensionMismatch("gram_schmidt: ragged input vectors");
        std::vector<double> v = vectors[i];
        // Two projection sweeps ("twice is enough").
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis) {
                const double c = dot(q, v);
                for (std::size_t r = 0; r < n; ++r) v[r] -= c * q[r];
            }
        }
        const double len = norm(v);
        if (!(len >= tol)) {
            throw LinearDependence("gram_schmidt: vector " + std::to_string(i) +
                                   " is linearly dependent on its predecessors");
        }
        for (double& x : v) x /= len;
        frame.columns_.set_column(i, v);
        basis.push_back(std::move(v));
    }
    return frame;
}

DenseMatrix random_orthogonal(std::size_t n, Rng& rng) {
    if (n == 0) throw InvalidArgument("random_orthogonal: n must be positive");
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        std::vector<std::vector<double>> cols(n, std::vector<double>(n));
        for (auto& c : cols)
            for (double& x : c) x = gauss(rng);
        try {
            return gram_schmidt(cols).matrix();
        } catch (const LinearDependence&) {
            // measure-zero draw; try again
        }
    }
}

DenseMatrix projection_matrix(const Frame& frame) {
    const DenseMatrix& a = frame.matrix();
    const std::size_t n = a.rows();
    DenseMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < a.cols(); ++c) s += a(i, c) * a(j, c);
            p(i, j) = s;
            p(j, i) = s;
        }
    }
    return p;
}

}  // namespace grasstri
