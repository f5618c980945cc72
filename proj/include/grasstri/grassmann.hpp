#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "grasstri/betti.hpp"
#include "grasstri/linalg.hpp"
#include "grasstri/point_cloud.hpp"

namespace grasstri {

/// G_k(R^n): k-planes through the origin of R^n.
struct GrassmannParams {
    int n = 0;
    int k = 0;

    GrassmannParams() = default;
    GrassmannParams(int n, int k);

    /// Manifold dimension k(n-k).
    int dimension() const noexcept { return k * (n - k); }

    friend bool operator==(const GrassmannParams&, const GrassmannParams&) = default;
};

/// Strictly increasing 1-based tuple (s_1 < ... < s_k) naming a Schubert cell.
class SchubertSymbol {
public:
    explicit SchubertSymbol(std::vector<int> entries);

    std::span<const int> entries() const noexcept { return entries_; }
    int size() const noexcept { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

    /// True when the symbol indexes a cell of G_k(R^n) for these params.
    bool fits(const GrassmannParams& params) const noexcept;

    friend auto operator<=>(const SchubertSymbol&, const SchubertSymbol&) = default;

private:
    std::vector<int> entries_;
};

/// All C(n,k) symbols in lexicographic order.
std::vector<SchubertSymbol> schubert_symbols(const GrassmannParams& params);

/// Cell dimension sum_i (s_i - i).
int cell_dimension(const SchubertSymbol& sigma);

/// Number of r-cells for r = 0..top_dim, computed as the number of
/// partitions of r into at most k parts each at most n-k (the coefficients
/// of the Gaussian binomial [n choose k]_q). Because every cellular boundary
/// map vanishes mod 2 these are the mod-2 Betti numbers.
BettiProfile betti_mod2(const GrassmannParams& params, int top_dim);

/// Full profile, degrees 0..k(n-k).
inline BettiProfile betti_mod2(const GrassmannParams& params) {
    return betti_mod2(params, params.dimension());
}

/// An n x n symmetric idempotent matrix of trace k, the image of a k-plane
/// under orthogonal projection.
struct ProjectionPoint {
    GrassmannParams params;
    DenseMatrix matrix;

    /// Row-major flattening into R^{n^2}.
    std::span<const double> flat() const noexcept { return matrix.entries(); }
};

/// Pack projection points into a point cloud in R^{n^2}.
PointCloud to_cloud(std::span<const ProjectionPoint> points);

/// Retries per point before sample_uniform gives up with LinearDependence.
inline constexpr int max_sampling_retries = 100;

std::vector<ProjectionPoint> sample_uniform(const GrassmannParams& params, std::size_t count,
                                            Rng& rng);

/// n x k matrix in column echelon form for the cell e(sigma): column i has 1
/// in row s_i, zeros below it and in the pivot rows s_j (j < i), and standard
/// normal entries elsewhere above the pivot. Exactly d(sigma) entries are free.
DenseMatrix schubert_echelon(const GrassmannParams& params, const SchubertSymbol& sigma,
                             Rng& rng);

/// Orthonormalize an echelon matrix column by column and return B B^T.
/// Gram-Schmidt keeps the echelon zero pattern, so the plane stays in its cell.
ProjectionPoint cell_projection(const GrassmannParams& params, const DenseMatrix& echelon);

/// Random point of e(sigma), conjugated by a Haar orthogonal matrix X:
/// X (B B^T) X^T.
ProjectionPoint sample_cell(const GrassmannParams& params, const SchubertSymbol& sigma, Rng& rng);

/// Fractions of the sample keyed by cell dimension.
using CellProportions = std::map<int, double>;

/// Split `count` across cell dimensions by the largest-remainder method.
/// Throws InvalidProportions unless fractions are nonnegative, sum to 1
/// within 1e-9, and name only dimensions that have cells.
std::map<int, std::size_t> allocate_by_dimension(const GrassmannParams& params, std::size_t count,
                                                 const CellProportions& proportions);

/// Biased sampling. Each dimension's share is split evenly across the cells
/// of that dimension (largest remainder, lexicographically first cells take
/// the extra points); points are emitted in increasing dimension, then cell
/// order.
std::vector<ProjectionPoint> sample_biased(const GrassmannParams& params, std::size_t count,
                                           const CellProportions& proportions, Rng& rng);

/// Uniform point on the unit sphere S^{dim-1}.
std::vector<double> sample_sphere(std::size_t dim, Rng& rng);

/// (x,y,z) -> (xy, xz, y^2 - z^2, 2yz). Throws NotUnit off the sphere.
std::array<double, 4> rp2_embed_r4(std::span<const double> p);

/// (x,y,z) -> (yz, xz, xy, (x^2-y^2)/2, (x^2+y^2-2z^2)/(2 sqrt 3)).
std::array<double, 5> rp2_embed_r5(std::span<const double> p);

PointCloud sample_rp2_r4(std::size_t count, Rng& rng);
PointCloud sample_rp2_r5(std::size_t count, Rng& rng);

/// Haar rotations flattened row-major into R^9 (RP^3 as SO(3)).
PointCloud sample_so3(std::size_t count, Rng& rng);

}  // namespace grasstri
