#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "grasstri/linalg.hpp"
#include "grasstri/point_cloud.hpp"

namespace grasstri {

using Vertex = std::uint32_t;

inline constexpr std::size_t no_simplex_limit = std::numeric_limits<std::size_t>::max();

/// Owning simplex: sorted distinct vertices plus its filtration value.
struct Simplex {
    std::vector<Vertex> vertices;
    double value = 0.0;

    int dim() const noexcept { return static_cast<int>(vertices.size()) - 1; }
    friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Non-owning view of a simplex stored inside a Filtration.
struct SimplexView {
    std::span<const Vertex> vertices;
    double value;

    int dim() const noexcept { return static_cast<int>(vertices.size()) - 1; }
    Simplex to_simplex() const { return {{vertices.begin(), vertices.end()}, value}; }
};

/// Strict weak order used for filtrations: (value, dim, lexicographic vertices).
bool canonical_less(const SimplexView& a, const SimplexView& b) noexcept;

/// Simplices in canonical order. Storage is flat: all vertex tuples are
/// concatenated and addressed through offsets.
class Filtration {
public:
    Filtration() = default;
    Filtration(std::size_t vertex_count, int dim_max)
        : vertex_count_(vertex_count), dim_max_(dim_max) {}

    /// Sorts `simplices` into canonical order. Vertex tuples must be sorted
    /// and distinct and index below `vertex_count`.
    static Filtration from_simplices(std::vector<Simplex> simplices, std::size_t vertex_count,
                                     int dim_max = -1);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::size_t vertex_count() const noexcept { return vertex_count_; }
    /// Largest simplex dimension the builder allowed (header of the text format).
    int dim_max() const noexcept { return dim_max_; }

    SimplexView operator[](std::size_t i) const noexcept {
        return {{vertices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]}, values_[i]};
    }
    int dim(std::size_t i) const noexcept {
        return static_cast<int>(offsets_[i + 1] - offsets_[i]) - 1;
    }
    double value(std::size_t i) const noexcept { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

    /// Append without reordering; call canonicalize() afterwards unless the
    /// input is already canonical.
    void push_back(std::span<const Vertex> vertices, double value);
    void reserve(std::size_t simplices, std::size_t vertex_slots);
    void canonicalize();

    /// Number of leading simplices with value <= r.
    std::size_t count_at(double r) const noexcept;

    /// Simplices with value <= r, still in canonical order.
    Filtration prefix(double r) const;

    /// Number of simplices of each dimension.
    std::vector<std::size_t> dimension_counts() const;

    friend bool operator==(const Filtration&, const Filtration&) = default;

private:
    std::size_t vertex_count_ = 0;
    int dim_max_ = 0;
    std::vector<std::uint64_t> offsets_{0};
    std::vector<Vertex> vertices_;
    std::vector<double> values_;
};

/// Clique filtration: vertices at 0, each simplex valued by its largest
/// pairwise distance, keeping simplices with value < r_max and dim <= max_dim.
/// Throws EmptyCloud, and ResourceLimit past `max_simplices`.
Filtration vietoris_rips(const PointCloud& cloud, double r_max, int max_dim,
                         std::size_t max_simplices = no_simplex_limit);

/// Landmarks and the |L| x |X| table of landmark-to-point distances.
struct LandmarkSet {
    std::vector<std::uint32_t> indices;
    DenseMatrix distances;

    std::size_t size() const noexcept { return indices.size(); }
};

LandmarkSet landmark_set(const PointCloud& cloud, std::vector<std::uint32_t> indices);

/// Greedy farthest-point selection. The seed is uniform over the cloud; each
/// later landmark maximizes the distance to the chosen set, ties going to the
/// smallest index.
LandmarkSet maxmin_landmarks(const PointCloud& cloud, std::size_t count, Rng& rng);

/// Uniformly random subset, in draw order.
LandmarkSet random_landmarks(const PointCloud& cloud, std::size_t count, Rng& rng);

/// Value at which witness x admits the edge: max(d_a, d_b) - m_x clamped at
/// 0, where m_x is the distance from x to the nearest landmark other than the
/// two endpoints (+inf when there is none). Rounded up if needed so that
/// max(d_a, d_b) <= R + m_x holds in floating point at the returned R.
double witness_threshold(double dist_a, double dist_b, double others_min) noexcept;

/// Lazy witness filtration on the landmark vertices: an edge's value is the
/// minimum witness threshold over the whole cloud; higher simplices take the
/// maximum of their edge values. Keeps simplices with value <= r_max.
Filtration witness_filtration(const PointCloud& cloud, const LandmarkSet& landmarks, double r_max,
                              int max_dim, std::size_t max_simplices = no_simplex_limit);

/// Weighted graph on `vertex_count` vertices. `edges[u]` lists (v, weight)
/// for v > u in increasing v.
struct WeightedGraph {
    struct Edge {
        Vertex target;
        double weight;
    };
    std::vector<std::vector<Edge>> upper;
};

/// Flag (clique) completion of a weighted graph with vertices at value 0.
Filtration flag_filtration(const WeightedGraph& graph, int max_dim,
                           std::size_t max_simplices = no_simplex_limit);

}  // namespace grasstri
