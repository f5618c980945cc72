#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "grasstri/betti.hpp"
#include "grasstri/complexes.hpp"

namespace grasstri {

using ColumnIndex = std::uint32_t;

/// Z/2 boundary matrix in compressed-column form. Column j lists the
/// filtration positions of simplex j's facets in increasing order.
class BoundaryMatrix {
public:
    std::size_t size() const noexcept { return dims_.size(); }
    std::span<const ColumnIndex> column(std::size_t j) const noexcept {
        return {rows_.data() + offsets_[j], offsets_[j + 1] - offsets_[j]};
    }
    int dim(std::size_t j) const noexcept { return dims_[j]; }
    double value(std::size_t j) const noexcept { return values_[j]; }
    int max_dim() const noexcept { return max_dim_; }

    void push_back(std::span<const ColumnIndex> rows, int dim, double value);

private:
    std::vector<std::uint64_t> offsets_{0};
    std::vector<ColumnIndex> rows_;
    std::vector<std::int8_t> dims_;
    std::vector<double> values_;
    int max_dim_ = 0;
};

/// Throws MissingFace when a facet is absent or does not precede its cofacet.
BoundaryMatrix build_boundary(const Filtration& filtration);

struct PersistencePair {
    ColumnIndex birth;
    ColumnIndex death;
    friend auto operator<=>(const PersistencePair&, const PersistencePair&) = default;
};

/// Birth/death column pairs (sorted by birth) and unpaired columns (sorted).
struct Pairing {
    std::vector<PersistencePair> pairs;
    std::vector<ColumnIndex> essential;
    friend bool operator==(const Pairing&, const Pairing&) = default;
};

enum class Reduction {
    /// Left-to-right column reduction with no shortcuts.
    standard,
    /// Dimensions processed top-down; a column that became some pivot is
    /// cleared without reduction.
    twist,
};

/// Columns of dimension above `max_dim + 1` are skipped (they neither create
/// nor destroy classes of degree <= max_dim); pass a negative value to reduce
/// everything.
Pairing reduce(const BoundaryMatrix& matrix, Reduction strategy = Reduction::twist,
               int max_dim = -1);

struct Interval {
    double birth;
    double death;  // +inf for essential classes

    bool infinite() const noexcept { return death == std::numeric_limits<double>::infinity(); }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Intervals per homological degree, each list sorted by (birth, death).
struct Barcode {
    std::vector<std::vector<Interval>> degrees;

    std::size_t size() const noexcept { return degrees.size(); }
    const std::vector<Interval>& operator[](std::size_t d) const { return degrees[d]; }
    friend bool operator==(const Barcode&, const Barcode&) = default;
};

/// Intervals of degree 0..max_dim; zero-length intervals are dropped.
Barcode barcodes(const Filtration& filtration, int max_dim,
                 Reduction strategy = Reduction::twist);

/// Same, from an already computed pairing.
Barcode barcodes(const Filtration& filtration, const Pairing& pairing, int max_dim);

/// betti[l] = number of degree-l intervals with birth <= r < death.
BettiProfile betti_at(const Barcode& barcode, double r);

}  // namespace grasstri
