#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "grasstri/betti.hpp"
#include "grasstri/complexes.hpp"
#include "grasstri/persistence.hpp"

namespace grasstri {

/// Half-open parameter interval [lower, upper); upper may be +inf.
struct Window {
    double lower;
    double upper;

    double width() const noexcept { return upper - lower; }
    double midpoint() const noexcept;
    bool contains(double r) const noexcept { return lower <= r && r < upper; }
    friend bool operator==(const Window&, const Window&) = default;
};

struct WindowReport {
    BettiProfile target;
    int top_dim = 0;
    std::vector<Window> windows;
    /// Sorted distinct finite interval endpoints of degrees 0..top_dim.
    std::vector<double> critical_values;

    bool found() const noexcept { return !windows.empty(); }
    /// Widest window (first on ties); finite windows beat nothing, infinite
    /// windows beat finite ones. Requires found().
    const Window& widest() const;
};

/// Maximal parameter ranges on which betti_at(barcode, r) agrees with
/// `target` in every degree 0..top_dim. The profile is constant between
/// consecutive critical values, so each piece is evaluated once.
WindowReport matching_windows(const Barcode& barcode, const BettiProfile& target, int top_dim);

/// All simplices with value <= r, in canonical order.
Filtration export_complex(const Filtration& filtration, double r);

}  // namespace grasstri
