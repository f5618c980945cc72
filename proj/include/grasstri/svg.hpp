#pragma once

#include <string>

#include "grasstri/persistence.hpp"

namespace grasstri {

struct SvgOptions {
    double width = 800.0;
    double bar_height = 4.0;
    double bar_gap = 2.0;
    /// Right end of the parameter axis; 0 picks 1.05 x the largest finite endpoint.
    double axis_max = 0.0;
    std::string title;
};

/// Static SVG with one panel per homological degree. Bars run horizontally
/// over the parameter axis; essential classes extend to the right edge and
/// end in an arrow head.
std::string render_barcode_svg(const Barcode& barcode, const SvgOptions& options = {});

}  // namespace grasstri
