#include "grasstri/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "grasstri/io.hpp"

namespace grasstri {

namespace {

std::string num(double v) {
    // two decimals keeps files small and stable
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(2);
    ss << v;
    return ss.str();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string tick_label(double v) {
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

double nice_step(double span) {
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
        if (raw <= m * mag) return m * mag;
    return 10.0 * mag;
}

}  // namespace

std::string render_barcode_svg(const Barcode& barcode, const SvgOptions& options) {
    constexpr double margin_left = 60.0;
    constexpr double margin_right = 30.0;
    constexpr double panel_header = 26.0;
    constexpr double axis_band = 28.0;
    constexpr double panel_gap = 14.0;
    const double title_band = options.title.empty() ? 10.0 : 34.0;

    double axis_max = options.axis_max;
    if (axis_max <= 0.0) {
        double top = 0.0;
        for (const auto& deg : barcode.degrees)
            for (const auto& iv : deg) {
                top = std::max(top, iv.birth);
                if (!iv.infinite()) top = std::max(top, iv.death);
            }
        axis_max = top > 0.0 ? top * 1.05 : 1.0;
    }
    const double plot_w = options.width - margin_left - margin_right;
    auto x_of = [&](double r) { return margin_left + plot_w * std::min(r, axis_max) / axis_max; };
    const double pitch = options.bar_height + options.bar_gap;

    double height = title_band;
    for (const auto& deg : barcode.degrees)
        height += panel_header + std::max<std::size_t>(deg.size(), 1) * pitch + axis_band + panel_gap;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(options.width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(options.width) << ' '
        << num(height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty())
        svg << "<text x=\"" << num(options.width / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
            << escape(options.title) << "</text>\n";

    const double step = nice_step(axis_max);
    double y = title_band;
    for (std::size_t d = 0; d < barcode.size(); ++d) {
        const auto& bars = barcode[d];
        const double body = std::max<std::size_t>(bars.size(), 1) * pitch;
        svg << "<g class=\"panel\" data-degree=\"" << d << "\">\n";
        svg << "<text x=\"" << num(margin_left) << "\" y=\"" << num(y + 16) << "\" font-size=\"12\">H"
            << d << " (" << bars.size() << " bars)</text>\n";
        const double top = y + panel_header;
        svg << "<rect x=\"" << num(margin_left) << "\" y=\"" << num(top) << "\" width=\""
            << num(plot_w) << "\" height=\"" << num(body) << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
        for (std::size_t i = 0; i < bars.size(); ++i) {
            const auto& iv = bars[i];
            const double by = top + static_cast<double>(i) * pitch + options.bar_gap / 2;
            const double x0 = x_of(iv.birth);
            const double x1 = iv.infinite() ? margin_left + plot_w : x_of(iv.death);
            svg << "<rect x=\"" << num(x0) << "\" y=\"" << num(by) << "\" width=\""
                << num(std::max(x1 - x0, 0.5)) << "\" height=\"" << num(options.bar_height)
                << "\" fill=\"" << (iv.infinite() ? "#c0392b" : "#2c6fbb") << "\"><title>["
                << io::format_double(iv.birth) << ", " << io::format_double(iv.death)
                << ")</title></rect>\n";
            if (iv.infinite()) {
                const double cy = by + options.bar_height / 2;
                svg << "<polygon points=\"" << num(x1) << ',' << num(cy - 4) << ' ' << num(x1 + 8)
                    << ',' << num(cy) << ' ' << num(x1) << ',' << num(cy + 4)
                    << "\" fill=\"#c0392b\"/>\n";
            }
        }
        const double axis_y = top + body;
        svg << "<line x1=\"" << num(margin_left) << "\" y1=\"" << num(axis_y) << "\" x2=\""
            << num(margin_left + plot_w) << "\" y2=\"" << num(axis_y) << "\" stroke=\"black\"/>\n";
        for (double t = 0.0; t <= axis_max * (1 + 1e-12); t += step) {
            const double tx = x_of(t);
            svg << "<line x1=\"" << num(tx) << "\" y1=\"" << num(axis_y) << "\" x2=\"" << num(tx)
                << "\" y2=\"" << num(axis_y + 4) << "\" stroke=\"black\"/>";
            svg << "<text x=\"" << num(tx) << "\" y=\"" << num(axis_y + 16)
                << "\" text-anchor=\"middle\">" << tick_label(std::round(t / step) * step)
                << "</text>\n";
        }
        svg << "</g>\n";
        y = axis_y + axis_band + panel_gap;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace grasstri
