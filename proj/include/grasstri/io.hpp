#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "grasstri/analysis.hpp"
#include "grasstri/complexes.hpp"
#include "grasstri/persistence.hpp"
#include "grasstri/point_cloud.hpp"

namespace grasstri::io {

/// Shortest-safe round-trip form: 17 significant digits, "inf" for +inf.
std::string format_double(double v);

/// Accepts any strtod-style float syntax, including "inf".
double parse_double(std::string_view token);

/// One point per line, coordinates separated by single spaces.
void write_cloud(std::ostream& out, const PointCloud& cloud);
PointCloud read_cloud(std::istream& in);

/// Header `dim_max vertex_count`, then `value v0 v1 ... vk` per simplex.
void write_filtration(std::ostream& out, const Filtration& filtration);
Filtration read_filtration(std::istream& in);

/// Cloud indices, one per line, in landmark order.
void write_landmarks(std::ostream& out, const std::vector<std::uint32_t>& indices);
std::vector<std::uint32_t> read_landmarks(std::istream& in);

/// CSV `degree,birth,death` with death `inf` for essential classes.
void write_barcode_csv(std::ostream& out, const Barcode& barcode);
Barcode read_barcode_csv(std::istream& in);

/// Key-value text report; windows printed as `[a, b)`. Only the number of
/// critical values is written, so read_report leaves that list empty.
void write_report(std::ostream& out, const WindowReport& report);
WindowReport read_report(std::istream& in);

/// Whole-file helpers that throw grasstri::Error when the file cannot be
/// opened.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& contents);

}  // namespace grasstri::io
