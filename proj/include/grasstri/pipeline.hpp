#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grasstri/analysis.hpp"
#include "grasstri/complexes.hpp"
#include "grasstri/grassmann.hpp"
#include "grasstri/persistence.hpp"
#include "grasstri/point_cloud.hpp"

namespace grasstri {

enum class Space { grassmann, rp2_r4, rp2_r5, rp3 };
enum class ComplexKind { rips, witness };
enum class LandmarkMethod { maxmin, random };

Space parse_space(std::string_view name);
ComplexKind parse_complex_kind(std::string_view name);
LandmarkMethod parse_landmark_method(std::string_view name);
std::string to_string(Space space);
std::string to_string(ComplexKind kind);
std::string to_string(LandmarkMethod method);

/// "1:0.05,2:0.30" -> {1: 0.05, 2: 0.30}
CellProportions parse_proportions(std::string_view text);
std::string format_proportions(const CellProportions& proportions);

inline constexpr std::size_t default_simplex_cap = 5'000'000;

/// One experiment: sample a space, build a filtration, find matching windows.
///
/// `max_dim` is the highest homological degree reported. Complexes are built
/// with simplices up to dimension max_dim + 1 so that classes in degree
/// max_dim can die.
struct ExperimentConfig {
    Space space = Space::grassmann;
    int n = 0;  // grassmann only
    int k = 0;  // grassmann only
    std::size_t points = 0;
    ComplexKind complex = ComplexKind::rips;
    std::optional<double> r_max;
    int max_dim = 1;
    std::optional<int> top_dim;
    std::size_t landmarks = 0;  // witness only
    std::optional<LandmarkMethod> landmark_method;
    std::uint64_t seed = 0;
    CellProportions proportions;  // grassmann only; empty means uniform sampling
    std::filesystem::path output_dir;
    std::size_t simplex_cap = default_simplex_cap;
    bool write_filtration = false;
    bool export_complex = true;

    /// Throws InvalidArgument naming the offending field.
    void validate() const;

    /// The Grassmannian the space is: G_1(R^3) for RP^2, G_1(R^4) for RP^3.
    GrassmannParams manifold() const;
    double effective_r_max() const;
    int effective_top_dim() const;
    LandmarkMethod effective_landmark_method() const;
    /// Mod-2 Betti numbers of the space in degrees 0..top_dim (zero above
    /// the manifold dimension).
    BettiProfile target() const;
};

/// Flat `key = value` text, one field per line, `#` comments.
ExperimentConfig parse_config(std::string_view text);
std::string format_config(const ExperimentConfig& config);

/// Default r_max when the config leaves it unset.
double default_r_max(Space space, ComplexKind kind);

/// Target for a named space: grassmann uses n and k.
BettiProfile space_target(Space space, int n, int k, int top_dim);

/// Sample the configured space with a generator seeded by `seed`.
PointCloud sample_space(Space space, int n, int k, std::size_t points,
                        const CellProportions& proportions, std::uint64_t seed);

/// Landmarks for the witness stage, drawn with a generator seeded by `seed`.
LandmarkSet select_landmarks(const PointCloud& cloud, std::size_t count, LandmarkMethod method,
                             std::uint64_t seed);

struct PipelineResult {
    WindowReport report;
    Barcode barcode;
    std::size_t cloud_size = 0;
    std::size_t simplex_count = 0;
    std::vector<std::size_t> simplices_by_dim;
    /// Parameter and simplex count of the exported complex (widest window start).
    std::optional<double> export_parameter;
    std::optional<std::size_t> export_simplex_count;
    std::vector<std::filesystem::path> artifacts;
};

/// Sample, build, persist, and scan for windows. When output_dir is set the
/// stage files (cloud.txt, landmarks.txt, filtration.txt, barcode.csv,
/// barcode.svg, report.txt, complex.txt) are written there, each identical to
/// what the matching CLI subcommand produces from the previous file.
PipelineResult run_pipeline(const ExperimentConfig& config);

}  // namespace grasstri
