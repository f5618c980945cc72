#include "grasstri/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "grasstri/error.hpp"
#include "grasstri/io.hpp"
#include "grasstri/svg.hpp"

namespace grasstri {

Space parse_space(std::string_view name) {
    if (name == "grassmann") return Space::grassmann;
    if (name == "rp2-r4") return Space::rp2_r4;
    if (name == "rp2-r5") return Space::rp2_r5;
    if (name == "rp3" || name == "so3") return Space::rp3;
    throw InvalidArgument("unknown space '" + std::string(name) +
                          "' (expected grassmann, rp2-r4, rp2-r5, rp3)");
}

ComplexKind parse_complex_kind(std::string_view name) {
    if (name == "rips" || name == "vr") return ComplexKind::rips;
    if (name == "witness") return ComplexKind::witness;
    throw InvalidArgument("unknown complex '" + std::string(name) + "' (expected rips, witness)");
}

LandmarkMethod parse_landmark_method(std::string_view name) {
    if (name == "maxmin") return LandmarkMethod::maxmin;
    if (name == "random") return LandmarkMethod::random;
    throw InvalidArgument("unknown landmark method '" + std::string(name) +
                          "' (expected maxmin, random)");
}

std::string to_string(Space space) {
    switch (space) {
        case Space::grassmann: return "grassmann";
        case Space::rp2_r4: return "rp2-r4";
        case Space::rp2_r5: return "rp2-r5";
        case Space::rp3: return "rp3";
    }
    return "?";
}

std::string to_string(ComplexKind kind) { return kind == ComplexKind::rips ? "rips" : "witness"; }

std::string to_string(LandmarkMethod method) {
    return method == LandmarkMethod::maxmin ? "maxmin" : "random";
}

CellProportions parse_proportions(std::string_view text) {
    CellProportions out;
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::string item;
    while (in >> item) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw InvalidArgument("proportion '" + item + "' must look like dim:fraction");
        int dim = 0;
        const auto res = std::from_chars(item.data(), item.data() + colon, dim);
        if (res.ec != std::errc{} || res.ptr != item.data() + colon)
            throw InvalidArgument("bad cell dimension in '" + item + "'");
        double frac = 0.0;
        try {
            frac = io::parse_double(item.substr(colon + 1));
        } catch (const ParseError&) {
            throw InvalidArgument("bad fraction in '" + item + "'");
        }
        if (out.count(dim)) throw InvalidArgument("dimension " + std::to_string(dim) + " listed twice");
        out[dim] = frac;
    }
    return out;
}

std::string format_proportions(const CellProportions& proportions) {
    std::string out;
    for (const auto& [dim, frac] : proportions) {
        if (!out.empty()) out += ',';
        out += std::to_string(dim) + ':' + io::format_double(frac);
    }
    return out;
}

double default_r_max(Space space, ComplexKind kind) {
    if (kind == ComplexKind::witness) return 0.3;
    switch (space) {
        case Space::rp2_r4: return 1.0;
        case Space::rp2_r5: return 0.95;
        case Space::rp3: return 2.4;
        case Space::grassmann: return 1.0;
    }
    return 1.0;
}

GrassmannParams ExperimentConfig::manifold() const {
    switch (space) {
        case Space::grassmann: return {n, k};
        case Space::rp2_r4:
        case Space::rp2_r5: return {3, 1};
        case Space::rp3: return {4, 1};
    }
    return {n, k};
}

double ExperimentConfig::effective_r_max() const {
    return r_max ? *r_max : default_r_max(space, complex);
}

int ExperimentConfig::effective_top_dim() const {
    return top_dim ? *top_dim : std::min(max_dim, manifold().dimension());
}

LandmarkMethod ExperimentConfig::effective_landmark_method() const {
    return landmark_method.value_or(LandmarkMethod::maxmin);
}

BettiProfile space_target(Space space, int n, int k, int top_dim) {
    GrassmannParams params = space == Space::grassmann ? GrassmannParams(n, k)
                             : space == Space::rp3     ? GrassmannParams(4, 1)
                                                       : GrassmannParams(3, 1);
    BettiProfile t = betti_mod2(params, std::min(top_dim, params.dimension()));
    t.betti.resize(static_cast<std::size_t>(top_dim + 1), 0);
    return t;
}

BettiProfile ExperimentConfig::target() const {
    return space_target(space, n, k, effective_top_dim());
}

void ExperimentConfig::validate() const {
    if (space == Space::grassmann) {
        if (n < 1 || k < 1 || k > n) throw InvalidArgument("n, k: grassmann needs 1 <= k <= n");
    } else if (!proportions.empty()) {
        throw InvalidArgument("proportions: only meaningful for the grassmann space");
    }
    if (points < 1) throw InvalidArgument("points: sample size must be at least 1");
    if (max_dim < 0) throw InvalidArgument("max_dim: must be nonnegative");
    if (top_dim && (*top_dim < 0 || *top_dim > max_dim))
        throw InvalidArgument("top_dim: must lie in [0, max_dim]");
    if (r_max && !(*r_max >= 0.0)) throw InvalidArgument("r_max: must be nonnegative");
    if (simplex_cap < 1) throw InvalidArgument("simplex_cap: must be positive");
    if (complex == ComplexKind::witness) {
        if (landmarks < 2) throw InvalidArgument("landmarks: witness complexes need at least 2");
        if (landmarks > points) throw InvalidArgument("landmarks: more landmarks than points");
    } else if (landmarks != 0 || landmark_method) {
        throw InvalidArgument("landmarks: only valid with complex = witness");
    }
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

template <class T>
T parse_integer(const std::string& key, const std::string& value) {
    T out{};
    const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
        throw InvalidArgument(key + ": expected an integer, got '" + value + "'");
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw InvalidArgument(key + ": expected true or false, got '" + value + "'");
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig c;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::replace(key.begin(), key.end(), '-', '_');
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        try {
            if (key == "space") c.space = parse_space(value);
            else if (key == "n") c.n = parse_integer<int>(key, value);
            else if (key == "k") c.k = parse_integer<int>(key, value);
            else if (key == "points") c.points = parse_integer<std::size_t>(key, value);
            else if (key == "complex") c.complex = parse_complex_kind(value);
            else if (key == "r_max") c.r_max = io::parse_double(value);
            else if (key == "max_dim") c.max_dim = parse_integer<int>(key, value);
            else if (key == "top_dim") c.top_dim = parse_integer<int>(key, value);
            else if (key == "landmarks") c.landmarks = parse_integer<std::size_t>(key, value);
            else if (key == "landmark_method") c.landmark_method = parse_landmark_method(value);
            else if (key == "seed") c.seed = parse_integer<std::uint64_t>(key, value);
            else if (key == "proportions") c.proportions = parse_proportions(value);
            else if (key == "output") c.output_dir = value;
            else if (key == "simplex_cap") c.simplex_cap = parse_integer<std::size_t>(key, value);
            else if (key == "write_filtration") c.write_filtration = parse_bool(key, value);
            else if (key == "export_complex") c.export_complex = parse_bool(key, value);
            else throw InvalidArgument("unknown config key '" + key + "'");
        } catch (const ParseError& e) {
            throw InvalidArgument(key + ": " + e.what());
        }
    }
    return c;
}

std::string format_config(const ExperimentConfig& c) {
    std::ostringstream out;
    out << "space = " << to_string(c.space) << '\n';
    if (c.space == Space::grassmann) out << "n = " << c.n << "\nk = " << c.k << '\n';
    out << "points = " << c.points << '\n';
    out << "complex = " << to_string(c.complex) << '\n';
    if (c.r_max) out << "r_max = " << io::format_double(*c.r_max) << '\n';
    out << "max_dim = " << c.max_dim << '\n';
    if (c.top_dim) out << "top_dim = " << *c.top_dim << '\n';
    if (c.complex == ComplexKind::witness) {
        out << "landmarks = " << c.landmarks << '\n';
        if (c.landmark_method) out << "landmark_method = " << to_string(*c.landmark_method) << '\n';
    }
    out << "seed = " << c.seed << '\n';
    if (!c.proportions.empty()) out << "proportions = " << format_proportions(c.proportions) << '\n';
    if (!c.output_dir.empty()) out << "output = " << c.output_dir.string() << '\n';
    out << "simplex_cap = " << c.simplex_cap << '\n';
    out << "write_filtration = " << (c.write_filtration ? "true" : "false") << '\n';
    out << "export_complex = " << (c.export_complex ? "true" : "false") << '\n';
    return out.str();
}

PointCloud sample_space(Space space, int n, int k, std::size_t points,
                        const CellProportions& proportions, std::uint64_t seed) {
    Rng rng(seed);
    switch (space) {
        case Space::rp2_r4: return sample_rp2_r4(points, rng);
        case Space::rp2_r5: return sample_rp2_r5(points, rng);
        case Space::rp3: return sample_so3(points, rng);
        case Space::grassmann: {
            const GrassmannParams params(n, k);
            const auto pts = proportions.empty() ? sample_uniform(params, points, rng)
                                                 : sample_biased(params, points, proportions, rng);
            return to_cloud(pts);
        }
    }
    throw InvalidArgument("unknown space");
}

LandmarkSet select_landmarks(const PointCloud& cloud, std::size_t count, LandmarkMethod method,
                             std::uint64_t seed) {
    Rng rng(seed);
    return method == LandmarkMethod::maxmin ? maxmin_landmarks(cloud, count, rng)
                                            : random_landmarks(cloud, count, rng);
}

namespace {

template <class Fn>
std::string render(Fn&& fn) {
    std::ostringstream out;
    fn(out);
    return out.str();
}

}  // namespace

PipelineResult run_pipeline(const ExperimentConfig& config) {
    config.validate();
    const bool write = !config.output_dir.empty();
    PipelineResult result;
    auto emit = [&](const char* name, const std::string& contents) {
        if (!write) return;
        const auto path = config.output_dir / name;
        io::write_text(path, contents);
        result.artifacts.push_back(path);
    };
    if (write) std::filesystem::create_directories(config.output_dir);

    const PointCloud cloud = sample_space(config.space, config.n, config.k, config.points,
                                          config.proportions, config.seed);
    result.cloud_size = cloud.size();
    emit("cloud.txt", render([&](std::ostream& o) { io::write_cloud(o, cloud); }));

    const int simplex_dim = config.max_dim + 1;
    Filtration filtration;
    if (config.complex == ComplexKind::rips) {
        filtration = vietoris_rips(cloud, config.effective_r_max(), simplex_dim, config.simplex_cap);
    } else {
        const LandmarkSet landmarks = select_landmarks(cloud, config.landmarks,
                                                       config.effective_landmark_method(), config.seed);
        emit("landmarks.txt", render([&](std::ostream& o) { io::write_landmarks(o, landmarks.indices); }));
        filtration = witness_filtration(cloud, landmarks, config.effective_r_max(), simplex_dim,
                                        config.simplex_cap);
    }
    result.simplex_count = filtration.size();
    result.simplices_by_dim = filtration.dimension_counts();
    if (config.write_filtration)
        emit("filtration.txt", render([&](std::ostream& o) { io::write_filtration(o, filtration); }));

    result.barcode = barcodes(filtration, config.max_dim);
    emit("barcode.csv", render([&](std::ostream& o) { io::write_barcode_csv(o, result.barcode); }));
    emit("barcode.svg", render_barcode_svg(result.barcode));

    const int top = config.effective_top_dim();
    result.report = matching_windows(result.barcode, config.target(), top);
    emit("report.txt", render([&](std::ostream& o) { io::write_report(o, result.report); }));

    if (result.report.found()) {
        const double at = result.report.widest().lower;
        result.export_parameter = at;
        result.export_simplex_count = filtration.count_at(at);
        if (config.export_complex) {
            const Filtration complex = export_complex(filtration, at);
            emit("complex.txt", render([&](std::ostream& o) { io::write_filtration(o, complex); }));
        }
    }
    return result;
}

}  // namespace grasstri
