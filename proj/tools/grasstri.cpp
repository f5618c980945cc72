// grasstri: sample Grassmannians, build filtrations, and search for
// parameter windows with the manifold's mod-2 homology.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "grasstri/analysis.hpp"
#include "grasstri/error.hpp"
#include "grasstri/grassmann.hpp"
#include "grasstri/io.hpp"
#include "grasstri/pipeline.hpp"
#include "grasstri/svg.hpp"

namespace {

using namespace grasstri;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_no_window = 3;
constexpr int exit_resource = 4;

void write_output(const std::string& path, const std::string& contents) {
    if (path.empty() || path == "-")
        std::cout << contents;
    else
        io::write_text(path, contents);
}

template <class Fn>
std::string render(Fn&& fn) {
    std::ostringstream out;
    fn(out);
    return out.str();
}

std::istringstream open_input(const std::string& path) {
    return std::istringstream(io::read_text(path));
}

struct SampleArgs {
    std::string space = "grassmann";
    int n = 0;
    int k = 0;
    std::size_t points = 0;
    std::uint64_t seed = 0;
    std::string proportions;
    std::string output;
};

struct BettiArgs {
    int n = 0;
    int k = 0;
    std::optional<int> top_dim;
};

struct ComplexArgs {
    std::string input;
    std::string output;
    double r_max = 0.0;
    int max_dim = 1;
    std::size_t simplex_cap = default_simplex_cap;
    // witness only
    std::size_t landmarks = 0;
    std::string method = "maxmin";
    std::uint64_t seed = 0;
    std::string landmark_output;
};

struct PersistArgs {
    std::string input;
    std::optional<int> max_dim;
    std::string csv;
    std::string svg;
    std::string title;
};

struct WindowArgs {
    std::string barcode;
    std::string target;
    std::string space;
    int n = 0;
    int k = 0;
    std::optional<int> top_dim;
    std::string output;
};

struct PipelineArgs {
    std::string config;
    std::optional<std::string> space;
    std::optional<int> n, k;
    std::optional<std::size_t> points;
    std::optional<std::string> complex;
    std::optional<double> r_max;
    std::optional<int> max_dim, top_dim;
    std::optional<std::size_t> landmarks;
    std::optional<std::string> landmark_method;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> proportions;
    std::optional<std::string> output;
    std::optional<std::size_t> simplex_cap;
    bool write_filtration = false;
    bool no_export = false;
};

int run_sample(const SampleArgs& a) {
    const Space space = parse_space(a.space);
    const CellProportions props =
        a.proportions.empty() ? CellProportions{} : parse_proportions(a.proportions);
    if (space != Space::grassmann && !props.empty())
        throw InvalidArgument("--proportions: only valid with --space grassmann");
    const PointCloud cloud = sample_space(space, a.n, a.k, a.points, props, a.seed);
    write_output(a.output, render([&](std::ostream& o) { io::write_cloud(o, cloud); }));
    return exit_ok;
}

int run_betti(const BettiArgs& a) {
    const GrassmannParams params(a.n, a.k);
    std::cout << betti_mod2(params, a.top_dim.value_or(params.dimension())).to_string() << '\n';
    return exit_ok;
}

int run_rips(const ComplexArgs& a) {
    auto in = open_input(a.input);
    const PointCloud cloud = io::read_cloud(in);
    if (cloud.empty()) throw EmptyCloud("--input: point cloud file is empty");
    const Filtration f = vietoris_rips(cloud, a.r_max, a.max_dim + 1, a.simplex_cap);
    write_output(a.output, render([&](std::ostream& o) { io::write_filtration(o, f); }));
    return exit_ok;
}

int run_witness(const ComplexArgs& a) {
    auto in = open_input(a.input);
    const PointCloud cloud = io::read_cloud(in);
    if (cloud.empty()) throw EmptyCloud("--input: point cloud file is empty");
    const LandmarkSet landmarks =
        select_landmarks(cloud, a.landmarks, parse_landmark_method(a.method), a.seed);
    if (!a.landmark_output.empty())
        io::write_text(a.landmark_output,
                       render([&](std::ostream& o) { io::write_landmarks(o, landmarks.indices); }));
    const Filtration f = witness_filtration(cloud, landmarks, a.r_max, a.max_dim + 1, a.simplex_cap);
    write_output(a.output, render([&](std::ostream& o) { io::write_filtration(o, f); }));
    return exit_ok;
}

int run_persist(const PersistArgs& a) {
    auto in = open_input(a.input);
    const Filtration f = io::read_filtration(in);
    const int max_dim = a.max_dim.value_or(std::max(f.dim_max() - 1, 0));
    const Barcode bc = barcodes(f, max_dim);
    write_output(a.csv, render([&](std::ostream& o) { io::write_barcode_csv(o, bc); }));
    if (!a.svg.empty()) {
        SvgOptions opts;
        opts.title = a.title;
        io::write_text(a.svg, render_barcode_svg(bc, opts));
    }
    return exit_ok;
}

int run_window(const WindowArgs& a) {
    auto in = open_input(a.barcode);
    const Barcode bc = io::read_barcode_csv(in);
    const int available = std::max<int>(static_cast<int>(bc.size()) - 1, 0);
    BettiProfile target;
    int top = 0;
    if (!a.target.empty()) {
        target = BettiProfile::parse(a.target);
        top = a.top_dim.value_or(static_cast<int>(target.size()) - 1);
    } else if (!a.space.empty()) {
        const Space space = parse_space(a.space);
        ExperimentConfig c;
        c.space = space;
        c.n = a.n;
        c.k = a.k;
        const int manifold_dim = c.manifold().dimension();
        top = a.top_dim.value_or(std::min(available, manifold_dim));
        target = space_target(space, a.n, a.k, top);
    } else {
        throw InvalidArgument("--target or --space is required");
    }
    if (top < 0 || static_cast<std::size_t>(top + 1) > target.size())
        throw InvalidArgument("--top-dim: target does not cover degrees 0.." + std::to_string(top));
    const WindowReport report = matching_windows(bc, target, top);
    write_output(a.output, render([&](std::ostream& o) { io::write_report(o, report); }));
    return report.found() ? exit_ok : exit_no_window;
}

int run_pipeline_cmd(const PipelineArgs& a) {
    ExperimentConfig c;
    if (!a.config.empty()) c = parse_config(io::read_text(a.config));
    if (a.space) c.space = parse_space(*a.space);
    if (a.n) c.n = *a.n;
    if (a.k) c.k = *a.k;
    if (a.points) c.points = *a.points;
    if (a.complex) c.complex = parse_complex_kind(*a.complex);
    if (a.r_max) c.r_max = *a.r_max;
    if (a.max_dim) c.max_dim = *a.max_dim;
    if (a.top_dim) c.top_dim = *a.top_dim;
    if (a.landmarks) c.landmarks = *a.landmarks;
    if (a.landmark_method) c.landmark_method = parse_landmark_method(*a.landmark_method);
    if (a.seed) c.seed = *a.seed;
    if (a.proportions) c.proportions = parse_proportions(*a.proportions);
    if (a.output) c.output_dir = *a.output;
    if (a.simplex_cap) c.simplex_cap = *a.simplex_cap;
    if (a.write_filtration) c.write_filtration = true;
    if (a.no_export) c.export_complex = false;

    const PipelineResult r = run_pipeline(c);
    std::ostringstream summary;
    summary << "space: " << to_string(c.space);
    if (c.space == Space::grassmann) summary << " (n=" << c.n << ", k=" << c.k << ")";
    summary << "\npoints: " << r.cloud_size << "\ncomplex: " << to_string(c.complex)
            << "\nr_max: " << io::format_double(c.effective_r_max()) << "\nsimplices:";
    for (auto n : r.simplices_by_dim) summary << ' ' << n;
    summary << " (total " << r.simplex_count << ")\n";
    io::write_report(summary, r.report);
    if (r.export_parameter)
        summary << "exported complex: r = " << io::format_double(*r.export_parameter) << ", "
                << *r.export_simplex_count << " simplices\n";
    std::cout << summary.str();
    return r.report.found() ? exit_ok : exit_no_window;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate triangulations of Grassmann manifolds via persistent homology"};
    app.require_subcommand(1);

    SampleArgs sample_args;
    auto* sample = app.add_subcommand("sample", "Sample a point cloud on a space");
    sample->add_option("--space", sample_args.space, "grassmann | rp2-r4 | rp2-r5 | rp3")->capture_default_str();
    sample->add_option("--n", sample_args.n, "Ambient dimension (grassmann)");
    sample->add_option("--k", sample_args.k, "Plane dimension (grassmann)");
    sample->add_option("--points", sample_args.points, "Number of points")->required();
    sample->add_option("--seed", sample_args.seed, "Random seed")->capture_default_str();
    sample->add_option("--proportions", sample_args.proportions, "Cell bias, e.g. 1:0.05,2:0.3,3:0.25,4:0.4");
    sample->add_option("-o,--output", sample_args.output, "Cloud file (default stdout)");

    BettiArgs betti_args;
    auto* betti = app.add_subcommand("betti", "Print the mod-2 Betti numbers of G_k(R^n)");
    betti->add_option("--n", betti_args.n, "Ambient dimension")->required();
    betti->add_option("--k", betti_args.k, "Plane dimension")->required();
    betti->add_option("--top-dim", betti_args.top_dim, "Highest degree (default k(n-k))");

    ComplexArgs rips_args;
    auto* rips = app.add_subcommand("rips", "Vietoris-Rips filtration of a cloud file");
    rips->add_option("-i,--input", rips_args.input, "Cloud file")->required();
    rips->add_option("-o,--output", rips_args.output, "Filtration file (default stdout)");
    rips->add_option("--r-max", rips_args.r_max, "Largest edge length")->required();
    rips->add_option("--max-dim", rips_args.max_dim, "Highest homology degree (simplices go one higher)")->capture_default_str();
    rips->add_option("--simplex-cap", rips_args.simplex_cap, "Abort past this many simplices")->capture_default_str();

    ComplexArgs witness_args;
    auto* witness = app.add_subcommand("witness", "Witness filtration of a cloud file");
    witness->add_option("-i,--input", witness_args.input, "Cloud file")->required();
    witness->add_option("-o,--output", witness_args.output, "Filtration file (default stdout)");
    witness->add_option("--r-max", witness_args.r_max, "Largest witness parameter")->required();
    witness->add_option("--max-dim", witness_args.max_dim, "Highest homology degree (simplices go one higher)")->capture_default_str();
    witness->add_option("--landmarks", witness_args.landmarks, "Landmark count")->required();
    witness->add_option("--method", witness_args.method, "maxmin | random")->capture_default_str();
    witness->add_option("--seed", witness_args.seed, "Random seed for landmark selection")->capture_default_str();
    witness->add_option("--landmark-output", witness_args.landmark_output, "Landmark index file");
    witness->add_option("--simplex-cap", witness_args.simplex_cap, "Abort past this many simplices")->capture_default_str();

    PersistArgs persist_args;
    auto* persist = app.add_subcommand("persist", "Barcodes of a filtration file");
    persist->add_option("-i,--input", persist_args.input, "Filtration file")->required();
    persist->add_option("--max-dim", persist_args.max_dim, "Highest degree (default dim_max - 1)");
    persist->add_option("--csv", persist_args.csv, "Barcode CSV (default stdout)");
    persist->add_option("--svg", persist_args.svg, "Barcode SVG");
    persist->add_option("--title", persist_args.title, "SVG title");

    WindowArgs window_args;
    auto* window = app.add_subcommand("window", "Parameter windows matching a target profile");
    window->add_option("--barcode", window_args.barcode, "Barcode CSV")->required();
    window->add_option("--target", window_args.target, "Target Betti numbers, e.g. \"1 1 1\"");
    window->add_option("--space", window_args.space, "Take the target from a space instead");
    window->add_option("--n", window_args.n, "Ambient dimension (grassmann)");
    window->add_option("--k", window_args.k, "Plane dimension (grassmann)");
    window->add_option("--top-dim", window_args.top_dim, "Highest degree compared");
    window->add_option("-o,--output", window_args.output, "Report file (default stdout)");

    PipelineArgs pa;
    auto* pipeline = app.add_subcommand("pipeline", "Sample, filter, persist, and report windows");
    pipeline->add_option("--config", pa.config, "Key-value experiment file");
    pipeline->add_option("--space", pa.space, "grassmann | rp2-r4 | rp2-r5 | rp3");
    pipeline->add_option("--n", pa.n, "Ambient dimension (grassmann)");
    pipeline->add_option("--k", pa.k, "Plane dimension (grassmann)");
    pipeline->add_option("--points", pa.points, "Sample size");
    pipeline->add_option("--complex", pa.complex, "rips | witness");
    pipeline->add_option("--r-max", pa.r_max, "Largest filtration parameter");
    pipeline->add_option("--max-dim", pa.max_dim, "Highest homology degree");
    pipeline->add_option("--top-dim", pa.top_dim, "Highest degree compared with the target");
    pipeline->add_option("--landmarks", pa.landmarks, "Landmark count (witness)");
    pipeline->add_option("--landmark-method", pa.landmark_method, "maxmin | random (witness)");
    pipeline->add_option("--seed", pa.seed, "Random seed");
    pipeline->add_option("--proportions", pa.proportions, "Cell bias (grassmann)");
    pipeline->add_option("-o,--output", pa.output, "Output directory");
    pipeline->add_option("--simplex-cap", pa.simplex_cap, "Abort past this many simplices");
    pipeline->add_flag("--write-filtration", pa.write_filtration, "Also write filtration.txt");
    pipeline->add_flag("--no-export", pa.no_export, "Skip complex.txt");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*sample) return run_sample(sample_args);
        if (*betti) return run_betti(betti_args);
        if (*rips) return run_rips(rips_args);
        if (*witness) return run_witness(witness_args);
        if (*persist) return run_persist(persist_args);
        if (*window) return run_window(window_args);
        if (*pipeline) return run_pipeline_cmd(pa);
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_resource;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
