#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <tuple>
#include <vector>

#include "grasstri/analysis.hpp"
#include "grasstri/complexes.hpp"
#include "grasstri/error.hpp"
#include "grasstri/grassmann.hpp"
#include "grasstri/persistence.hpp"
#include "grasstri/pipeline.hpp"

namespace py = pybind11;
using namespace grasstri;

namespace {

using PyBarcode = std::vector<std::vector<std::pair<double, double>>>;

PointCloud cloud_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2) throw InvalidArgument("point cloud must be a 2-d array");
    const auto rows = static_cast<std::size_t>(a.shape(0));
    const auto cols = static_cast<std::size_t>(a.shape(1));
    std::vector<double> coords(a.data(), a.data() + rows * cols);
    return PointCloud(cols, std::move(coords));
}

py::array_t<double> cloud_to_array(const PointCloud& cloud) {
    py::array_t<double> out({cloud.size(), cloud.dimension()});
    std::copy(cloud.coords().begin(), cloud.coords().end(), out.mutable_data());
    return out;
}

PyBarcode to_py(const Barcode& bc) {
    PyBarcode out(bc.size());
    for (std::size_t d = 0; d < bc.size(); ++d)
        for (const auto& iv : bc[d]) out[d].emplace_back(iv.birth, iv.death);
    return out;
}

Barcode from_py(const PyBarcode& in) {
    Barcode bc;
    bc.degrees.resize(in.size());
    for (std::size_t d = 0; d < in.size(); ++d)
        for (const auto& [b, e] : in[d]) bc.degrees[d].push_back({b, e});
    return bc;
}

std::vector<std::pair<double, double>> windows_to_py(const WindowReport& r) {
    std::vector<std::pair<double, double>> out;
    for (const auto& w : r.windows) out.emplace_back(w.lower, w.upper);
    return out;
}

}  // namespace

PYBIND11_MODULE(_grasstri, m) {
    m.doc() = "Approximate triangulations of Grassmann manifolds via persistent homology.";

    auto base = py::register_exception<Error>(m, "GrasstriError");
    py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());

    m.def(
        "betti_mod2",
        [](int n, int k, std::optional<int> top_dim) {
            const GrassmannParams p(n, k);
            return betti_mod2(p, top_dim.value_or(p.dimension())).betti;
        },
        py::arg("n"), py::arg("k"), py::arg("top_dim") = py::none());

    m.def("schubert_symbols", [](int n, int k) {
        std::vector<std::vector<int>> out;
        for (const auto& s : schubert_symbols(GrassmannParams(n, k)))
            out.emplace_back(s.entries().begin(), s.entries().end());
        return out;
    });

    m.def("cell_dimension", [](std::vector<int> sigma) { return cell_dimension(SchubertSymbol(std::move(sigma))); });

    m.def(
        "sample",
        [](const std::string& space, std::size_t points, std::uint64_t seed, int n, int k,
           const std::map<int, double>& proportions) {
            return cloud_to_array(sample_space(parse_space(space), n, k, points, proportions, seed));
        },
        py::arg("space"), py::arg("points"), py::arg("seed") = 0, py::arg("n") = 0, py::arg("k") = 0,
        py::arg("proportions") = std::map<int, double>{},
        "Point cloud on a space as an (points, dim) array.");

    py::class_<Filtration>(m, "Filtration")
        .def("__len__", &Filtration::size)
        .def_property_readonly("vertex_count", &Filtration::vertex_count)
        .def_property_readonly("dim_max", &Filtration::dim_max)
        .def("dimension_counts", &Filtration::dimension_counts)
        .def("count_at", &Filtration::count_at, py::arg("r"))
        .def("simplices", [](const Filtration& f) {
            std::vector<std::pair<std::vector<Vertex>, double>> out;
            out.reserve(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) {
                const auto s = f[i];
                out.emplace_back(std::vector<Vertex>(s.vertices.begin(), s.vertices.end()), s.value);
            }
            return out;
        });

    m.def(
        "vietoris_rips",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& points, double r_max,
           int max_dim, std::size_t cap) { return vietoris_rips(cloud_from_array(points), r_max, max_dim, cap); },
        py::arg("points"), py::arg("r_max"), py::arg("max_dim"), py::arg("simplex_cap") = no_simplex_limit,
        "Clique filtration with simplices up to dimension max_dim.");

    m.def(
        "witness",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& points, std::size_t landmarks,
           double r_max, int max_dim, const std::string& method, std::uint64_t seed) {
            const PointCloud cloud = cloud_from_array(points);
            const LandmarkSet l = select_landmarks(cloud, landmarks, parse_landmark_method(method), seed);
            return std::make_pair(witness_filtration(cloud, l, r_max, max_dim), l.indices);
        },
        py::arg("points"), py::arg("landmarks"), py::arg("r_max"), py::arg("max_dim"),
        py::arg("method") = "maxmin", py::arg("seed") = 0,
        "Witness filtration and the chosen landmark indices.");

    m.def(
        "barcodes", [](const Filtration& f, int max_dim) { return to_py(barcodes(f, max_dim)); },
        py::arg("filtration"), py::arg("max_dim"),
        "Per-degree lists of (birth, death) pairs; death is inf for essential classes.");

    m.def(
        "betti_at", [](const PyBarcode& bc, double r) { return betti_at(from_py(bc), r).betti; },
        py::arg("barcode"), py::arg("r"));

    m.def(
        "matching_windows",
        [](const PyBarcode& bc, std::vector<std::size_t> target, int top_dim) {
            return windows_to_py(matching_windows(from_py(bc), BettiProfile{std::move(target)}, top_dim));
        },
        py::arg("barcode"), py::arg("target"), py::arg("top_dim"));

    m.def(
        "run_pipeline",
        [](const std::string& config_text) {
            const PipelineResult r = run_pipeline(parse_config(config_text));
            py::dict out;
            out["target"] = r.report.target.betti;
            out["windows"] = windows_to_py(r.report);
            out["barcode"] = to_py(r.barcode);
            out["cloud_size"] = r.cloud_size;
            out["simplex_count"] = r.simplex_count;
            out["simplices_by_dim"] = r.simplices_by_dim;
            out["export_parameter"] = r.export_parameter;
            out["export_simplex_count"] = r.export_simplex_count;
            out["artifacts"] = r.artifacts;
            return out;
        },
        py::arg("config"), "Run an experiment described by key = value config text.");
}
