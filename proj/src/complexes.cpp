#include "grasstri/complexes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "grasstri/error.hpp"
#include "grasstri/parallel.hpp"

namespace grasstri {

bool canonical_less(const SimplexView& a, const SimplexView& b) noexcept {
    if (a.value != b.value) return a.value < b.value;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                        b.vertices.end());
}

Filtration Filtration::from_simplices(std::vector<Simplex> simplices, std::size_t vertex_count,
                                      int dim_max) {
    int top = 0;
    for (const auto& s : simplices) top = std::max(top, s.dim());
    Filtration f(vertex_count, dim_max < 0 ? top : dim_max);
    for (const auto& s : simplices) {
        if (s.vertices.empty()) throw InvalidArgument("simplex without vertices");
        for (std::size_t i = 0; i < s.vertices.size(); ++i) {
            if (s.vertices[i] >= vertex_count)
                throw InvalidArgument("simplex vertex " + std::to_string(s.vertices[i]) +
                                      " out of range");
            if (i && s.vertices[i] <= s.vertices[i - 1])
                throw InvalidArgument("simplex vertices must be sorted and distinct");
        }
        if (!(s.value >= 0.0)) throw InvalidArgument("filtration values must be nonnegative");
        f.push_back(s.vertices, s.value);
    }
    f.canonicalize();
    return f;
}

void Filtration::push_back(std::span<const Vertex> vertices, double value) {
    vertices_.insert(vertices_.end(), vertices.begin(), vertices.end());
    offsets_.push_back(vertices_.size());
    values_.push_back(value);
}

void Filtration::reserve(std::size_t simplices, std::size_t vertex_slots) {
    offsets_.reserve(simplices + 1);
    values_.reserve(simplices);
    vertices_.reserve(vertex_slots);
}

void Filtration::canonicalize() {
    std::vector<std::uint32_t> order(size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [this](std::uint32_t a, std::uint32_t b) {
        return canonical_less((*this)[a], (*this)[b]);
    });
    std::vector<std::uint64_t> offsets;
    std::vector<Vertex> vertices;
    std::vector<double> values;
    offsets.reserve(offsets_.size());
    vertices.reserve(vertices_.size());
    values.reserve(values_.size());
    offsets.push_back(0);
    for (auto i : order) {
        const auto s = (*this)[i];
        vertices.insert(vertices.end(), s.vertices.begin(), s.vertices.end());
        offsets.push_back(vertices.size());
        values.push_back(s.value);
    }
    offsets_ = std::move(offsets);
    vertices_ = std::move(vertices);
    values_ = std::move(values);
}

std::size_t Filtration::count_at(double r) const noexcept {
    return static_cast<std::size_t>(std::upper_bound(values_.begin(), values_.end(), r) -
                                    values_.begin());
}

Filtration Filtration::prefix(double r) const {
    const std::size_t n = count_at(r);
    Filtration out(vertex_count_, dim_max_);
    out.offsets_.assign(offsets_.begin(), offsets_.begin() + static_cast<std::ptrdiff_t>(n + 1));
    out.vertices_.assign(vertices_.begin(), vertices_.begin() + static_cast<std::ptrdiff_t>(offsets_[n]));
    out.values_.assign(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
}

std::vector<std::size_t> Filtration::dimension_counts() const {
    std::vector<std::size_t> counts;
    for (std::size_t i = 0; i < size(); ++i) {
        const auto d = static_cast<std::size_t>(dim(i));
        if (counts.size() <= d) counts.resize(d + 1, 0);
        ++counts[d];
    }
    return counts;
}

namespace {

struct Candidate {
    Vertex vertex;
    double reach;  // largest distance from the current simplex's vertices
};

class CliqueExpander {
public:
    CliqueExpander(const WeightedGraph& graph, int max_dim, std::size_t limit, Filtration& out)
        : graph_(graph), max_dim_(max_dim), limit_(limit), out_(out) {}

    void run() {
        const auto n = graph_.upper.size();
        for (std::size_t u = 0; u < n; ++u) emit(std::span<const Vertex>(std::vector<Vertex>{static_cast<Vertex>(u)}), 0.0);
        if (max_dim_ < 1) return;
        std::vector<Candidate> cands;
        for (std::size_t u = 0; u < n; ++u) {
            cands.clear();
            for (const auto& e : graph_.upper[u]) cands.push_back({e.target, e.weight});
            simplex_.assign(1, static_cast<Vertex>(u));
            expand(0.0, cands);
        }
    }

private:
    void emit(std::span<const Vertex> vertices, double value) {
        if (out_.size() >= limit_) {
            throw ResourceLimit("simplex count exceeds the cap of " + std::to_string(limit_));
        }
        out_.push_back(vertices, value);
    }

    void expand(double value, const std::vector<Candidate>& cands) {
        std::vector<Candidate> next;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const Vertex w = cands[i].vertex;
            const double v = std::max(value, cands[i].reach);
            simplex_.push_back(w);
            emit(simplex_, v);
            if (static_cast<int>(simplex_.size()) <= max_dim_) {
                next.clear();
                const auto& nbrs = graph_.upper[w];
                std::size_t a = i + 1, b = 0;
                while (a < cands.size() && b < nbrs.size()) {
                    if (cands[a].vertex < nbrs[b].target) {
                        ++a;
                    } else if (nbrs[b].target < cands[a].vertex) {
                        ++b;
                    } else {
                        next.push_back({cands[a].vertex, std::max(cands[a].reach, nbrs[b].weight)});
                        ++a;
                        ++b;
                    }
                }
                if (!next.empty()) expand(v, next);
            }
            simplex_.pop_back();
        }
    }

    const WeightedGraph& graph_;
    int max_dim_;
    std::size_t limit_;
    Filtration& out_;
    std::vector<Vertex> simplex_;
};

}  // namespace

Filtration flag_filtration(const WeightedGraph& graph, int max_dim, std::size_t max_simplices) {
    if (max_dim < 0) throw InvalidArgument("max_dim must be nonnegative");
    Filtration out(graph.upper.size(), max_dim);
    CliqueExpander(graph, max_dim, max_simplices, out).run();
    out.canonicalize();
    return out;
}

Filtration vietoris_rips(const PointCloud& cloud, double r_max, int max_dim,
                         std::size_t max_simplices) {
    if (cloud.empty()) throw EmptyCloud("Vietoris-Rips needs a nonempty point cloud");
    if (max_dim < 0) throw InvalidArgument("max_dim must be nonnegative");
    const std::size_t n = cloud.size();
    WeightedGraph graph;
    graph.upper.resize(n);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t u = begin; u < end; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                const double d = euclidean_distance(cloud[u], cloud[v]);
                if (d < r_max) graph.upper[u].push_back({static_cast<Vertex>(v), d});
            }
        }
    });
    return flag_filtration(graph, max_dim, max_simplices);
}

LandmarkSet landmark_set(const PointCloud& cloud, std::vector<std::uint32_t> indices) {
    LandmarkSet set{std::move(indices), DenseMatrix(0, 0)};
    set.distances = DenseMatrix(set.indices.size(), cloud.size());
    parallel_for(set.indices.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            if (set.indices[i] >= cloud.size())
                continue;  // validated below
            const auto l = cloud[set.indices[i]];
            for (std::size_t j = 0; j < cloud.size(); ++j)
                set.distances(i, j) = euclidean_distance(l, cloud[j]);
        }
    });
    for (auto idx : set.indices)
        if (idx >= cloud.size())
            throw InvalidArgument("landmark index " + std::to_string(idx) + " out of range");
    return set;
}

namespace {
void check_landmark_count(const PointCloud& cloud, std::size_t count) {
    if (cloud.empty()) throw EmptyCloud("landmark selection on an empty cloud");
    if (count == 0) throw InvalidArgument("landmark count must be at least 1");
    if (count > cloud.size()) {
        throw CountTooLarge("requested " + std::to_string(count) + " landmarks from " +
                            std::to_string(cloud.size()) + " points");
    }
}
}  // namespace

LandmarkSet maxmin_landmarks(const PointCloud& cloud, std::size_t count, Rng& rng) {
    check_landmark_count(cloud, count);
    const std::size_t n = cloud.size();
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);

    LandmarkSet set{{}, DenseMatrix(count, n)};
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    std::vector<bool> chosen(n, false);
    std::size_t next = pick(rng);
    for (std::size_t i = 0; i < count; ++i) {
        set.indices.push_back(static_cast<std::uint32_t>(next));
        chosen[next] = true;
        const auto l = cloud[next];
        for (std::size_t j = 0; j < n; ++j) {
            const double d = euclidean_distance(l, cloud[j]);
            set.distances(i, j) = d;
            nearest[j] = std::min(nearest[j], d);
        }
        // farthest unchosen point; strict comparison keeps the smallest index
        std::size_t best = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (chosen[j]) continue;
            if (best == n || nearest[j] > nearest[best]) best = j;
        }
        next = best;
    }
    return set;
}

LandmarkSet random_landmarks(const PointCloud& cloud, std::size_t count, Rng& rng) {
    check_landmark_count(cloud, count);
    std::vector<std::uint32_t> perm(cloud.size());
    std::iota(perm.begin(), perm.end(), 0u);
    // partial Fisher-Yates
    for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, perm.size() - 1);
        std::swap(perm[i], perm[pick(rng)]);
    }
    perm.resize(count);
    return landmark_set(cloud, std::move(perm));
}

double witness_threshold(double dist_a, double dist_b, double others_min) noexcept {
    const double reach = std::max(dist_a, dist_b);
    if (reach <= others_min) return 0.0;  // includes others_min == +inf
    double r = reach - others_min;
    const double inf = std::numeric_limits<double>::infinity();
    // the rounded difference can land one ulp short of satisfying the inequality
    while (r + others_min < reach) r = std::nextafter(r, inf);
    return r;
}

Filtration witness_filtration(const PointCloud& cloud, const LandmarkSet& landmarks, double r_max,
                              int max_dim, std::size_t max_simplices) {
    const std::size_t nl = landmarks.size();
    if (nl < 2) throw TooFewLandmarks("witness complex needs at least two landmarks");
    if (max_dim < 0) throw InvalidArgument("max_dim must be nonnegative");
    if (landmarks.distances.rows() != nl || landmarks.distances.cols() != cloud.size())
        throw DimensionMismatch("landmark distance table does not match the cloud");

    const double inf = std::numeric_limits<double>::infinity();
    const std::size_t nx = cloud.size();
    const DenseMatrix& dist = landmarks.distances;

    const std::size_t workers = std::max<std::size_t>(1, std::min(worker_count(), nx));
    std::vector<std::vector<double>> partial(workers);
    const std::size_t chunk = (nx + workers - 1) / workers;
    parallel_for(workers, [&](std::size_t wb, std::size_t we) {
        for (std::size_t w = wb; w < we; ++w) {
            auto& best = partial[w];
            best.assign(nl * nl, inf);
            std::vector<double> col(nl);
            for (std::size_t x = w * chunk; x < std::min(nx, (w + 1) * chunk); ++x) {
                // three nearest landmarks to x
                std::size_t near[3] = {nl, nl, nl};
                for (std::size_t i = 0; i < nl; ++i) {
                    col[i] = dist(i, x);
                    for (int s = 0; s < 3; ++s) {
                        if (near[s] == nl || col[i] < col[near[s]]) {
                            for (int t = 2; t > s; --t) near[t] = near[t - 1];
                            near[s] = i;
                            break;
                        }
                    }
                }
                auto others_min = [&](std::size_t a, std::size_t b) {
                    for (std::size_t s : near)
                        if (s != nl && s != a && s != b) return col[s];
                    return inf;
                };
                for (std::size_t a = 0; a < nl; ++a) {
                    for (std::size_t b = a + 1; b < nl; ++b) {
                        const double t = witness_threshold(col[a], col[b], others_min(a, b));
                        double& slot = best[a * nl + b];
                        if (t < slot) slot = t;
                    }
                }
            }
        }
    });

    WeightedGraph graph;
    graph.upper.resize(nl);
    for (std::size_t a = 0; a < nl; ++a) {
        for (std::size_t b = a + 1; b < nl; ++b) {
            double v = inf;
            for (const auto& p : partial)
                if (!p.empty()) v = std::min(v, p[a * nl + b]);
            if (v <= r_max) graph.upper[a].push_back({static_cast<Vertex>(b), v});
        }
    }
    return flag_filtration(graph, max_dim, max_simplices);
}

}  // namespace grasstri
