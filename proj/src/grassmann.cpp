#include "grasstri/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "grasstri/error.hpp"

namespace grasstri {

std::string BettiProfile::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(betti[i]);
    }
    return out;
}

BettiProfile BettiProfile::parse(const std::string& text) {
    std::string cleaned = text;
    std::replace_if(cleaned.begin(), cleaned.end(), [](char c) { return c == ',' || c == '(' || c == ')'; }, ' ');
    std::istringstream in(cleaned);
    BettiProfile p;
    long long v = 0;
    while (in >> v) {
        if (v < 0) throw ParseError("negative Betti number in '" + text + "'");
        p.betti.push_back(static_cast<std::size_t>(v));
    }
    if (!in.eof()) throw ParseError("cannot parse Betti profile '" + text + "'");
    if (p.betti.empty()) throw ParseError("empty Betti profile");
    return p;
}

GrassmannParams::GrassmannParams(int n_, int k_) : n(n_), k(k_) {
    if (n < 1 || k < 1 || k > n) {
        throw InvalidArgument("Grassmann parameters need 1 <= k <= n (got n=" + std::to_string(n) +
                              ", k=" + std::to_string(k) + ")");
    }
}

SchubertSymbol::SchubertSymbol(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidArgument("Schubert symbol must be nonempty");
    if (entries_.front() < 1) throw InvalidArgument("Schubert symbol entries start at 1");
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i] <= entries_[i - 1])
            throw InvalidArgument("Schubert symbol entries must strictly increase");
}

bool SchubertSymbol::fits(const GrassmannParams& params) const noexcept {
    return size() == params.k && entries_.back() <= params.n;
}

std::vector<SchubertSymbol> schubert_symbols(const GrassmannParams& params) {
    std::vector<SchubertSymbol> out;
    std::vector<int> s(static_cast<std::size_t>(params.k));
    std::iota(s.begin(), s.end(), 1);
    const int k = params.k;
    for (;;) {
        out.emplace_back(s);
        // advance to the next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == params.n - k + i + 1) --i;
        if (i < 0) break;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

int cell_dimension(const SchubertSymbol& sigma) {
    int d = 0;
    for (int i = 0; i < sigma.size(); ++i) d += sigma[i] - (i + 1);
    return d;
}

BettiProfile betti_mod2(const GrassmannParams& params, int top_dim) {
    if (top_dim < 0 || top_dim > params.dimension()) {
        throw InvalidArgument("betti_mod2: top_dim must lie in [0, " +
                              std::to_string(params.dimension()) + "]");
    }
    // poly[m][j] = coefficients of the Gaussian binomial [m choose j]_q,
    // via [m, j] = [m-1, j-1] + q^j [m-1, j].
    using Poly = std::vector<std::size_t>;
    const int n = params.n;
    const int k = params.k;
    std::vector<Poly> row(static_cast<std::size_t>(k + 1));
    row[0] = Poly{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<Poly> next(static_cast<std::size_t>(k + 1));
        next[0] = Poly{1};
        for (int j = 1; j <= std::min(m, k); ++j) {
            const Poly& a = row[static_cast<std::size_t>(j - 1)];
            const Poly& b = row[static_cast<std::size_t>(j)];
            Poly sum(std::max(a.size(), b.empty() ? 0 : b.size() + static_cast<std::size_t>(j)), 0);
            for (std::size_t i = 0; i < a.size(); ++i) sum[i] += a[i];
            for (std::size_t i = 0; i < b.size(); ++i) sum[i + static_cast<std::size_t>(j)] += b[i];
            next[static_cast<std::size_t>(j)] = std::move(sum);
        }
        row = std::move(next);
    }
    const Poly& full = row[static_cast<std::size_t>(k)];
    BettiProfile out;
    out.betti.assign(static_cast<std::size_t>(top_dim + 1), 0);
    for (std::size_t r = 0; r < out.betti.size() && r < full.size(); ++r) out.betti[r] = full[r];
    return out;
}

PointCloud to_cloud(std::span<const ProjectionPoint> points) {
    if (points.empty()) return PointCloud{};
    PointCloud cloud(points.front().matrix.entries().size());
    cloud.reserve(points.size());
    for (const auto& p : points) cloud.push_back(p.flat());
    return cloud;
}

namespace {

void require_count(std::size_t count) {
    if (count == 0) throw InvalidArgument("sample count must be at least 1");
}

ProjectionPoint uniform_point(const GrassmannParams& params, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto n = static_cast<std::size_t>(params.n);
    const auto k = static_cast<std::size_t>(params.k);
    for (int attempt = 0;; ++attempt) {
        std::vector<std::vector<double>> vs(k, std::vector<double>(n));
        for (auto& v : vs)
            for (double& x : v) x = gauss(rng);
        try {
            return ProjectionPoint{params, projection_matrix(gram_schmidt(vs))};
        } catch (const LinearDependence&) {
            if (attempt + 1 >= max_sampling_retries) throw;
        }
    }
}

// Equal split of `total` into `parts` buckets, remainder to the first buckets.
std::vector<std::size_t> even_split(std::size_t total, std::size_t parts) {
    std::vector<std::size_t> out(parts, total / parts);
    for (std::size_t i = 0; i < total % parts; ++i) ++out[i];
    return out;
}

}  // namespace

std::vector<ProjectionPoint> sample_uniform(const GrassmannParams& params, std::size_t count,
                                            Rng& rng) {
    require_count(count);
    std::vector<ProjectionPoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(uniform_point(params, rng));
    return out;
}

DenseMatrix schubert_echelon(const GrassmannParams& params, const SchubertSymbol& sigma,
                             Rng& rng) {
    if (!sigma.fits(params)) throw InvalidArgument("Schubert symbol does not fit G_k(R^n)");
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto n = static_cast<std::size_t>(params.n);
    const auto k = static_cast<std::size_t>(params.k);
    DenseMatrix b(n, k);
    std::vector<bool> pivot_row(n, false);
    for (std::size_t c = 0; c < k; ++c) {
        const auto pivot = static_cast<std::size_t>(sigma[static_cast<int>(c)] - 1);
        for (std::size_t r = 0; r < pivot; ++r)
            if (!pivot_row[r]) b(r, c) = gauss(rng);
        b(pivot, c) = 1.0;
        pivot_row[pivot] = true;
    }
    return b;
}

ProjectionPoint cell_projection(const GrassmannParams& params, const DenseMatrix& echelon) {
    std::vector<std::vector<double>> cols;
    cols.reserve(echelon.cols());
    for (std::size_t c = 0; c < echelon.cols(); ++c) cols.push_back(echelon.column(c));
    return ProjectionPoint{params, projection_matrix(gram_schmidt(cols))};
}

ProjectionPoint sample_cell(const GrassmannParams& params, const SchubertSymbol& sigma, Rng& rng) {
    const DenseMatrix echelon = schubert_echelon(params, sigma, rng);
    const ProjectionPoint local = cell_projection(params, echelon);
    const DenseMatrix x = random_orthogonal(static_cast<std::size_t>(params.n), rng);
    DenseMatrix conj = x * local.matrix * x.transpose();
    // Store exactly symmetric.
    const auto n = conj.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) conj(j, i) = conj(i, j);
    return ProjectionPoint{params, std::move(conj)};
}

std::map<int, std::size_t> allocate_by_dimension(const GrassmannParams& params, std::size_t count,
                                                 const CellProportions& proportions) {
    const BettiProfile cells = betti_mod2(params);
    double total = 0.0;
    for (const auto& [dim, frac] : proportions) {
        if (!(frac >= 0.0) || !std::isfinite(frac))
            throw InvalidProportions("fraction for dimension " + std::to_string(dim) +
                                     " must be a nonnegative number");
        if (frac > 0.0 && (dim < 0 || dim > params.dimension() ||
                           cells[static_cast<std::size_t>(dim)] == 0))
            throw InvalidProportions("no Schubert cell of dimension " + std::to_string(dim));
        total += frac;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw InvalidProportions("fractions sum to " + std::to_string(total) + ", expected 1");
    }

    struct Share {
        int dim;
        std::size_t floor;
        double remainder;
    };
    std::vector<Share> shares;
    std::size_t assigned = 0;
    for (const auto& [dim, frac] : proportions) {
        if (frac <= 0.0) continue;
        const double exact = frac * static_cast<double>(count);
        auto fl = static_cast<std::size_t>(std::floor(exact + 1e-9));
        double rem = exact - static_cast<double>(fl);
        if (rem < 0.0) rem = 0.0;
        shares.push_back({dim, fl, rem});
        assigned += fl;
    }
    std::vector<std::size_t> order(shares.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return shares[a].remainder > shares[b].remainder; });
    for (std::size_t i = 0; assigned < count && i < order.size(); ++i, ++assigned)
        ++shares[order[i]].floor;

    std::map<int, std::size_t> out;
    for (const auto& s : shares) out[s.dim] = s.floor;
    return out;
}

std::vector<ProjectionPoint> sample_biased(const GrassmannParams& params, std::size_t count,
                                           const CellProportions& proportions, Rng& rng) {
    require_count(count);
    const auto per_dim = allocate_by_dimension(params, count, proportions);
    const auto symbols = schubert_symbols(params);
    std::vector<ProjectionPoint> out;
    out.reserve(count);
    for (const auto& [dim, n_dim] : per_dim) {
        std::vector<const SchubertSymbol*> cells;
        for (const auto& s : symbols)
            if (cell_dimension(s) == dim) cells.push_back(&s);
        const auto split = even_split(n_dim, cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (std::size_t i = 0; i < split[c]; ++i) out.push_back(sample_cell(params, *cells[c], rng));
    }
    return out;
}

std::vector<double> sample_sphere(std::size_t dim, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(dim);
    for (;;) {
        for (double& x : v) x = gauss(rng);
        const double len = norm(v);
        if (len > 1e-12) {
            for (double& x : v) x /= len;
            return v;
        }
    }
}

namespace {
void require_unit3(std::span<const double> p) {
    if (p.size() != 3) throw DimensionMismatch("RP^2 embeddings take points of R^3");
    if (std::abs(norm(p) - 1.0) > tolerance::unit_norm) throw NotUnit("point is not on the unit sphere");
}
}  // namespace

std::array<double, 4> rp2_embed_r4(std::span<const double> p) {
    require_unit3(p);
    const double x = p[0], y = p[1], z = p[2];
    return {x * y, x * z, y * y - z * z, 2.0 * y * z};
}

std::array<double, 5> rp2_embed_r5(std::span<const double> p) {
    require_unit3(p);
    const double x = p[0], y = p[1], z = p[2];
    return {y * z, x * z, x * y, 0.5 * (x * x - y * y),
            (x * x + y * y - 2.0 * z * z) / (2.0 * std::sqrt(3.0))};
}

PointCloud sample_rp2_r4(std::size_t count, Rng& rng) {
    require_count(count);
    PointCloud cloud(4);
    cloud.reserve(count);
    for (std::size_t i = 0; i < count; ++i) cloud.push_back(rp2_embed_r4(sample_sphere(3, rng)));
    return cloud;
}

PointCloud sample_rp2_r5(std::size_t count, Rng& rng) {
    require_count(count);
    PointCloud cloud(5);
    cloud.reserve(count);
    for (std::size_t i = 0; i < count; ++i) cloud.push_back(rp2_embed_r5(sample_sphere(3, rng)));
    return cloud;
}

PointCloud sample_so3(std::size_t count, Rng& rng) {
    require_count(count);
    PointCloud cloud(9);
    cloud.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        DenseMatrix q = random_orthogonal(3, rng);
        const double det = q(0, 0) * (q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1)) -
                           q(0, 1) * (q(1, 0) * q(2, 2) - q(1, 2) * q(2, 0)) +
                           q(0, 2) * (q(1, 0) * q(2, 1) - q(1, 1) * q(2, 0));
        if (det < 0.0)
            for (std::size_t r = 0; r < 3; ++r) q(r, 0) = -q(r, 0);
        cloud.push_back(q.entries());
    }
    return cloud;
}

}  // namespace grasstri
