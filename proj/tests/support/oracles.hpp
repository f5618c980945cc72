#pragma once

// Brute-force reference implementations used by the unit and acceptance
// tests. None of these share code with the library paths they check.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include <grasstri/complexes.hpp>
#include <grasstri/linalg.hpp>
#include <grasstri/point_cloud.hpp>

namespace oracle {

using Bits = std::vector<std::uint64_t>;

// Rank over Z/2 of a set of sparse columns (row indices < nrows).
inline std::size_t gf2_rank(const std::vector<std::vector<std::size_t>>& columns, std::size_t nrows) {
    const std::size_t words = (nrows + 63) / 64;
    std::vector<Bits> rows;
    rows.reserve(columns.size());
    for (const auto& c : columns) {
        Bits b(words, 0);
        for (auto r : c) b[r / 64] ^= std::uint64_t{1} << (r % 64);
        rows.push_back(std::move(b));
    }
    std::size_t rank = 0;
    for (std::size_t bit = 0; bit < nrows && rank < rows.size(); ++bit) {
        const std::size_t w = bit / 64;
        const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
        std::size_t piv = rank;
        while (piv < rows.size() && !(rows[piv][w] & mask)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && (rows[i][w] & mask))
                for (std::size_t j = 0; j < words; ++j) rows[i][j] ^= rows[rank][j];
        ++rank;
    }
    return rank;
}

// Betti numbers of the subcomplex {value <= r} in degrees 0..max_degree,
// from ranks of boundary maps: b_p = n_p - rank d_p - rank d_{p+1}.
inline std::vector<std::size_t> betti_by_rank(const grasstri::Filtration& f, double r, int max_degree) {
    std::vector<std::map<std::vector<grasstri::Vertex>, std::size_t>> index(
        static_cast<std::size_t>(max_degree + 2));
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto s = f[i];
        if (s.value > r || s.dim() > max_degree + 1) continue;
        auto& slot = index[static_cast<std::size_t>(s.dim())];
        slot.emplace(std::vector<grasstri::Vertex>(s.vertices.begin(), s.vertices.end()), slot.size());
    }
    auto boundary_rank = [&](int p) -> std::size_t {
        if (p <= 0 || p > max_degree + 1) return 0;
        const auto& faces = index[static_cast<std::size_t>(p - 1)];
        std::vector<std::vector<std::size_t>> cols;
        for (const auto& [verts, _] : index[static_cast<std::size_t>(p)]) {
            std::vector<std::size_t> col;
            for (std::size_t drop = 0; drop < verts.size(); ++drop) {
                auto face = verts;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                col.push_back(faces.at(face));
            }
            cols.push_back(std::move(col));
        }
        return gf2_rank(cols, faces.size());
    };
    std::vector<std::size_t> out;
    for (int p = 0; p <= max_degree; ++p) {
        const std::size_t np = index[static_cast<std::size_t>(p)].size();
        out.push_back(np - boundary_rank(p) - boundary_rank(p + 1));
    }
    return out;
}

// Number of k-subsets of {1..n} whose sum of (s_i - i) equals r, by bitmask
// enumeration.
inline std::size_t cells_of_dimension(int n, int k, int r) {
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        int d = 0, i = 1;
        for (int bit = 0; bit < n; ++bit)
            if (mask & (1u << bit)) d += (bit + 1) - i++;
        if (d == r) ++count;
    }
    return count;
}

inline std::uint64_t binomial(int n, int k) {
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return c;
}

// Direct test of the edge condition: some x has d(x,a), d(x,b) <= R + min
// over the other landmarks of d(x,l).
inline bool witness_edge(const grasstri::PointCloud& cloud, const std::vector<std::uint32_t>& landmarks,
                         std::size_t a, std::size_t b, double R) {
    for (std::size_t x = 0; x < cloud.size(); ++x) {
        double others = std::numeric_limits<double>::infinity();
        for (std::size_t l = 0; l < landmarks.size(); ++l)
            if (l != a && l != b)
                others = std::min(others, grasstri::euclidean_distance(cloud[x], cloud[landmarks[l]]));
        const double da = grasstri::euclidean_distance(cloud[x], cloud[landmarks[a]]);
        const double db = grasstri::euclidean_distance(cloud[x], cloud[landmarks[b]]);
        if (da <= R + others && db <= R + others) return true;
    }
    return false;
}

// Numerical rank of a small dense matrix by Gaussian elimination with
// complete pivoting; entries below `tol` count as zero.
inline int numeric_rank(std::vector<std::vector<double>> m, double tol) {
    int rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<bool> used_row(rows, false), used_col(cols, false);
    for (;;) {
        double best = tol;
        std::size_t br = rows, bc = cols;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (!used_row[i] && !used_col[j] && std::abs(m[i][j]) > best) {
                    best = std::abs(m[i][j]);
                    br = i;
                    bc = j;
                }
        if (br == rows) return rank;
        used_row[br] = used_col[bc] = true;
        ++rank;
        for (std::size_t i = 0; i < rows; ++i) {
            if (used_row[i]) continue;
            const double f = m[i][bc] / m[br][bc];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[br][j];
        }
    }
}

inline grasstri::PointCloud random_cloud(std::size_t points, std::size_t dim, std::mt19937_64& rng,
                                         double scale = 1.0) {
    std::uniform_real_distribution<double> u(0.0, scale);
    grasstri::PointCloud cloud(dim);
    std::vector<double> p(dim);
    for (std::size_t i = 0; i < points; ++i) {
        for (double& x : p) x = u(rng);
        cloud.push_back(p);
    }
    return cloud;
}

// Euler characteristic of {value <= r}.
inline long long euler_at(const grasstri::Filtration& f, double r) {
    long long chi = 0;
    for (std::size_t i = 0; i < f.size() && f.value(i) <= r; ++i) chi += (f.dim(i) % 2 == 0) ? 1 : -1;
    return chi;
}

}  // namespace oracle
