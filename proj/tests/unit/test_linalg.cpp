#include <doctest.h>

#include <cmath>
#include <vector>

#include <grasstri/error.hpp>
#include <grasstri/linalg.hpp>

using namespace grasstri;

namespace {

double orthonormality_error(const DenseMatrix& a) {
    return max_abs(a.transpose() * a - DenseMatrix::identity(a.cols()));
}

std::vector<double> gaussian(std::size_t n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = g(rng);
    return v;
}

}  // namespace

TEST_CASE("gram_schmidt on small examples") {
    SUBCASE("already orthonormal input is unchanged") {
        std::vector<std::vector<double>> vs{{1, 0, 0}, {0, 1, 0}};
        const Frame f = gram_schmidt(vs);
        CHECK(f.matrix() == DenseMatrix(3, 2, {1, 0, 0, 1, 0, 0}));
    }
    SUBCASE("(1,1) then (1,0)") {
        std::vector<std::vector<double>> vs{{1, 1}, {1, 0}};
        const Frame f = gram_schmidt(vs);
        const double s = 1.0 / std::sqrt(2.0);
        CHECK(f.column(0)[0] == doctest::Approx(s));
        CHECK(f.column(0)[1] == doctest::Approx(s));
        CHECK(f.column(1)[0] == doctest::Approx(s));
        CHECK(f.column(1)[1] == doctest::Approx(-s));
    }
    SUBCASE("dependent vectors") {
        std::vector<std::vector<double>> vs{{1, 2, 3}, {2, 4, 6}};
        CHECK_THROWS_AS(gram_schmidt(vs), LinearDependence);
    }
    SUBCASE("zero vector") {
        std::vector<std::vector<double>> vs{{0, 0}};
        CHECK_THROWS_AS(gram_schmidt(vs), LinearDependence);
    }
    SUBCASE("bad shapes") {
        std::vector<std::vector<double>> too_many{{1, 0}, {0, 1}, {1, 1}};
        CHECK_THROWS_AS(gram_schmidt(too_many), InvalidArgument);
        std::vector<std::vector<double>> ragged{{1, 0, 0}, {0, 1}};
        CHECK_THROWS_AS(gram_schmidt(ragged), DimensionMismatch);
        std::vector<std::vector<double>> none;
        CHECK_THROWS_AS(gram_schmidt(none), InvalidArgument);
    }
}

TEST_CASE("gram_schmidt output is orthonormal and spans the input prefix") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 9);
        const std::size_t k = 1 + static_cast<std::size_t>(trial % static_cast<int>(n));
        std::vector<std::vector<double>> vs;
        for (std::size_t i = 0; i < k; ++i) vs.push_back(gaussian(n, rng));
        const Frame f = gram_schmidt(vs);
        CHECK(orthonormality_error(f.matrix()) < tolerance::orthonormal);
        // q_i is orthogonal to every earlier input vector.
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < i; ++j) CHECK(std::abs(dot(f.column(i), vs[j])) < 1e-9);
        // Positive diagonal of R.
        for (std::size_t i = 0; i < k; ++i) CHECK(dot(f.column(i), vs[i]) > 0.0);
    }
}

TEST_CASE("random_orthogonal") {
    SUBCASE("orthogonal and deterministic") {
        for (std::size_t n : {1u, 2u, 3u, 4u, 9u}) {
            Rng a(5), b(5);
            const DenseMatrix x = random_orthogonal(n, a);
            CHECK(orthonormality_error(x) < tolerance::orthonormal);
            CHECK(max_abs(x * x.transpose() - DenseMatrix::identity(n)) < tolerance::orthonormal);
            CHECK(x == random_orthogonal(n, b));
        }
    }
    SUBCASE("preserves norms") {
        Rng rng(3);
        for (int t = 0; t < 50; ++t) {
            const DenseMatrix x = random_orthogonal(5, rng);
            const auto v = gaussian(5, rng);
            DenseMatrix col(5, 1, v);
            const DenseMatrix y = x * col;
            CHECK(norm(y.entries()) == doctest::Approx(norm(v)).epsilon(1e-12));
        }
    }
    SUBCASE("first column looks uniform on the circle") {
        // Mean of cos and sin of the angle should be near zero for Haar.
        Rng rng(99);
        double c = 0, s = 0;
        const int trials = 4000;
        for (int t = 0; t < trials; ++t) {
            const DenseMatrix x = random_orthogonal(2, rng);
            c += x(0, 0);
            s += x(1, 0);
        }
        CHECK(std::abs(c / trials) < 0.05);
        CHECK(std::abs(s / trials) < 0.05);
    }
    Rng rng(1);
    CHECK_THROWS_AS(random_orthogonal(0, rng), InvalidArgument);
}

TEST_CASE("projection_matrix invariants") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        const std::size_t k = 1 + static_cast<std::size_t>(trial % static_cast<int>(n));
        std::vector<std::vector<double>> vs;
        for (std::size_t i = 0; i < k; ++i) vs.push_back(gaussian(n, rng));
        const Frame f = gram_schmidt(vs);
        const DenseMatrix p = projection_matrix(f);
        CHECK(p == p.transpose());
        CHECK(max_abs(p * p - p) < tolerance::idempotent);
        CHECK(p.trace() == doctest::Approx(static_cast<double>(k)).epsilon(1e-12));

        // Any other orthonormal basis of the same span gives the same matrix.
        const DenseMatrix rot = random_orthogonal(k, rng);
        const DenseMatrix rotated = f.matrix() * rot;
        std::vector<std::vector<double>> rotated_cols;
        for (std::size_t c = 0; c < k; ++c) rotated_cols.push_back(rotated.column(c));
        const DenseMatrix q = projection_matrix(gram_schmidt(rotated_cols));
        CHECK(max_abs(p - q) < 1e-9);
    }
}

TEST_CASE("euclidean_distance") {
    const std::vector<double> o{0, 0}, a{3, 4};
    CHECK(euclidean_distance(o, a) == 5.0);
    CHECK(euclidean_distance(a, a) == 0.0);
    CHECK(euclidean_distance(a, o) == euclidean_distance(o, a));
    const std::vector<double> short_point{1.0};
    CHECK_THROWS_AS(euclidean_distance(o, short_point), DimensionMismatch);

    Rng rng(8);
    for (int t = 0; t < 500; ++t) {
        const auto x = gaussian(6, rng), y = gaussian(6, rng), z = gaussian(6, rng);
        CHECK(euclidean_distance(x, z) <= euclidean_distance(x, y) + euclidean_distance(y, z) + 1e-12);
        CHECK(euclidean_distance(x, y) == euclidean_distance(y, x));
    }
}

TEST_CASE("DenseMatrix basics") {
    const DenseMatrix a(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(a.transpose() == DenseMatrix(3, 2, {1, 4, 2, 5, 3, 6}));
    CHECK((a * a.transpose()) == DenseMatrix(2, 2, {14, 32, 32, 77}));
    CHECK(a.column(1) == std::vector<double>{2, 5});
    CHECK_THROWS_AS(a * a, DimensionMismatch);
    CHECK_THROWS_AS(DenseMatrix(2, 2, {1, 2, 3}), DimensionMismatch);
    CHECK(DenseMatrix::identity(3).trace() == 3.0);
}
