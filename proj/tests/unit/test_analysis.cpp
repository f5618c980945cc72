#include <doctest.h>

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include <grasstri/analysis.hpp>
#include <grasstri/error.hpp>

#include "support/oracles.hpp"

using namespace grasstri;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

Barcode random_barcode(std::mt19937_64& rng, int degrees) {
    Barcode b;
    b.degrees.resize(static_cast<std::size_t>(degrees));
    for (auto& list : b.degrees) {
        const std::size_t n = rng() % 5;
        for (std::size_t i = 0; i < n; ++i) {
            const double birth = static_cast<double>(rng() % 6);
            const double death = rng() % 4 == 0 ? inf : birth + 1.0 + static_cast<double>(rng() % 4);
            list.push_back({birth, death});
        }
        std::sort(list.begin(), list.end(), [](const Interval& x, const Interval& y) {
            return x.birth != y.birth ? x.birth < y.birth : x.death < y.death;
        });
    }
    return b;
}

bool profile_matches(const Barcode& b, const BettiProfile& target, int top_dim, double r) {
    const BettiProfile p = betti_at(b, r);
    for (int d = 0; d <= top_dim; ++d)
        if (p[static_cast<std::size_t>(d)] != target[static_cast<std::size_t>(d)]) return false;
    return true;
}

}  // namespace

TEST_CASE("matching_windows examples") {
    const Barcode b{{{{0.0, inf}}, {{1.0, 2.0}}}};
    const WindowReport one = matching_windows(b, BettiProfile{{1, 1}}, 1);
    CHECK(one.windows == std::vector<Window>{{1.0, 2.0}});
    CHECK(one.critical_values == std::vector<double>{0.0, 1.0, 2.0});
    CHECK(one.found());
    CHECK(one.widest() == Window{1.0, 2.0});

    const WindowReport two = matching_windows(b, BettiProfile{{1, 0}}, 1);
    CHECK(two.windows == std::vector<Window>{{0.0, 1.0}, {2.0, inf}});
    CHECK(two.widest() == Window{2.0, inf});

    const WindowReport none = matching_windows(b, BettiProfile{{5, 0}}, 1);
    CHECK(none.windows.empty());
    CHECK_FALSE(none.found());
    CHECK_THROWS_AS(none.widest(), InvalidArgument);

    // Degrees above top_dim are ignored.
    CHECK(matching_windows(b, BettiProfile{{1}}, 0).windows == std::vector<Window>{{0.0, inf}});
    CHECK_THROWS_AS(matching_windows(b, BettiProfile{{1}}, 1), InvalidArgument);
    CHECK_THROWS_AS(matching_windows(b, BettiProfile{{1}}, -1), InvalidArgument);
}

TEST_CASE("empty barcode matches the zero profile everywhere") {
    const WindowReport r = matching_windows(Barcode{}, BettiProfile{{0, 0}}, 1);
    CHECK(r.windows == std::vector<Window>{{0.0, inf}});
    CHECK(r.critical_values.empty());
}

TEST_CASE("windows are correct, disjoint and maximal") {
    std::mt19937_64 rng(31);
    int found = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int degrees = 1 + static_cast<int>(rng() % 3);
        const Barcode b = random_barcode(rng, degrees);
        const int top = static_cast<int>(rng() % static_cast<unsigned>(degrees));
        // Take the target from the barcode itself half the time so matches occur.
        BettiProfile target = betti_at(b, static_cast<double>(rng() % 8) + 0.5);
        if (target.size() < static_cast<std::size_t>(top + 1)) target.betti.resize(static_cast<std::size_t>(top + 1), 0);
        if (trial % 2) target.betti[0] = rng() % 3;
        const WindowReport rep = matching_windows(b, target, top);
        found += rep.found();

        std::set<double> crit(rep.critical_values.begin(), rep.critical_values.end());
        CHECK(crit.size() == rep.critical_values.size());
        CHECK(std::is_sorted(rep.critical_values.begin(), rep.critical_values.end()));
        for (std::size_t i = 0; i < rep.windows.size(); ++i) {
            const Window& w = rep.windows[i];
            CHECK(w.lower < w.upper);
            if (i) CHECK(rep.windows[i - 1].upper < w.lower);
            CHECK(profile_matches(b, target, top, w.lower));
            CHECK(profile_matches(b, target, top, w.midpoint()));
            // Barcode endpoints are integers, so 0.25 is below every gap.
            if (w.lower > 0.0) CHECK_FALSE(profile_matches(b, target, top, w.lower - 0.25));
            if (w.upper != inf) CHECK_FALSE(profile_matches(b, target, top, w.upper));
        }
        // Every grid point that matches lies in some window.
        for (double r = 0.0; r < 12.0; r += 0.25) {
            const bool inside = std::any_of(rep.windows.begin(), rep.windows.end(),
                                            [&](const Window& w) { return w.contains(r); });
            CHECK(inside == profile_matches(b, target, top, r));
        }
    }
    CHECK(found > 100);
}

TEST_CASE("Window helpers") {
    const Window w{1.0, 3.0};
    CHECK(w.width() == 2.0);
    CHECK(w.midpoint() == 2.0);
    CHECK(w.contains(1.0));
    CHECK_FALSE(w.contains(3.0));
    const Window open{2.0, inf};
    CHECK(open.midpoint() == 3.0);
    CHECK(open.contains(1e300));
}

TEST_CASE("export_complex") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        const PointCloud cloud = oracle::random_cloud(5 + rng() % 10, 2, rng);
        const Filtration f = vietoris_rips(cloud, 1.0, 3);
        const double r = 0.1 * static_cast<double>(rng() % 10);
        const Filtration c = export_complex(f, r);
        std::set<std::vector<Vertex>> present;
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(c.value(i) <= r);
            present.insert({c[i].vertices.begin(), c[i].vertices.end()});
        }
        CHECK(c.size() == f.count_at(r));
        for (const auto& s : present) {
            for (std::size_t drop = 0; drop < s.size() && s.size() > 1; ++drop) {
                auto face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                CHECK(present.count(face) == 1);
            }
        }
        CHECK(export_complex(f, 0.0).size() == cloud.size());
        CHECK(export_complex(f, 1e9) == f);
    }
    CHECK_THROWS_AS(export_complex(Filtration{}, -1.0), InvalidArgument);
}
