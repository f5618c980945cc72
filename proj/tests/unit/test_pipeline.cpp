#include <doctest.h>

#include <filesystem>
#include <limits>
#include <string>

#include <grasstri/error.hpp>
#include <grasstri/io.hpp>
#include <grasstri/parallel.hpp>
#include <grasstri/pipeline.hpp>

using namespace grasstri;

namespace {

ExperimentConfig small_rp2() {
    ExperimentConfig c;
    c.space = Space::rp2_r5;
    c.points = 60;
    c.complex = ComplexKind::rips;
    c.r_max = 1.0;
    c.max_dim = 2;
    c.seed = 3;
    return c;
}

}  // namespace

TEST_CASE("config text round-trips") {
    ExperimentConfig c;
    c.space = Space::grassmann;
    c.n = 4;
    c.k = 2;
    c.points = 500;
    c.complex = ComplexKind::witness;
    c.r_max = 0.25;
    c.max_dim = 4;
    c.landmarks = 40;
    c.landmark_method = LandmarkMethod::random;
    c.seed = 9;
    c.proportions = {{1, 0.05}, {2, 0.30}, {3, 0.25}, {4, 0.40}};
    c.output_dir = "out/g24";
    const ExperimentConfig back = parse_config(format_config(c));
    CHECK(format_config(back) == format_config(c));
    CHECK(back.proportions == c.proportions);
    CHECK(back.landmark_method == c.landmark_method);

    const ExperimentConfig dashed = parse_config("space = rp3  # comment\nmax-dim = 3\npoints=10\n");
    CHECK(dashed.space == Space::rp3);
    CHECK(dashed.max_dim == 3);
    CHECK(dashed.points == 10);

    CHECK_THROWS_AS(parse_config("colour = red\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_config("points 10\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_config("points = ten\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_config("r_max = big\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_config("space = torus\n"), InvalidArgument);
}

TEST_CASE("names and proportions") {
    CHECK(parse_space("so3") == Space::rp3);
    CHECK(parse_space("rp2-r4") == Space::rp2_r4);
    CHECK(to_string(Space::rp2_r5) == "rp2-r5");
    CHECK(parse_complex_kind("witness") == ComplexKind::witness);
    CHECK(parse_landmark_method("maxmin") == LandmarkMethod::maxmin);
    CHECK_THROWS_AS(parse_landmark_method("density"), InvalidArgument);
    CHECK(parse_proportions("1:0.05,2:0.3") == CellProportions{{1, 0.05}, {2, 0.3}});
    CHECK(format_proportions({{1, 0.5}, {4, 0.5}}) == "1:0.5,4:0.5");
    CHECK_THROWS_AS(parse_proportions("1-0.5"), InvalidArgument);
    CHECK_THROWS_AS(parse_proportions("1:0.5,1:0.5"), InvalidArgument);
    CHECK_THROWS_AS(parse_proportions("x:1"), InvalidArgument);
}

TEST_CASE("config validation") {
    ExperimentConfig c = small_rp2();
    CHECK_NOTHROW(c.validate());
    SUBCASE("rips rejects landmark fields") {
        c.landmarks = 5;
        CHECK_THROWS_AS(c.validate(), InvalidArgument);
    }
    SUBCASE("witness needs two landmarks") {
        c.complex = ComplexKind::witness;
        c.landmarks = 1;
        CHECK_THROWS_AS(c.validate(), InvalidArgument);
        c.landmarks = 61;
        CHECK_THROWS_AS(c.validate(), InvalidArgument);
        c.landmarks = 10;
        CHECK_NOTHROW(c.validate());
    }
    SUBCASE("proportions only for grassmann") {
        c.proportions = {{1, 1.0}};
        CHECK_THROWS_AS(c.validate(), InvalidArgument);
    }
    SUBCASE("top_dim bounded by max_dim") {
        c.top_dim = 3;
        CHECK_THROWS_AS(c.validate(), InvalidArgument);
    }
    SUBCASE("grassmann parameters") {
        c.space = Space::grassmann;
        c.n = 2;
        c.k = 3;
        CHECK_THROWS_AS(c.validate(), InvalidArgument);
    }
    SUBCASE("zero points") {
        c.points = 0;
        CHECK_THROWS_AS(c.validate(), InvalidArgument);
    }
}

TEST_CASE("targets") {
    CHECK(space_target(Space::grassmann, 4, 2, 4) == BettiProfile{{1, 1, 2, 1, 1}});
    CHECK(space_target(Space::rp2_r4, 0, 0, 2) == BettiProfile{{1, 1, 1}});
    CHECK(space_target(Space::rp3, 0, 0, 3) == BettiProfile{{1, 1, 1, 1}});
    CHECK(space_target(Space::rp2_r5, 0, 0, 4) == BettiProfile{{1, 1, 1, 0, 0}});
    ExperimentConfig c = small_rp2();
    CHECK(c.effective_top_dim() == 2);
    c.max_dim = 5;
    CHECK(c.effective_top_dim() == 2);
    CHECK(c.target() == BettiProfile{{1, 1, 1}});
}

TEST_CASE("a one-point space matches from zero on") {
    ExperimentConfig c;
    c.space = Space::grassmann;
    c.n = 1;
    c.k = 1;
    c.points = 1;
    c.max_dim = 1;
    const PipelineResult r = run_pipeline(c);
    CHECK(r.report.windows == std::vector<Window>{{0.0, std::numeric_limits<double>::infinity()}});
    CHECK(r.export_simplex_count == 1u);
}

TEST_CASE("pipeline is deterministic and writes its artifacts") {
    const auto dir = std::filesystem::temp_directory_path() / "grasstri_pipeline_test";
    std::filesystem::remove_all(dir);
    ExperimentConfig c = small_rp2();
    c.output_dir = dir / "a";
    c.write_filtration = true;
    const PipelineResult a = run_pipeline(c);
    c.output_dir = dir / "b";
    const PipelineResult b = run_pipeline(c);
    CHECK(a.barcode == b.barcode);
    for (const char* name : {"cloud.txt", "filtration.txt", "barcode.csv", "barcode.svg", "report.txt"})
        CHECK(io::read_text(dir / "a" / name) == io::read_text(dir / "b" / name));
    CHECK(a.simplex_count > 0);
    CHECK(a.cloud_size == 60);

    std::istringstream csv(io::read_text(dir / "a" / "barcode.csv"));
    CHECK(io::read_barcode_csv(csv) == a.barcode);
    if (a.report.found()) {
        CHECK(std::filesystem::exists(dir / "a" / "complex.txt"));
        std::istringstream complex(io::read_text(dir / "a" / "complex.txt"));
        CHECK(io::read_filtration(complex).size() == *a.export_simplex_count);
    }

    c.seed = 4;
    c.output_dir.clear();
    CHECK_FALSE(run_pipeline(c).barcode == a.barcode);
    std::filesystem::remove_all(dir);
}

TEST_CASE("witness pipeline") {
    ExperimentConfig c;
    c.space = Space::rp2_r5;
    c.points = 400;
    c.complex = ComplexKind::witness;
    c.landmarks = 25;
    c.r_max = 0.3;
    c.max_dim = 2;
    c.seed = 1;
    const PipelineResult r = run_pipeline(c);
    CHECK(r.simplices_by_dim.at(0) == 25);
    CHECK(r.cloud_size == 400);
}

TEST_CASE("pipeline enforces the simplex cap") {
    ExperimentConfig c = small_rp2();
    c.r_max = 3.0;
    c.simplex_cap = 1000;
    CHECK_THROWS_AS(run_pipeline(c), ResourceLimit);
}

TEST_CASE("results do not depend on the worker count") {
    ExperimentConfig c = small_rp2();
    c.complex = ComplexKind::witness;
    c.points = 300;
    c.landmarks = 20;
    c.r_max = 0.4;
    setenv("GRASSTRI_THREADS", "1", 1);
    const PipelineResult one = run_pipeline(c);
    setenv("GRASSTRI_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    const PipelineResult three = run_pipeline(c);
    unsetenv("GRASSTRI_THREADS");
    CHECK(one.barcode == three.barcode);
    CHECK(one.simplex_count == three.simplex_count);
}
