#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "monotile/error.hpp"
#include "monotile/experiments.hpp"
#include "monotile/rng.hpp"

using namespace monotile;

TEST_CASE("config parsing and effective header") {
    std::istringstream in("# demo\nschema_version = 1\nseed = 7\npipeline.eps = 0.2  # inline\n\n");
    Config c = Config::parse(in);
    CHECK(c.get_uint("seed", 1) == 7);
    CHECK(c.get_rational("pipeline.eps", 0) == ratio(1, 5));
    CHECK(c.get_uint("workers", 3) == 3);
    c.set("seed", "9");
    CHECK(c.get_uint("seed", 1) == 9);
    CHECK(c.get_list("stars.n", {16, 32}) == std::vector<std::size_t>{16, 32});
    const std::string h = c.header();
    CHECK(h.rfind("# schema_version = 1\n", 0) == 0);
    CHECK(h.find("# seed = 9\n") != std::string::npos);
    CHECK(h.find("# workers = 3\n") != std::string::npos);
    CHECK(h.find("# stars.n = 16,32\n") != std::string::npos);

    std::istringstream unversioned("seed = 1\n");
    CHECK_THROWS_AS(Config::parse(unversioned), InvalidInput);
    std::istringstream future("schema_version = 2\n");
    CHECK_THROWS_AS(Config::parse(future), InvalidInput);
    std::istringstream bad("schema_version = 1\nnonsense\n");
    CHECK_THROWS_AS(Config::parse(bad), InvalidInput);
    std::istringstream bad_uint("schema_version = 1\nseed = x\n");
    Config b = Config::parse(bad_uint);
    CHECK_THROWS_AS(b.get_uint("seed", 1), InvalidInput);

    std::istringstream pipe("schema_version = 1\npipeline.k = 3\nabsorption.eta = 1/1000\n");
    const auto p = PipelineConfig::from(Config::parse(pipe));
    CHECK(p.k == 3);
    REQUIRE(p.absorption.eta);
    CHECK(*p.absorption.eta == ratio(1, 1000));
}

TEST_CASE("pipeline demo") {
    PipelineConfig cfg;
    auto mono = ColouredCompleteGraph(20, 2, 1);
    auto rep = run_pipeline_demo(mono, FamilySpec::cycles(), cfg);
    CHECK(rep.success);
    CHECK(rep.iterations == 1);
    CHECK(rep.uncovered.empty());
    CHECK(rep.partition_identity);

    Rng rng(3);
    auto small = ColouredCompleteGraph::random(12, 2, rng);
    auto greedy_only = run_pipeline_demo(small, FamilySpec::cycles(), cfg);
    CHECK(greedy_only.success);
    CHECK(greedy_only.cylinders.empty());
    CHECK(greedy_only.greedy.size() == 1);
    CHECK(verify_tiling(small, FamilySpec::cycles(), greedy_only.tiling, all_vertices(12)));

    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Rng r(seed);
        auto g = ColouredCompleteGraph::random(100, 2, r);
        auto res = run_pipeline_demo(g, FamilySpec::cycles(), cfg);
        CHECK(res.partition_identity);
        CHECK(res.cover_identity);
        if (res.success) {
            CHECK(verify_tiling(g, FamilySpec::cycles(), res.tiling, all_vertices(100)));
        } else {
            CHECK_FALSE(res.failed_stage.empty());
        }
        CHECK(res.format().find("partition identity: holds") != std::string::npos);
    }

    // A cylinder search that cannot trim is a stage failure, not an exception.
    PipelineConfig broken = cfg;
    broken.eps = ratio(9, 10);
    Rng r2(5);
    auto g2 = ColouredCompleteGraph::random(40, 2, r2);
    auto failed = run_pipeline_demo(g2, FamilySpec::cycles(), broken);
    CHECK_FALSE(failed.success);
    CHECK(failed.failed_stage == "regcyl");
    CHECK(failed.partition_identity);
    CHECK(failed.uncovered.size() == 40);
}

TEST_CASE("stars experiment") {
    const std::vector<std::size_t> one{1};
    auto single = run_stars_experiment(2, one, 5, 1);
    CHECK(single.rows[0].min == 1);
    CHECK(single.rows[0].max == 1);

    const std::vector<std::size_t> ns{6, 12};
    auto control = run_stars_experiment(2, ns, 0, 1);
    for (const auto& row : control.rows) {
        CHECK(row.median == 1.0);
        CHECK(row.completed == 1);
    }

    StarsOptions two;
    two.workers = 2;
    const std::vector<std::size_t> grid{8, 16, 24};
    auto a = run_stars_experiment(2, grid, 6, 11);
    auto b = run_stars_experiment(2, grid, 6, 11, two);
    CHECK(a.csv() == b.csv());
    CHECK(a.first_certified == std::optional<std::size_t>(9));
    CHECK(a.csv().rfind("r,n,samples", 0) == 0);
    CHECK(a.plot_data().find("# n min median max reference") == 0);
    for (const auto& row : a.rows) {
        CHECK(row.min <= row.median);
        CHECK(row.median <= row.max);
        CHECK_FALSE(row.partial);
    }
}

TEST_CASE("lemma suites") {
    auto empty = run_lemma_suites(1, {});
    CHECK(empty.suites.empty());
    CHECK(empty.passed());

    SuiteSizes small{{"slicing", 40}, {"robust", 20}, {"trim", 20}, {"ladder", 1000},
                     {"split", 20},   {"transversal", 50}, {"weakreg", 1}};
    auto report = run_lemma_suites(1, small);
    CHECK(report.passed());
    CHECK(report.suites.size() == 7);
    for (const auto& s : report.suites) {
        CHECK(s.instances == small.at(s.name));
    }
    CHECK(report.to_json().find("\"passed\": true") != std::string::npos);

    const auto dir = std::filesystem::temp_directory_path() / "monotile-suite-witness";
    std::filesystem::remove_all(dir);
    SuiteOptions corrupt;
    corrupt.corrupt_slicing = true;
    corrupt.out_dir = dir;
    auto bad = run_lemma_suites(1, {{"slicing", 200}}, corrupt);
    REQUIRE(bad.suites.size() == 1);
    CHECK(bad.suites[0].violations > 0);
    CHECK_FALSE(bad.passed());
    REQUIRE_FALSE(bad.suites[0].witness_files.empty());
    auto replay = replay_instance(bad.suites[0].witness_files.front());
    CHECK_FALSE(replay.passes);
    std::filesystem::remove_all(dir);

    CHECK_THROWS_AS(run_lemma_suites(1, {{"nonsense", 1}}), InvalidInput);
}
