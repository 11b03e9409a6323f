#include <doctest.h>

#include "matdom/harness.hpp"

using namespace matdom;
using namespace matdom::bench;

namespace {

BenchSpec tiny_spec() {
    BenchSpec spec;
    spec.sizes = {4};
    spec.methods = {"ga"};
    spec.seeds = {1};
    spec.evaluation_budget = 300;
    spec.ga.population_size = 10;
    spec.crowd.experts = 3;
    spec.measure_time = false;
    return spec;
}

} // namespace

TEST_CASE("one cell produces exactly one row") {
    const auto rows = run_benchmark(tiny_spec());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].method == "ga");
    CHECK(rows[0].n == 4);
    CHECK(rows[0].seed == 1);
    CHECK(rows[0].status == "ok");
    CHECK(rows[0].best_fitness == rows[0].best_influence - rows[0].best_penalty);
}

TEST_CASE("identical specs give byte-identical CSV when timing is off") {
    BenchSpec spec = tiny_spec();
    spec.sizes = {3, 4};
    spec.methods = {"greedy", "ga", "ga-woc"};
    spec.seeds = {1, 2};
    CHECK(rows_to_csv(run_benchmark(spec)) == rows_to_csv(run_benchmark(spec)));
}

TEST_CASE("ga and ga-woc consume the same evaluation budget") {
    BenchSpec spec = tiny_spec();
    spec.methods = {"ga", "ga-woc"};
    spec.evaluation_budget = 3000; // divisible by experts * population
    const auto rows = run_benchmark(spec);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].evaluations == spec.evaluation_budget);
    CHECK(rows[1].evaluations == spec.evaluation_budget);
}

TEST_CASE("rows are ordered by size, method name, seed") {
    BenchSpec spec = tiny_spec();
    spec.sizes = {5, 3};
    spec.methods = {"greedy", "ga"};
    spec.seeds = {2, 1};
    const auto rows = run_benchmark(spec);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].n == 3);
    CHECK(rows[0].method == "ga");
    CHECK(rows[0].seed == 1);
    CHECK(rows[1].seed == 2);
    CHECK(rows[2].method == "greedy");
    CHECK(rows[4].n == 5);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].run_id == static_cast<long long>(i));
    }
}

TEST_CASE("infeasible exact cells become status rows, not omissions") {
    BenchSpec spec = tiny_spec();
    spec.sizes = {6}; // 36 cells exceed the default oracle budget of 25
    spec.methods = {"exact"};
    const auto rows = run_benchmark(spec);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].status == "skipped:oracle-budget");

    BenchSpec ok = tiny_spec();
    ok.sizes = {3};
    ok.methods = {"exact"};
    const auto ok_rows = run_benchmark(ok);
    CHECK(ok_rows[0].status == "ok");
    CHECK(ok_rows[0].dominator_count == 3);
}

TEST_CASE("the line model runs through every method") {
    BenchSpec spec = tiny_spec();
    spec.sizes = {4};
    spec.methods = {"exact", "ga", "ga-woc", "greedy"};
    spec.model = DominationModel::Line;
    const auto rows = run_benchmark(spec);
    REQUIRE(rows.size() == 4);
    for (const BenchRow& r : rows) {
        CHECK(r.status == "ok");
    }
    // line coverage of the uniform board needs a full row or column set: 4 dominators
    CHECK(rows[0].dominator_count == 4);          // exact
    CHECK(rows[1].best_fitness == 16);            // ga: permutations line-cover everything
    CHECK(rows[1].best_penalty == 0);
}

TEST_CASE("the emitted CSV round-trips exactly") {
    BenchSpec spec = tiny_spec();
    spec.methods = {"greedy", "exact", "ga", "ga-woc"};
    spec.sizes = {3};
    const auto rows = run_benchmark(spec);
    CHECK(parse_csv(rows_to_csv(rows)) == rows);
}

TEST_CASE("summaries aggregate and rank head-to-head results") {
    BenchRow row;
    row.method = "ga";
    row.n = 5;
    row.seed = 1;
    row.best_fitness = 17;
    row.wall_ms = 4;

    const Summary single = summarize({row});
    REQUIRE(single.per_method.size() == 1);
    CHECK(single.per_method[0].mean_fitness == doctest::Approx(17.0));
    CHECK(single.per_method[0].std_fitness == doctest::Approx(0.0));
    CHECK(single.per_method[0].min_fitness == 17);
    CHECK(single.per_method[0].max_fitness == 17);

    // ga-woc strictly better on every seed: win rate 1.0
    std::vector<BenchRow> rows;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        BenchRow ga_row = row;
        ga_row.seed = seed;
        BenchRow woc_row = row;
        woc_row.method = "ga-woc";
        woc_row.seed = seed;
        woc_row.best_fitness = 20;
        rows.push_back(ga_row);
        rows.push_back(woc_row);
    }
    const Summary wins = summarize(rows);
    REQUIRE(wins.woc_vs_ga.size() == 1);
    CHECK(wins.woc_vs_ga[0].pairs == 3);
    CHECK(wins.woc_vs_ga[0].win_rate == doctest::Approx(1.0));

    // identical fitness on every seed: win rate 0.5
    for (BenchRow& r : rows) {
        r.best_fitness = 17;
    }
    CHECK(summarize(rows).woc_vs_ga[0].win_rate == doctest::Approx(0.5));

    CHECK_THROWS_AS(summarize({}), ValidationError);
}
