#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "ssp/distributions.hpp"
#include "ssp/metrics.hpp"

using namespace ssp;

TEST_CASE("instrumented single runs") {
    const ExplorationReport naive = run_instrumented(Algorithm::naive, 12, 24, 0.0);
    CHECK(naive.emitted == 67);
    CHECK(naive.outcome == ReportOutcome::complete);
    REQUIRE(naive.ratio.has_value());
    CHECK(*naive.ratio >= 1.0);
    CHECK(naive.wall_time_s >= 0.0);

    const ExplorationReport ldg_projected = run_instrumented(Algorithm::ldg, 12, 24, 0.0);
    CHECK(ldg_projected.emitted == 67);
    CHECK(ldg_projected.outcome == ReportOutcome::complete);

    const ExplorationReport empty = run_instrumented(Algorithm::naive, 3, 99, 0.0);
    CHECK(empty.emitted == 0);
    CHECK(empty.outcome == ReportOutcome::complete);
    CHECK_FALSE(empty.ratio.has_value());

    CHECK(run_instrumented(Algorithm::naive, 20, 40, 0.0).emitted == 806);
    CHECK(run_instrumented(Algorithm::ldg, 20, 85, 0.0).emitted == 11812);
}

TEST_CASE("whole-range jobs cover the power set") {
    for (Algorithm a : {Algorithm::sdg, Algorithm::ldg, Algorithm::naive}) {
        const ExplorationReport report = run_instrumented(a, 10, std::nullopt, 0.0, Family::ca_sln);
        CHECK(report.outcome == ReportOutcome::complete);
        CHECK(report.emitted == 1024);
    }
}

TEST_CASE("experiment runs are deterministic and ordered") {
    ExperimentSpec spec;
    spec.family = Family::ca_ssr;
    spec.n_min = 3;
    spec.n_max = 10;
    spec.algorithms = {Algorithm::naive, Algorithm::sdg};
    spec.seed = 42;

    const auto first = run_experiment(spec, 4);
    const auto second = run_experiment(spec, 2);
    REQUIRE(first.size() == second.size());
    REQUIRE(first.size() == 16);  // one S draw per n, two algorithms

    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].n == second[i].n);
        CHECK(first[i].sum == second[i].sum);
        CHECK(first[i].algorithm == second[i].algorithm);
        CHECK(first[i].emitted == second[i].emitted);
        CHECK(first[i].explored == second[i].explored);
        // wall_time_s is excluded: it is the one nondeterministic field
        REQUIRE(first[i].sum.has_value());
        CHECK(*first[i].sum >= 1);
        CHECK(*first[i].sum <= 2 * first[i].n);
    }

    ExperimentSpec reseeded = spec;
    reseeded.seed = 43;
    const auto third = run_experiment(reseeded, 4);
    bool any_differs = false;
    for (std::size_t i = 0; i < first.size(); ++i) {
        any_differs |= first[i].sum != third[i].sum;
    }
    CHECK(any_differs);
}

TEST_CASE("ca-sln jobs report one row per (n, algorithm)") {
    ExperimentSpec spec;
    spec.family = Family::ca_sln;
    spec.n_min = 2;
    spec.n_max = 12;
    spec.algorithms = {Algorithm::sdg, Algorithm::ldg, Algorithm::naive};
    const auto reports = run_experiment(spec);
    REQUIRE(reports.size() == 33);
    for (const ExplorationReport& r : reports) {
        CHECK_FALSE(r.sum.has_value());
        CHECK(r.outcome == ReportOutcome::complete);
        CHECK(r.emitted == (std::uint64_t{1} << r.n));
    }
}

TEST_CASE("ca-fsv pins both sums") {
    ExperimentSpec spec;
    spec.family = Family::ca_fsv;
    spec.n_min = 15;
    spec.n_max = 15;
    spec.algorithms = {Algorithm::naive, Algorithm::sdg, Algorithm::ldg};
    const auto reports = run_experiment(spec);
    REQUIRE(reports.size() == 6);
    for (const ExplorationReport& r : reports) {
        REQUIRE(r.sum.has_value());
        CHECK((*r.sum == 30 || *r.sum == 45));
        CHECK(r.outcome == ReportOutcome::complete);
        CHECK(r.emitted == (*r.sum == 30 ? 186 : 521));
    }
}

TEST_CASE("empty algorithm list yields an empty report sequence") {
    ExperimentSpec spec;
    spec.family = Family::ca_fsv;
    spec.algorithms = {};
    CHECK(run_experiment(spec).empty());
}

TEST_CASE("report serialization") {
    ExperimentSpec spec;
    spec.family = Family::ca_fsv;
    spec.n_min = 12;
    spec.n_max = 12;
    spec.algorithms = {Algorithm::naive};
    const auto reports = run_experiment(spec);

    std::ostringstream csv;
    write_reports_csv(csv, reports);
    const std::string text = csv.str();
    CHECK(text.rfind("family,n,S,algorithm,emitted,explored,ratio,wall_time_s,outcome\n", 0) == 0);
    CHECK(text.find("ca-fsv,12,24,naive,67,") != std::string::npos);

    std::ostringstream json_text;
    write_reports_json(json_text, reports);
    const nlohmann::json parsed = nlohmann::json::parse(json_text.str());
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == reports.size());
    CHECK(parsed[0]["family"] == "ca-fsv");
    CHECK(parsed[0]["emitted"].get<std::uint64_t>() == reports[0].emitted);

    // CSV and JSON carry the same rows.
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(parsed[i]["n"].get<int>() == reports[i].n);
        CHECK(parsed[i]["explored"].get<std::uint64_t>() == reports[i].explored);
    }
}

TEST_CASE("spec files parse with presets and overrides") {
    const ExperimentSpec preset = parse_spec_text("preset = ca-sln\n");
    CHECK(preset.family == Family::ca_sln);
    CHECK_FALSE(preset.algorithms.empty());

    const ExperimentSpec spec = parse_spec_text(
        "# comparative run\n"
        "preset = ca-fsv\n"
        "n_min = 12\n"
        "n_max = 17\n"
        "algorithms = naive, ldg\n"
        "seed = 9\n"
        "budget_s = 2.5\n");
    CHECK(spec.family == Family::ca_fsv);
    CHECK(spec.n_min == 12);
    CHECK(spec.n_max == 17);
    CHECK(spec.algorithms == std::vector<Algorithm>{Algorithm::naive, Algorithm::ldg});
    CHECK(spec.seed == 9);
    CHECK(spec.budget_s == doctest::Approx(2.5));

    CHECK(parse_spec_text("family = ca-ssr\nalgorithms = all\n").algorithms.size() == 8);
    CHECK(parse_spec_text("").algorithms.empty());  // empty spec, empty job matrix
    CHECK(parse_spec_text("# only comments\n").algorithms.empty());

    CHECK_THROWS_AS(parse_spec_text("n_min = 3\n"), ValidationError);       // no family
    CHECK_THROWS_AS(parse_spec_text("preset = ca-9\n"), ValidationError);   // bad family
    CHECK_THROWS_AS(parse_spec_text("family = ca-ssr\nwhat\n"), ValidationError);
    CHECK_THROWS_AS(parse_spec_text("family = ca-ssr\nalgorithms = qq\n"), ValidationError);
}

TEST_CASE("growth series") {
    std::ostringstream out;
    write_growth_series_csv(out, 1, 20);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "rule,n,S,count,log10_count");
    bool saw_small = false, saw_large = false;
    while (std::getline(in, line)) {
        if (line.rfind("2n,10,20,31,", 0) == 0) saw_small = true;
        if (line.rfind("midSum-n,20,85,11812,", 0) == 0) saw_large = true;
    }
    CHECK(saw_small);
    CHECK(saw_large);
}

TEST_CASE("a stalled or capped job becomes a non-complete row, not a crash") {
    const ExplorationReport capped =
        run_instrumented(Algorithm::naive, 22, 44, 1e-9);
    CHECK(capped.outcome == ReportOutcome::capped);

    const ExplorationReport error = run_instrumented(Algorithm::naive, 99, 5, 0.0);
    CHECK(error.outcome == ReportOutcome::error);
    CHECK_FALSE(error.diagnostic.empty());
}

TEST_CASE("capped bucket partials keep the ratio floor") {
    // Large enough that the first round cannot finish in the budget.
    const ExplorationReport report = run_instrumented(Algorithm::bucket, 20, 85, 0.05);
    if (report.outcome == ReportOutcome::capped && report.emitted > 0) {
        REQUIRE(report.ratio.has_value());
        CHECK(*report.ratio >= 1.0);
    }
}

TEST_CASE("complete reports emit exactly the distribution count") {
    ExperimentSpec spec;
    spec.family = Family::ca_lsr;
    spec.n_min = 5;
    spec.n_max = 12;
    spec.algorithms = all_algorithms();
    spec.seed = 3;
    for (const ExplorationReport& r : run_experiment(spec)) {
        REQUIRE(r.outcome == ReportOutcome::complete);
        REQUIRE(r.sum.has_value());
        CHECK(*r.sum >= mid_sum(r.n) - r.n);  // the CA-LSR draw range
        CHECK(*r.sum <= mid_sum(r.n));
        CHECK(BigNat(r.emitted) == sd_count(r.n, *r.sum));
    }
}
