#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ssp/enumerators.hpp"

namespace ssp {

/// The four experiment families. The first two draw one random sum per
/// n (small range [1, 2n] and large range [midSum-n, midSum]); CA-FSV
/// pins the pair S = 2n and S = midSum-n; CA-SLN sweeps every sum, so
/// each job covers 2^n subsets.
enum class Family { ca_ssr, ca_lsr, ca_fsv, ca_sln };

std::string to_string(Family f);
std::optional<Family> parse_family(const std::string& name);

enum class ReportOutcome { complete, capped, error };

std::string to_string(ReportOutcome o);

/// One measured enumeration job. `sum` is empty for whole-range CA-SLN
/// jobs; `ratio` is empty when nothing was emitted.
struct ExplorationReport {
    Family family = Family::ca_fsv;
    int n = 0;
    std::optional<long long> sum;
    Algorithm algorithm = Algorithm::naive;
    std::uint64_t emitted = 0;
    std::uint64_t explored = 0;
    std::optional<double> ratio;
    double wall_time_s = 0.0;
    ReportOutcome outcome = ReportOutcome::complete;
    std::string diagnostic;
};

/// Declarative job matrix. Random draws come from the recorded seed, so
/// a spec reproduces its reports bit for bit (timings aside).
struct ExperimentSpec {
    Family family = Family::ca_fsv;
    int n_min = 3;
    int n_max = 12;
    std::vector<Algorithm> algorithms;
    std::uint64_t seed = 1;
    double budget_s = 0.0;  // 0 disables the per-job budget
};

/// Runs one algorithm against one target under a wall-clock budget,
/// collecting the exploration counters. With no sum, the whole range is
/// enumerated (level generators run once; the others sweep every sum).
ExplorationReport run_instrumented(Algorithm a, int n, std::optional<long long> sum,
                                   double budget_s, Family family = Family::ca_fsv);

/// One report per job, in spec order regardless of worker completion
/// order. Per-job failures become error rows; the run continues.
std::vector<ExplorationReport> run_experiment(const ExperimentSpec& spec,
                                              unsigned workers = 0);

/// CSV schema: family,n,S,algorithm,emitted,explored,ratio,wall_time_s,outcome
void write_reports_csv(std::ostream& out, const std::vector<ExplorationReport>& reports);

/// JSON mirror of the CSV schema.
void write_reports_json(std::ostream& out, const std::vector<ExplorationReport>& reports);

/// Flat key = value spec file; `preset` selects a family's defaults and
/// explicit keys override them. '#' starts a comment.
ExperimentSpec parse_spec_file(const std::string& path);
ExperimentSpec parse_spec_text(const std::string& text);

/// Plot-ready growth series: per n, the exact count and its log10 at
/// S = 2n and at S = midSum(n) - n.
/// CSV schema: rule,n,S,count,log10_count
void write_growth_series_csv(std::ostream& out, int n_min, int n_max);

}  // namespace ssp
