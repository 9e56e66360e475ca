#include "ssp/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ssp/distributions.hpp"

namespace ssp {

std::string to_string(Family f) {
    switch (f) {
        case Family::ca_ssr: return "ca-ssr";
        case Family::ca_lsr: return "ca-lsr";
        case Family::ca_fsv: return "ca-fsv";
        case Family::ca_sln: return "ca-sln";
    }
    return "unknown";
}

std::optional<Family> parse_family(const std::string& name) {
    std::string lowered = name;
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (Family f : {Family::ca_ssr, Family::ca_lsr, Family::ca_fsv, Family::ca_sln}) {
        if (to_string(f) == lowered) return f;
    }
    return std::nullopt;
}

std::string to_string(ReportOutcome o) {
    switch (o) {
        case ReportOutcome::complete: return "complete";
        case ReportOutcome::capped: return "capped";
        case ReportOutcome::error: return "error";
    }
    return "unknown";
}

namespace {

ReportOutcome from_run_outcome(RunOutcome o) {
    switch (o) {
        case RunOutcome::complete: return ReportOutcome::complete;
        case RunOutcome::capped: return ReportOutcome::capped;
        case RunOutcome::stalled: return ReportOutcome::error;
    }
    return ReportOutcome::error;
}

RunLimits limits_for(double budget_s) {
    return budget_s > 0 ? RunLimits::wall_clock(budget_s) : RunLimits::none();
}

/// Whole-range run: the level generators produce every sum in one pass;
/// the per-sum algorithms sweep S from 0 to maxSum.
void run_whole_range(Algorithm a, int n, double budget_s, ExplorationReport& report) {
    const RunLimits limits = limits_for(budget_s);
    if (a == Algorithm::sdg) {
        SumIndexedSolutions all = sdg(n, limits);
        for (const SolutionSet& set : all.by_sum) report.emitted += set.size();
        report.explored = all.explored;
        report.outcome = from_run_outcome(all.outcome);
        return;
    }
    if (a == Algorithm::ldg) {
        LengthSumIndexedSolutions all = ldg(n, limits);
        for (const auto& row : all.by_sum_length) {
            for (const SolutionSet& set : row) report.emitted += set.size();
        }
        report.explored = all.explored;
        report.outcome = from_run_outcome(all.outcome);
        return;
    }
    for (long long s = 0; s <= max_sum(n); ++s) {
        EnumerationResult run = run_algorithm(a, n, s, limits);
        report.emitted += run.emitted();
        report.explored += run.explored;
        if (!run.complete()) {
            report.outcome = from_run_outcome(run.outcome);
            report.diagnostic = run.diagnostic;
            return;
        }
    }
}

}  // namespace

ExplorationReport run_instrumented(Algorithm a, int n, std::optional<long long> sum,
                                   double budget_s, Family family) {
    ExplorationReport report;
    report.family = family;
    report.n = n;
    report.sum = sum;
    report.algorithm = a;

    const auto started = std::chrono::steady_clock::now();
    try {
        if (sum) {
            EnumerationResult run = run_algorithm(a, n, *sum, limits_for(budget_s));
            report.emitted = run.emitted();
            report.explored = run.explored;
            report.outcome = from_run_outcome(run.outcome);
            report.diagnostic = run.diagnostic;
        } else {
            run_whole_range(a, n, budget_s, report);
        }
    } catch (const std::exception& err) {
        report.outcome = ReportOutcome::error;
        report.diagnostic = err.what();
    }
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (report.emitted > 0) {
        report.ratio = static_cast<double>(report.explored) / static_cast<double>(report.emitted);
    }
    return report;
}

std::vector<ExplorationReport> run_experiment(const ExperimentSpec& spec, unsigned workers) {
    struct Job {
        int n;
        std::optional<long long> sum;
        Algorithm algorithm;
    };

    // Jobs are generated up front so that the seeded draws are fixed
    // before any parallel execution starts.
    std::mt19937_64 rng(spec.seed);
    std::vector<Job> jobs;
    for (int n = std::max(1, spec.n_min); n <= spec.n_max; ++n) {
        std::vector<long long> sums;
        switch (spec.family) {
            case Family::ca_ssr: {
                std::uniform_int_distribution<long long> draw(1, std::min<long long>(2 * n, max_sum(n)));
                sums.push_back(draw(rng));
                break;
            }
            case Family::ca_lsr: {
                std::uniform_int_distribution<long long> draw(std::max<long long>(0, mid_sum(n) - n),
                                                              mid_sum(n));
                sums.push_back(draw(rng));
                break;
            }
            case Family::ca_fsv: {
                if (2LL * n <= max_sum(n)) sums.push_back(2LL * n);
                if (mid_sum(n) - n >= 0) sums.push_back(mid_sum(n) - n);
                break;
            }
            case Family::ca_sln:
                break;
        }
        for (Algorithm a : spec.algorithms) {
            if (spec.family == Family::ca_sln) {
                jobs.push_back({n, std::nullopt, a});
            } else {
                for (long long s : sums) jobs.push_back({n, s, a});
            }
        }
    }

    std::vector<ExplorationReport> reports(jobs.size());
    if (jobs.empty()) return reports;

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = std::min<unsigned>(workers, jobs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
            const Job& job = jobs[i];
            reports[i] =
                run_instrumented(job.algorithm, job.n, job.sum, spec.budget_s, spec.family);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return reports;
}

namespace {

std::string ratio_text(const ExplorationReport& r) {
    if (!r.ratio) return "";
    std::ostringstream out;
    out << *r.ratio;
    return out.str();
}

}  // namespace

void write_reports_csv(std::ostream& out, const std::vector<ExplorationReport>& reports) {
    out << "family,n,S,algorithm,emitted,explored,ratio,wall_time_s,outcome\n";
    for (const ExplorationReport& r : reports) {
        out << to_string(r.family) << ',' << r.n << ',';
        if (r.sum) out << *r.sum;
        out << ',' << to_string(r.algorithm) << ',' << r.emitted << ',' << r.explored << ','
            << ratio_text(r) << ',' << r.wall_time_s << ',' << to_string(r.outcome) << '\n';
    }
}

void write_reports_json(std::ostream& out, const std::vector<ExplorationReport>& reports) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ExplorationReport& r : reports) {
        nlohmann::json row{
            {"family", to_string(r.family)},     {"n", r.n},
            {"algorithm", to_string(r.algorithm)}, {"emitted", r.emitted},
            {"explored", r.explored},            {"wall_time_s", r.wall_time_s},
            {"outcome", to_string(r.outcome)},
        };
        row["S"] = r.sum ? nlohmann::json(*r.sum) : nlohmann::json();
        row["ratio"] = r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json();
        if (!r.diagnostic.empty()) row["diagnostic"] = r.diagnostic;
        rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
}

namespace {

void strip(std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    const auto end = text.find_last_not_of(" \t\r\n");
    text = begin == std::string::npos ? "" : text.substr(begin, end - begin + 1);
}

std::vector<Algorithm> parse_algorithm_list(const std::string& value) {
    std::vector<Algorithm> out;
    if (value == "all") return all_algorithms();
    std::istringstream stream(value);
    std::string token;
    while (std::getline(stream, token, ',')) {
        strip(token);
        if (token.empty()) continue;
        const auto a = parse_algorithm(token);
        if (!a) throw ValidationError("unknown algorithm in spec: '" + token + "'");
        out.push_back(*a);
    }
    return out;
}

ExperimentSpec preset_defaults(Family family) {
    ExperimentSpec spec;
    spec.family = family;
    spec.seed = 1;
    spec.budget_s = 10.0;
    switch (family) {
        case Family::ca_ssr:
        case Family::ca_lsr:
            spec.n_min = 3;
            spec.n_max = 14;
            spec.algorithms = {Algorithm::bucket, Algorithm::maxfd, Algorithm::minfd,
                               Algorithm::lsmax, Algorithm::lsmin};
            break;
        case Family::ca_fsv:
            spec.n_min = 12;
            spec.n_max = 20;
            spec.algorithms = {Algorithm::maxfd, Algorithm::minfd, Algorithm::bucket,
                               Algorithm::lsmax, Algorithm::lsmin, Algorithm::ldg,
                               Algorithm::sdg};
            break;
        case Family::ca_sln:
            spec.n_min = 2;
            spec.n_max = 16;
            spec.algorithms = {Algorithm::sdg, Algorithm::ldg, Algorithm::naive};
            break;
    }
    return spec;
}

}  // namespace

ExperimentSpec parse_spec_text(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    ExperimentSpec spec;
    bool have_family = false;
    bool have_algorithms = false;

    // First pass finds the preset (if any) so that explicit keys win
    // regardless of their order in the file.
    std::vector<std::pair<std::string, std::string>> pairs;
    while (std::getline(stream, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("malformed spec line (expected key = value): '" + line + "'");
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        strip(key);
        strip(value);
        pairs.emplace_back(std::move(key), std::move(value));
    }

    for (const auto& [key, value] : pairs) {
        if (key == "preset" || key == "family") {
            const auto f = parse_family(value);
            if (!f) throw ValidationError("unknown experiment family: '" + value + "'");
            const bool is_preset = key == "preset";
            ExperimentSpec base = preset_defaults(*f);
            if (is_preset) {
                spec = base;
                have_algorithms = true;
            } else {
                spec.family = *f;
            }
            have_family = true;
        }
    }
    for (const auto& [key, value] : pairs) {
        if (key == "preset" || key == "family") continue;
        if (key == "n_min") {
            spec.n_min = std::stoi(value);
        } else if (key == "n_max") {
            spec.n_max = std::stoi(value);
        } else if (key == "algorithms") {
            spec.algorithms = parse_algorithm_list(value);
            have_algorithms = true;
        } else if (key == "seed") {
            spec.seed = std::stoull(value);
        } else if (key == "budget_s") {
            spec.budget_s = std::stod(value);
        } else {
            throw ValidationError("unknown spec key: '" + key + "'");
        }
    }

    // A spec with no lines at all is a valid empty job matrix.
    if (!have_family && !pairs.empty()) {
        throw ValidationError("spec needs a 'preset' or 'family' line");
    }
    if (!have_family || !have_algorithms) spec.algorithms = {};
    return spec;
}

ExperimentSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open spec file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec_text(buffer.str());
}

void write_growth_series_csv(std::ostream& out, int n_min, int n_max) {
    require_universe(n_min);
    if (n_max < n_min) throw ValidationError("series range is empty");
    out << "rule,n,S,count,log10_count\n";

    // One rolling row serves every universe size on the way up.
    std::vector<BigNat> counts(1, BigNat(1));
    for (int n = 1; n <= n_max; ++n) {
        counts.resize(max_sum(n) + 1);
        for (long long s = max_sum(n); s >= n; --s) counts[s] += counts[s - n];
        if (n < n_min) continue;

        const long long small = 2LL * n;
        if (small <= max_sum(n)) {
            out << "2n," << n << ',' << small << ',' << counts[small].str() << ','
                << log10_bignat(counts[small]) << '\n';
        }
        const long long large = mid_sum(n) - n;
        if (large >= 0) {
            out << "midSum-n," << n << ',' << large << ',' << counts[large].str() << ','
                << log10_bignat(counts[large]) << '\n';
        }
    }
}

}  // namespace ssp
