// ssp: subset-sum enumeration toolkit over {1..n}.
//
// Subcommands: count, enumerate, verify, dump, bench.
// Exit codes: 0 success, 1 verification/enumeration failure, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssp/distributions.hpp"
#include "ssp/enumerators.hpp"
#include "ssp/metrics.hpp"
#include "ssp/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CountArgs {
    int n = 0;
    std::optional<long long> sum;
    std::optional<int> length;
    std::optional<int> element;
    std::string format = "text";
};

int cmd_count(const CountArgs& args) {
    using nlohmann::json;
    if (args.length && args.element) {
        throw ssp::ValidationError("-l and -e cannot be combined");
    }
    if (!args.sum && (args.length || args.element)) {
        throw ssp::ValidationError("-l/-e require -S");
    }

    if (!args.sum) {
        const ssp::SumDistribution sd = ssp::SumDistribution::build(args.n);
        if (args.format == "json") {
            json row = json::object();
            for (long long s = 0; s <= sd.max_sum(); ++s) row[std::to_string(s)] = sd.count(s).str();
            std::cout << json{{"n", args.n}, {"counts", row}}.dump() << '\n';
        } else if (args.format == "csv") {
            std::cout << "n,S,count\n";
            for (long long s = 0; s <= sd.max_sum(); ++s) {
                std::cout << args.n << ',' << s << ',' << sd.count(s).str() << '\n';
            }
        } else {
            for (long long s = 0; s <= sd.max_sum(); ++s) {
                if (s != 0) std::cout << ' ';
                std::cout << s << ':' << sd.count(s).str();
            }
            std::cout << '\n';
        }
        return kExitOk;
    }

    ssp::require_target(args.n, *args.sum);
    ssp::BigNat value;
    if (args.length) {
        if (*args.length < 0 || *args.length > args.n) {
            throw ssp::ValidationError("length outside [0, n]");
        }
        value = ssp::LengthSumDistribution::build(args.n).count(*args.sum, *args.length);
    } else if (args.element) {
        if (*args.element < 1 || *args.element > args.n) {
            throw ssp::ValidationError("element outside [1, n]");
        }
        value = ssp::ElementDistribution::build(args.n).count(*args.sum, *args.element);
    } else {
        value = ssp::sd_count(args.n, *args.sum);
    }

    if (args.format == "json") {
        json row{{"n", args.n}, {"S", *args.sum}, {"count", value.str()}};
        if (args.length) row["l"] = *args.length;
        if (args.element) row["e"] = *args.element;
        std::cout << row.dump() << '\n';
    } else if (args.format == "csv") {
        if (args.length) {
            std::cout << "n,S,l,count\n"
                      << args.n << ',' << *args.sum << ',' << *args.length << ',' << value.str()
                      << '\n';
        } else if (args.element) {
            std::cout << "n,S,e,count\n"
                      << args.n << ',' << *args.sum << ',' << *args.element << ',' << value.str()
                      << '\n';
        } else {
            std::cout << "n,S,count\n"
                      << args.n << ',' << *args.sum << ',' << value.str() << '\n';
        }
    } else {
        std::cout << value.str() << '\n';
    }
    return kExitOk;
}

struct EnumerateArgs {
    std::string algorithm;
    int n = 0;
    long long sum = 0;
    std::string format = "text";
    double budget_s = 0.0;
};

int cmd_enumerate(const EnumerateArgs& args) {
    using nlohmann::json;
    const auto algorithm = ssp::parse_algorithm(args.algorithm);
    if (!algorithm) {
        throw ssp::ValidationError("unknown algorithm '" + args.algorithm +
                                   "' (expected naive|sdg|ldg|bucket|maxfd|minfd|lsmax|lsmin)");
    }
    const ssp::RunLimits limits =
        args.budget_s > 0 ? ssp::RunLimits::wall_clock(args.budget_s) : ssp::RunLimits::none();

    ssp::EnumerationResult result;
    if (args.format == "json") {
        result = ssp::run_algorithm(*algorithm, args.n, args.sum, limits);
        json subsets = json::array();
        for (const ssp::ElementSubset& s : result.solutions.subsets()) {
            subsets.push_back(s.elements());
        }
        json doc{{"n", args.n},
                 {"S", args.sum},
                 {"algorithm", ssp::to_string(*algorithm)},
                 {"subsets", std::move(subsets)},
                 {"emitted", result.emitted()},
                 {"explored", result.explored},
                 {"outcome", ssp::to_string(result.outcome)}};
        std::cout << doc.dump() << '\n';
    } else {
        const bool csv = args.format == "csv";
        if (csv) std::cout << "subset\n";
        result = ssp::run_algorithm(*algorithm, args.n, args.sum, limits, [&](ssp::Mask m) {
            if (csv) {
                std::cout << '"' << ssp::mask_to_string(m) << "\"\n";
            } else {
                std::cout << ssp::mask_to_string(m) << '\n';
            }
        });
        std::cout << "# emitted=" << result.emitted() << " explored=" << result.explored
                  << " outcome=" << ssp::to_string(result.outcome) << '\n';
    }

    if (!result.complete()) {
        std::cerr << "enumeration incomplete (" << ssp::to_string(result.outcome)
                  << "): " << result.diagnostic << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

struct VerifyArgs {
    int n_max = 0;
    bool force = false;
};

int cmd_verify(const VerifyArgs& args) {
    if (args.n_max < 1 || args.n_max > ssp::kOracleScaleGuard) {
        throw ssp::ValidationError("verify supports n between 1 and 25");
    }
    if (args.n_max >= ssp::kOracleScaleGuard && !args.force) {
        throw ssp::ScaleError("verifying through n = " + std::to_string(args.n_max) +
                              " sweeps 2^n masks per sum; pass --force to run it anyway");
    }

    struct Mismatch {
        int n;
        long long s;
        ssp::Algorithm algorithm;
        std::vector<ssp::Mask> missing, extra;
    };
    std::optional<Mismatch> first_mismatch;

    std::cout << "  n";
    for (ssp::Algorithm a : ssp::all_algorithms()) std::cout << ' ' << ssp::to_string(a);
    std::cout << '\n';

    bool all_pass = true;
    for (int n = 1; n <= args.n_max; ++n) {
        const ssp::OracleResult truth = ssp::oracle_all(n);
        std::vector<bool> pass(ssp::all_algorithms().size(), true);

        const ssp::SumIndexedSolutions by_sdg = ssp::sdg(n);
        const ssp::LengthSumIndexedSolutions by_ldg = ssp::ldg(n);

        for (long long s = 0; s <= ssp::max_sum(n); ++s) {
            const std::vector<ssp::Mask> expected = truth.by_sum[s].sorted_masks();
            for (std::size_t idx = 0; idx < ssp::all_algorithms().size(); ++idx) {
                const ssp::Algorithm a = ssp::all_algorithms()[idx];
                std::vector<ssp::Mask> got;
                if (a == ssp::Algorithm::sdg) {
                    got = by_sdg.by_sum[s].sorted_masks();
                } else if (a == ssp::Algorithm::ldg) {
                    ssp::SolutionSet merged(n, s);
                    for (int l = 0; l <= n; ++l) {
                        for (ssp::Mask m : by_ldg.at(s, l).masks()) merged.add(m);
                    }
                    got = merged.sorted_masks();
                } else {
                    got = ssp::run_algorithm(a, n, s).solutions.sorted_masks();
                }
                if (got == expected) continue;
                pass[idx] = false;
                all_pass = false;
                if (!first_mismatch) {
                    Mismatch mm{n, s, a, {}, {}};
                    std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(),
                                        std::back_inserter(mm.missing));
                    std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(),
                                        std::back_inserter(mm.extra));
                    first_mismatch = std::move(mm);
                }
            }
        }

        std::cout << std::setw(3) << n;
        for (std::size_t idx = 0; idx < pass.size(); ++idx) {
            const auto name = ssp::to_string(ssp::all_algorithms()[idx]);
            std::cout << ' ' << std::setw(static_cast<int>(name.size()))
                      << (pass[idx] ? "PASS" : "FAIL");
        }
        std::cout << '\n';
    }

    if (first_mismatch) {
        std::cout << "first mismatch: n=" << first_mismatch->n << " S=" << first_mismatch->s
                  << " algorithm=" << ssp::to_string(first_mismatch->algorithm) << '\n';
        auto show = [](const char* label, const std::vector<ssp::Mask>& masks) {
            std::cout << "  " << label << ':';
            std::size_t shown = 0;
            for (ssp::Mask m : masks) {
                if (shown++ == 5) {
                    std::cout << " ...";
                    break;
                }
                std::cout << ' ' << ssp::mask_to_string(m);
            }
            std::cout << '\n';
        };
        show("missing", first_mismatch->missing);
        show("extra", first_mismatch->extra);
    }
    std::cout << (all_pass ? "ALL PASS" : "FAILED") << '\n';
    return all_pass ? kExitOk : kExitFailure;
}

struct DumpArgs {
    std::string table;
    int n = 0;
    std::string output;
};

int cmd_dump(const DumpArgs& args) {
    std::ostringstream body;
    if (args.table == "sd") {
        const ssp::SumDistribution sd = ssp::SumDistribution::build(args.n);
        body << "n,S,count\n";
        for (long long s = 0; s <= sd.max_sum(); ++s) {
            body << args.n << ',' << s << ',' << sd.count(s).str() << '\n';
        }
    } else if (args.table == "ld") {
        const ssp::LengthSumDistribution ld = ssp::LengthSumDistribution::build(args.n);
        body << "n,S,l,count\n";
        for (long long s = 0; s <= ld.max_sum(); ++s) {
            for (int l = 0; l <= args.n; ++l) {
                body << args.n << ',' << s << ',' << l << ',' << ld.count(s, l).str() << '\n';
            }
        }
    } else if (args.table == "ed") {
        const ssp::ElementDistribution ed = ssp::ElementDistribution::build(args.n);
        body << "n,S,e,count\n";
        for (long long s = 0; s <= ed.max_sum(); ++s) {
            for (int e = 1; e <= args.n; ++e) {
                body << args.n << ',' << s << ',' << e << ',' << ed.count(s, e).str() << '\n';
            }
        }
    } else {
        throw ssp::ValidationError("--table must be sd, ld or ed");
    }

    if (args.output.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(args.output);
        if (!out) throw ssp::ValidationError("cannot write " + args.output);
        out << body.str();
    }
    return kExitOk;
}

struct BenchArgs {
    std::string spec_path;
    std::string preset;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    unsigned workers = 0;
};

/// Reports land next to each other under the output directory; each file
/// is written to a temporary name and renamed into place once complete.
void write_atomically(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw ssp::ValidationError("cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

int cmd_bench(const BenchArgs& args) {
    ssp::ExperimentSpec spec;
    if (!args.spec_path.empty()) {
        spec = ssp::parse_spec_file(args.spec_path);
    } else if (!args.preset.empty()) {
        spec = ssp::parse_spec_text("preset = " + args.preset + "\n");
    } else {
        throw ssp::ValidationError("bench needs --spec FILE or --preset NAME");
    }
    if (args.seed) spec.seed = *args.seed;

    std::filesystem::path out_dir = args.out_dir;
    if (out_dir.empty()) {
        const char* env = std::getenv("SSP_OUTPUT_DIR");
        out_dir = env != nullptr ? env : ".";
    }
    std::filesystem::create_directories(out_dir);

    const std::vector<ssp::ExplorationReport> reports = ssp::run_experiment(spec, args.workers);

    std::ostringstream csv;
    ssp::write_reports_csv(csv, reports);
    write_atomically(out_dir / "reports.csv", csv.str());

    std::ostringstream jsonText;
    ssp::write_reports_json(jsonText, reports);
    write_atomically(out_dir / "reports.json", jsonText.str());

    std::ostringstream series;
    ssp::write_growth_series_csv(series, std::max(1, spec.n_min), spec.n_max);
    write_atomically(out_dir / "growth_series.csv", series.str());

    std::cout << "wrote " << (out_dir / "reports.csv").string() << " ("
              << reports.size() << " rows)\n"
              << "wrote " << (out_dir / "reports.json").string() << '\n'
              << "wrote " << (out_dir / "growth_series.csv").string() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subset-sum enumeration toolkit over {1..n}"};
    app.require_subcommand(1);

    CountArgs count_args;
    CLI::App* count = app.add_subcommand("count", "print SD/LD/ED counts");
    count->add_option("-n", count_args.n, "universe size")->required();
    count->add_option("-S", count_args.sum, "target sum");
    count->add_option("-l", count_args.length, "subset length (with -S)");
    count->add_option("-e", count_args.element, "element (with -S)");
    count->add_option("-f,--format", count_args.format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    EnumerateArgs enum_args;
    CLI::App* enumerate = app.add_subcommand("enumerate", "stream all subsets with the target sum");
    enumerate->add_option("-a,--algorithm", enum_args.algorithm,
                          "naive|sdg|ldg|bucket|maxfd|minfd|lsmax|lsmin")
        ->required();
    enumerate->add_option("-n", enum_args.n, "universe size")->required();
    enumerate->add_option("-S", enum_args.sum, "target sum")->required();
    enumerate->add_option("-f,--format", enum_args.format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    enumerate->add_option("--budget", enum_args.budget_s, "wall-clock budget in seconds");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check every algorithm against the oracle");
    verify->add_option("-n", verify_args.n_max, "largest universe size")->required();
    verify->add_flag("--force", verify_args.force, "allow the full 2^25 scale");

    DumpArgs dump_args;
    CLI::App* dump = app.add_subcommand("dump", "emit a distribution table as CSV");
    dump->add_option("--table", dump_args.table, "sd|ld|ed")->required();
    dump->add_option("-n", dump_args.n, "universe size")->required();
    dump->add_option("-o,--output", dump_args.output, "output file (default stdout)");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "run an experiment spec and write reports");
    bench->add_option("--spec", bench_args.spec_path, "spec file (key = value lines)");
    bench->add_option("--preset", bench_args.preset, "ca-ssr|ca-lsr|ca-fsv|ca-sln");
    bench->add_option("-o,--output-dir", bench_args.out_dir,
                      "report directory (default $SSP_OUTPUT_DIR or .)");
    bench->add_option("--seed", bench_args.seed, "override the spec seed");
    bench->add_option("--workers", bench_args.workers, "worker threads (default: hardware)");

    try {
        app.parse(argc, argv);
        if (count->parsed()) return cmd_count(count_args);
        if (enumerate->parsed()) return cmd_enumerate(enum_args);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (dump->parsed()) return cmd_dump(dump_args);
        if (bench->parsed()) return cmd_bench(bench_args);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const ssp::ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const ssp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
