// digitrev: benchmark and print digit-reversal permutations.
//
//   digitrev bench --algos dfp,vdro,oracle,sort --radices 2,3 --k-min 2 --k-max 18
//                  --reps-schedule default --warmup 10 --time-budget-ms 1000
//                  --out results.csv [--gnuplot plot.gp]
//   digitrev perm --algo dfp|vdro|oracle --radix 2 --k 3 --base 1
//
// Exit codes: 0 success, 1 configuration error, 2 I/O error, 3 benchmark output
// did not match the reference permutation.

#include "digitrev/bench.hpp"
#include "digitrev/errors.hpp"
#include "digitrev/permcore.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 1, kIoError = 2, kVerificationFailed = 3 };

struct BenchOptions {
    std::vector<std::string> algos{"dfp", "vdro", "sort"};
    std::vector<std::uint64_t> radices{2, 3};
    unsigned k_min = 2;
    unsigned k_max = 18;
    std::string reps_schedule = "default";
    unsigned warmup = 10;
    std::string out = "results.csv";
    std::string gnuplot;
    std::uint64_t memory_ceiling_mib = 64;
    std::int64_t time_budget_ms = 1000;
    std::uint64_t seed = 0x5eed;
    bool quiet = false;
};

struct PermOptions {
    std::string algo = "dfp";
    std::uint64_t radix = 2;
    unsigned k = 3;
    digitrev::Index base = 1;
};

int run_bench(const BenchOptions& opt)
{
    using namespace digitrev;

    BenchConfig cfg;
    cfg.algorithms.clear();
    for (const std::string& a : opt.algos) {
        cfg.algorithms.push_back(parse_algorithm(a));
    }
    cfg.radices = opt.radices;
    cfg.k_min = opt.k_min;
    cfg.k_max = opt.k_max;
    cfg.schedule = RepetitionSchedule::parse(opt.reps_schedule);
    cfg.warmup_rounds = opt.warmup;
    cfg.memory_ceiling_bytes = opt.memory_ceiling_mib << 20;
    cfg.time_budget_per_run = std::chrono::milliseconds{opt.time_budget_ms};
    cfg.seed = opt.seed;

    const BenchReport report = run_benchmark(cfg, opt.quiet ? nullptr : &std::cerr);

    for (const SkippedRun& s : report.skipped) {
        std::cout << "skipped " << to_string(s.algorithm) << " r=" << s.radix << " k=" << s.exponent_k << ": "
                  << s.reason << '\n';
    }
    for (const CappedRun& c : report.capped) {
        std::cout << "capped " << to_string(c.algorithm) << " r=" << c.radix << " k=" << c.exponent_k << ": "
                  << c.performed_repetitions << " of " << c.scheduled_repetitions << " repetitions\n";
    }
    for (const SpotCheck& c : report.spot_checks) {
        std::cout << "check " << to_string(c.algorithm) << " r=" << c.radix << " k=" << c.exponent_k << ": "
                  << (c.matched ? "ok" : "MISMATCH") << '\n';
    }
    if (!report.verified()) {
        std::cerr << "error: benchmark output does not match the reference permutation; no timings written\n";
        return kVerificationFailed;
    }

    emit_csv(report.records, opt.out);
    std::cout << "wrote " << report.records.size() << " records to " << opt.out << '\n';
    if (!opt.gnuplot.empty()) {
        emit_gnuplot_script(report.records, opt.out, opt.gnuplot);
        std::cout << "wrote gnuplot script " << opt.gnuplot << '\n';
    }

    std::map<std::pair<Algorithm, std::uint64_t>, std::vector<BenchRecord>> series;
    for (const BenchRecord& r : report.records) {
        series[{r.algorithm, r.radix}].push_back(r);
    }
    for (const auto& [key, recs] : series) {
        if (const auto bp = estimate_breakpoint(recs)) {
            std::cout << "regime change " << to_string(key.first) << " r=" << key.second << ": k=" << bp->k_break
                      << " (log2 slope " << bp->slope_low << " -> " << bp->slope_high << ")\n";
        }
    }
    for (const std::string& w : relative_ordering_warnings(report.records)) {
        std::cout << w << '\n';
    }
    return kOk;
}

int run_perm(const PermOptions& opt)
{
    using namespace digitrev;

    const Algorithm algo = parse_algorithm(opt.algo);
    if (algo != Algorithm::dfp && algo != Algorithm::vdro && algo != Algorithm::oracle) {
        throw ConfigInvalid("perm supports dfp, vdro and oracle");
    }
    if (!supports_radix(algo, opt.radix)) {
        throw ConfigInvalid(opt.algo + " requires radix 2");
    }
    const RadixPower rp = RadixPower::from_exponent(opt.radix, opt.k);
    const PermutationVector p = run_algorithm(algo, rp, opt.base);

    std::string line;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != 0) {
            line += ' ';
        }
        line += std::to_string(p[i]);
    }
    line += '\n';
    if (std::fwrite(line.data(), 1, line.size(), stdout) != line.size() || std::fflush(stdout) != 0) {
        throw IoError("cannot write to stdout");
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bit-reversal and digit-reversal permutations: benchmark and inspection tool"};
    app.require_subcommand(1);

    BenchOptions bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Time the permutation algorithms over a (radix, k) grid");
    bench_cmd->add_option("--algos", bench.algos, "dfp, vdro, mk_fperm, oracle, sort")->delimiter(',');
    bench_cmd->add_option("--radices", bench.radices, "Radices to benchmark")->delimiter(',');
    bench_cmd->add_option("--k-min", bench.k_min, "Smallest exponent");
    bench_cmd->add_option("--k-max", bench.k_max, "Largest exponent");
    bench_cmd->add_option("--reps-schedule", bench.reps_schedule, "default | custom:<k=reps,...>");
    bench_cmd->add_option("--warmup", bench.warmup, "Unmeasured rounds before each measurement");
    bench_cmd->add_option("--out", bench.out, "CSV output path");
    bench_cmd->add_option("--gnuplot", bench.gnuplot, "Also write a gnuplot script plotting the CSV");
    bench_cmd->add_option("--memory-ceiling-mib", bench.memory_ceiling_mib,
                          "Skip runs whose working set exceeds this many MiB");
    bench_cmd->add_option("--time-budget-ms", bench.time_budget_ms,
                          "Reduce repetitions so each measurement takes about this long; 0 disables");
    bench_cmd->add_option("--seed", bench.seed, "Seed for choosing the random spot check");
    bench_cmd->add_flag("--quiet", bench.quiet, "No per-run progress on stderr");

    PermOptions perm;
    CLI::App* perm_cmd = app.add_subcommand("perm", "Print one permutation on a single line");
    perm_cmd->add_option("--algo", perm.algo, "dfp | vdro | oracle");
    perm_cmd->add_option("--radix", perm.radix, "Radix r >= 2");
    perm_cmd->add_option("--k", perm.k, "Exponent, N = r^k");
    perm_cmd->add_option("--base", perm.base, "Value of the first index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        if (*bench_cmd) {
            return run_bench(bench);
        }
        return run_perm(perm);
    } catch (const digitrev::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const digitrev::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    }
}
