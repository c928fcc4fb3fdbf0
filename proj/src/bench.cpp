#include "digitrev/bench.hpp"

#include "digitrev/additive_constants.hpp"
#include "digitrev/dfp.hpp"
#include "digitrev/errors.hpp"
#include "digitrev/vdro.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace digitrev {

std::string_view to_string(Algorithm a) noexcept
{
    switch (a) {
    case Algorithm::dfp: return "dfp";
    case Algorithm::vdro: return "vdro";
    case Algorithm::mk_fperm: return "mk_fperm";
    case Algorithm::oracle: return "oracle";
    case Algorithm::sort_baseline: return "sort_baseline";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name)
{
    for (Algorithm a : kAllAlgorithms) {
        if (name == to_string(a)) {
            return a;
        }
    }
    if (name == "sort") {
        return Algorithm::sort_baseline;
    }
    throw ConfigInvalid("unknown algorithm '" + std::string(name) + "'");
}

bool supports_radix(Algorithm a, std::uint64_t radix) noexcept
{
    if (a == Algorithm::dfp || a == Algorithm::mk_fperm) {
        return radix == 2;
    }
    return radix >= 2;
}

PermutationVector sort_baseline(const RadixPower& rp, Index base)
{
    const std::uint64_t n = rp.length();
    detail::require_index_range(base, n);
    std::vector<std::pair<std::uint64_t, Index>> keyed(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        keyed[v] = {reverse_digits(v, rp), static_cast<Index>(v)};
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Index> out(n);
    for (std::uint64_t j = 0; j < n; ++j) {
        out[j] = base + keyed[j].second;
    }
    return PermutationVector::from_trusted(base, std::move(out));
}

PermutationVector run_algorithm(Algorithm a, const RadixPower& rp, Index base)
{
    if (!supports_radix(a, rp.radix())) {
        throw InvalidArgument(std::string(to_string(a)) + " does not support radix " + std::to_string(rp.radix()));
    }
    switch (a) {
    case Algorithm::dfp: return dfp(base, rp.length());
    case Algorithm::vdro: return vdro(rp.length(), rp.radix(), base);
    case Algorithm::mk_fperm: {
        PermutationVector p = mk_fperm(rp.length());
        return base == 1 ? p : p.rebased(base);
    }
    case Algorithm::oracle: return oracle_digit_reversal(rp, base);
    case Algorithm::sort_baseline: return sort_baseline(rp, base);
    }
    throw InvalidArgument("unknown algorithm");
}

// --- repetition schedule ----------------------------------------------------

RepetitionSchedule::RepetitionSchedule(std::map<unsigned, std::uint64_t> steps) : steps_(std::move(steps))
{
    if (steps_.empty()) {
        throw ConfigInvalid("repetition schedule is empty");
    }
    std::uint64_t previous = std::numeric_limits<std::uint64_t>::max();
    for (const auto& [k, reps] : steps_) {
        if (reps < 1) {
            throw ConfigInvalid("repetitions for k=" + std::to_string(k) + " must be at least 1");
        }
        if (reps > previous) {
            throw ConfigInvalid("repetition schedule must be non-increasing in k (k=" + std::to_string(k) + ")");
        }
        previous = reps;
    }
}

RepetitionSchedule RepetitionSchedule::default_schedule()
{
    return RepetitionSchedule({{0, 100'000}, {9, 10'000}, {15, 1'000}, {19, 100}});
}

namespace {

template <class T>
T parse_number(std::string_view text, std::string_view what)
{
    T value{};
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw ConfigInvalid("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

} // namespace

RepetitionSchedule RepetitionSchedule::parse(std::string_view text)
{
    if (text == "default") {
        return default_schedule();
    }
    constexpr std::string_view prefix = "custom:";
    if (!text.starts_with(prefix)) {
        throw ConfigInvalid("repetition schedule must be 'default' or 'custom:k=reps,...'");
    }
    std::map<unsigned, std::uint64_t> steps;
    for (std::string_view entry : split(text.substr(prefix.size()), ',')) {
        const std::size_t eq = entry.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigInvalid("schedule entry '" + std::string(entry) + "' is not k=reps");
        }
        const auto k = parse_number<unsigned>(entry.substr(0, eq), "k");
        const auto reps = parse_number<std::uint64_t>(entry.substr(eq + 1), "repetition count");
        if (!steps.emplace(k, reps).second) {
            throw ConfigInvalid("duplicate schedule entry for k=" + std::to_string(k));
        }
    }
    return RepetitionSchedule(std::move(steps));
}

std::uint64_t RepetitionSchedule::repetitions_for(unsigned k) const
{
    auto it = steps_.upper_bound(k);
    if (it == steps_.begin()) {
        throw ConfigInvalid("repetition schedule does not cover k=" + std::to_string(k));
    }
    return std::prev(it)->second;
}

void BenchConfig::validate() const
{
    if (k_min > k_max) {
        throw ConfigInvalid("k_min (" + std::to_string(k_min) + ") exceeds k_max (" + std::to_string(k_max) + ")");
    }
    if (radices.empty()) {
        throw ConfigInvalid("no radices given");
    }
    if (algorithms.empty()) {
        throw ConfigInvalid("no algorithms given");
    }
    for (std::uint64_t r : radices) {
        if (r < 2) {
            throw ConfigInvalid("radix must be at least 2, got " + std::to_string(r));
        }
    }
    if (time_budget_per_run.count() < 0) {
        throw ConfigInvalid("time budget per run must not be negative");
    }
    for (unsigned k = k_min; k <= k_max; ++k) {
        static_cast<void>(schedule.repetitions_for(k));
    }
}

bool BenchReport::verified() const noexcept
{
    return std::all_of(spot_checks.begin(), spot_checks.end(), [](const SpotCheck& s) { return s.matched; });
}

std::uint64_t estimated_working_set(Algorithm a, std::uint64_t n) noexcept
{
    constexpr std::uint64_t word = sizeof(Index);
    std::uint64_t words_per_element = 1;
    switch (a) {
    case Algorithm::dfp:
    case Algorithm::vdro:
    case Algorithm::oracle: words_per_element = 1; break;
    case Algorithm::mk_fperm: words_per_element = 2; break;
    case Algorithm::sort_baseline: words_per_element = 3; break;
    }
    if (n > std::numeric_limits<std::uint64_t>::max() / (word * words_per_element)) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return n * word * words_per_element;
}

// --- benchmark loop -----------------------------------------------------------

namespace {

struct PlannedRun {
    Algorithm algorithm;
    RadixPower rp;
};

volatile Index g_sink = 0;

} // namespace

BenchReport run_benchmark(const BenchConfig& cfg, std::ostream* progress)
{
    cfg.validate();
    BenchReport report;

    std::vector<std::uint64_t> radices = cfg.radices;
    std::sort(radices.begin(), radices.end());
    radices.erase(std::unique(radices.begin(), radices.end()), radices.end());
    std::vector<Algorithm> algorithms = cfg.algorithms;
    std::sort(algorithms.begin(), algorithms.end());
    algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());

    std::mt19937_64 rng(cfg.seed);

    for (Algorithm algo : algorithms) {
        std::vector<PlannedRun> plan;
        for (std::uint64_t r : radices) {
            for (unsigned k = cfg.k_min; k <= cfg.k_max; ++k) {
                auto skip = [&](std::string reason) {
                    report.skipped.push_back({algo, r, k, std::move(reason)});
                };
                if (!supports_radix(algo, r)) {
                    skip("radix-2 only");
                    continue;
                }
                if (algo == Algorithm::mk_fperm && k == 0) {
                    skip("needs k >= 1");
                    continue;
                }
                try {
                    const RadixPower rp = RadixPower::from_exponent(r, k);
                    detail::require_index_range(cfg.base, rp.length());
                    if (estimated_working_set(algo, rp.length()) > cfg.memory_ceiling_bytes) {
                        skip("memory ceiling exceeded (" + std::to_string(estimated_working_set(algo, rp.length())) +
                             " > " + std::to_string(cfg.memory_ceiling_bytes) + " bytes)");
                        continue;
                    }
                    plan.push_back({algo, rp});
                } catch (const IndexOverflow& e) {
                    skip(e.what());
                }
            }
        }
        if (plan.empty()) {
            continue;
        }

        // Spot checks: first, last and one random run of this algorithm.
        std::set<std::size_t> checked{0, plan.size() - 1};
        checked.insert(std::uniform_int_distribution<std::size_t>(0, plan.size() - 1)(rng));

        for (std::size_t i = 0; i < plan.size(); ++i) {
            const RadixPower& rp = plan[i].rp;
            const std::uint64_t scheduled = cfg.schedule.repetitions_for(rp.exponent());
            std::uint64_t reps = scheduled;
            const bool check = checked.count(i) != 0;

            const unsigned warmups = std::max(cfg.warmup_rounds, cfg.time_budget_per_run.count() > 0 ? 1u : 0u);
            const auto warm_start = std::chrono::steady_clock::now();
            for (unsigned w = 0; w < warmups; ++w) {
                const PermutationVector p = run_algorithm(algo, rp, cfg.base);
                g_sink = g_sink + p[p.size() - 1];
            }
            if (cfg.time_budget_per_run.count() > 0) {
                const auto per_rep =
                    std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - warm_start)
                        .count() /
                    warmups;
                if (per_rep > 0) {
                    const auto affordable = static_cast<std::uint64_t>(
                        std::max<std::int64_t>(1, cfg.time_budget_per_run.count() / per_rep));
                    if (affordable < reps) {
                        reps = affordable;
                        report.capped.push_back({algo, rp.radix(), rp.exponent(), scheduled, reps});
                    }
                }
            }

            PermutationVector kept;
            Index sink = 0;
            const auto start = std::chrono::steady_clock::now();
            for (std::uint64_t rep = 0; rep < reps; ++rep) {
                PermutationVector p = run_algorithm(algo, rp, cfg.base);
                sink += p[0] ^ p[p.size() - 1];
                if (check && rep + 1 == reps) {
                    kept = std::move(p);
                }
            }
            const auto stop = std::chrono::steady_clock::now();
            g_sink = g_sink + sink;

            BenchRecord rec;
            rec.algorithm = algo;
            rec.radix = rp.radix();
            rec.exponent_k = rp.exponent();
            rec.repetitions = reps;
            rec.medium_time_ns =
                static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()) /
                static_cast<double>(reps);
            if (algo == Algorithm::dfp) {
                rec.op_additions = dfp_counted(cfg.base, rp.length()).second.scalar_additions;
            }
            report.records.push_back(rec);

            if (check) {
                const bool matched = kept == oracle_digit_reversal(rp, cfg.base);
                report.spot_checks.push_back({algo, rp.radix(), rp.exponent(), matched});
            }
            if (progress) {
                *progress << to_string(algo) << " r=" << rp.radix() << " k=" << rp.exponent() << " reps=" << reps
                          << " medium=" << rec.medium_time_ns << " ns" << (check ? " [checked]" : "") << '\n';
            }
        }
    }
    return report;
}

// --- CSV ------------------------------------------------------------------------

namespace {

constexpr std::string_view kCsvHeader = "algorithm,radix,k,N,repetitions,medium_time_ns,op_additions";

std::string format_double(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

IoError io_error(std::string_view msg, const std::filesystem::path& path)
{
    return IoError(std::string(msg) + " '" + path.string() + "'");
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open", path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw io_error("cannot open for writing", path);
    }
    out << text;
    out.flush();
    if (!out) {
        throw io_error("write failed for", path);
    }
}

std::vector<BenchRecord> sorted_records(std::span<const BenchRecord> records)
{
    std::vector<BenchRecord> sorted(records.begin(), records.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const BenchRecord& a, const BenchRecord& b) {
        return std::tie(a.algorithm, a.radix, a.exponent_k) < std::tie(b.algorithm, b.radix, b.exponent_k);
    });
    return sorted;
}

} // namespace

std::string format_csv(std::span<const BenchRecord> records)
{
    std::string out(kCsvHeader);
    out += '\n';
    for (const BenchRecord& r : sorted_records(records)) {
        out += to_string(r.algorithm);
        out += ',' + std::to_string(r.radix);
        out += ',' + std::to_string(r.exponent_k);
        out += ',' + std::to_string(r.length());
        out += ',' + std::to_string(r.repetitions);
        out += ',' + format_double(r.medium_time_ns);
        out += ',';
        if (r.op_additions) {
            out += std::to_string(*r.op_additions);
        }
        out += '\n';
    }
    return out;
}

std::vector<BenchRecord> parse_csv(std::string_view text)
{
    std::vector<std::string_view> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty() || lines.front() != kCsvHeader) {
        throw ConfigInvalid("CSV header mismatch");
    }
    std::vector<BenchRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split(lines[i], ',');
        if (fields.size() != 7) {
            throw ConfigInvalid("CSV line " + std::to_string(i + 1) + " has " + std::to_string(fields.size()) +
                                " fields");
        }
        BenchRecord r;
        r.algorithm = parse_algorithm(fields[0]);
        r.radix = parse_number<std::uint64_t>(fields[1], "radix");
        r.exponent_k = parse_number<unsigned>(fields[2], "k");
        const auto n = parse_number<std::uint64_t>(fields[3], "N");
        r.repetitions = parse_number<std::uint64_t>(fields[4], "repetitions");
        r.medium_time_ns = parse_number<double>(fields[5], "medium time");
        if (!fields[6].empty()) {
            r.op_additions = parse_number<std::uint64_t>(fields[6], "op count");
        }
        if (r.length() != n) {
            throw ConfigInvalid("CSV line " + std::to_string(i + 1) + ": N does not equal radix^k");
        }
        records.push_back(r);
    }
    return records;
}

void emit_csv(std::span<const BenchRecord> records, const std::filesystem::path& path)
{
    write_file(path, format_csv(records));
}

std::vector<BenchRecord> read_csv(const std::filesystem::path& path)
{
    return parse_csv(slurp(path));
}

void emit_gnuplot_script(std::span<const BenchRecord> records, const std::filesystem::path& csv_path,
                         const std::filesystem::path& script_path)
{
    std::set<std::pair<Algorithm, std::uint64_t>> series;
    for (const BenchRecord& r : records) {
        series.emplace(r.algorithm, r.radix);
    }
    std::ostringstream gp;
    gp << "set datafile separator ','\n"
       << "set key left top\n"
       << "set logscale y\n"
       << "set xlabel 'k'\n"
       << "set ylabel 'medium execution time [ns]'\n"
       << "set grid\n";
    gp << "plot";
    bool first = true;
    for (const auto& [algo, radix] : series) {
        gp << (first ? " " : ", \\\n     ");
        first = false;
        gp << "'" << csv_path.string() << "' using ($1 eq '" << to_string(algo) << "' && $2 == " << radix
           << " ? $3 : 1/0):6 with linespoints title '" << to_string(algo) << " r=" << radix << "'";
    }
    if (first) {
        gp << " 1/0 notitle";
    }
    gp << '\n';
    write_file(script_path, gp.str());
}

// --- reporting helpers ----------------------------------------------------------

std::optional<Breakpoint> estimate_breakpoint(std::span<const BenchRecord> series)
{
    std::vector<std::pair<double, double>> pts;
    for (const BenchRecord& r : series) {
        if (r.medium_time_ns > 0.0) {
            pts.emplace_back(static_cast<double>(r.exponent_k), std::log2(r.medium_time_ns));
        }
    }
    std::sort(pts.begin(), pts.end());
    if (pts.size() < 4) {
        return std::nullopt;
    }

    struct Fit {
        double slope;
        double sse;
    };
    auto fit = [&pts](std::size_t lo, std::size_t hi) {
        const auto m = static_cast<double>(hi - lo);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            sx += pts[i].first;
            sy += pts[i].second;
            sxx += pts[i].first * pts[i].first;
            sxy += pts[i].first * pts[i].second;
        }
        const double denom = m * sxx - sx * sx;
        const double slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
        const double intercept = (sy - slope * sx) / m;
        double sse = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            const double e = pts[i].second - (intercept + slope * pts[i].first);
            sse += e * e;
        }
        return Fit{slope, sse};
    };

    std::optional<Breakpoint> best;
    for (std::size_t split_at = 2; split_at + 2 <= pts.size(); ++split_at) {
        const Fit low = fit(0, split_at);
        const Fit high = fit(split_at, pts.size());
        const double residual = low.sse + high.sse;
        if (!best || residual < best->residual) {
            best = Breakpoint{static_cast<unsigned>(pts[split_at].first), low.slope, high.slope, residual};
        }
    }
    return best;
}

std::vector<std::string> relative_ordering_warnings(std::span<const BenchRecord> records)
{
    std::map<unsigned, double> dfp_times, sort_times;
    for (const BenchRecord& r : records) {
        if (r.radix != 2 || r.exponent_k < 6) {
            continue;
        }
        if (r.algorithm == Algorithm::dfp) {
            dfp_times[r.exponent_k] = r.medium_time_ns;
        } else if (r.algorithm == Algorithm::sort_baseline) {
            sort_times[r.exponent_k] = r.medium_time_ns;
        }
    }
    std::vector<std::string> warnings;
    for (const auto& [k, t_dfp] : dfp_times) {
        const auto it = sort_times.find(k);
        if (it != sort_times.end() && t_dfp > it->second) {
            warnings.push_back("WARN: dfp slower than sort_baseline at k=" + std::to_string(k) + " (" +
                               format_double(t_dfp) + " ns > " + format_double(it->second) + " ns)");
        }
    }
    return warnings;
}

} // namespace digitrev
