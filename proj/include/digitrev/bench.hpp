#pragma once

// Benchmark harness: medium execution time (total time / repetitions) of each
// permutation algorithm over a grid of (radix, k), with a repetition count that
// decreases as k grows. Results go to CSV; outputs are spot-checked against
// the reference digit reversal before any timing is reported.

#include "digitrev/permcore.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace digitrev {

enum class Algorithm { dfp, vdro, mk_fperm, oracle, sort_baseline };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::dfp, Algorithm::vdro, Algorithm::mk_fperm,
                                               Algorithm::oracle, Algorithm::sort_baseline};

std::string_view to_string(Algorithm a) noexcept;

/// Accepts the CSV names plus the short alias "sort". Throws ConfigInvalid.
Algorithm parse_algorithm(std::string_view name);

/// dfp and mk_fperm are bit-reversal only.
bool supports_radix(Algorithm a, std::uint64_t radix) noexcept;

/// Runs `a` on [base, ..., base+N-1]. mk_fperm needs k >= 1 and produces
/// base 1; other bases are rebased afterwards.
PermutationVector run_algorithm(Algorithm a, const RadixPower& rp, Index base);

/// Per-element baseline: computes every index's reversed digit value and
/// sorts the indices by it.
PermutationVector sort_baseline(const RadixPower& rp, Index base);

struct BenchRecord {
    Algorithm algorithm = Algorithm::dfp;
    std::uint64_t radix = 2;
    unsigned exponent_k = 0;
    std::uint64_t repetitions = 1;
    double medium_time_ns = 0.0;
    std::optional<std::uint64_t> op_additions;

    [[nodiscard]] std::uint64_t length() const { return RadixPower::from_exponent(radix, exponent_k).length(); }

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Step function k -> repetitions. Each entry (k0, reps) applies from k0 up to
/// the next entry. Values must be >= 1 and non-increasing in k.
class RepetitionSchedule {
public:
    explicit RepetitionSchedule(std::map<unsigned, std::uint64_t> steps);

    /// 1e5 for k <= 8, 1e4 for 9..14, 1e3 for 15..18, 1e2 from 19 on.
    static RepetitionSchedule default_schedule();

    /// "default" or "custom:k=reps,k=reps,...".
    static RepetitionSchedule parse(std::string_view text);

    /// Throws ConfigInvalid when no entry covers k.
    [[nodiscard]] std::uint64_t repetitions_for(unsigned k) const;

    [[nodiscard]] const std::map<unsigned, std::uint64_t>& steps() const noexcept { return steps_; }

private:
    std::map<unsigned, std::uint64_t> steps_;
};

struct BenchConfig {
    unsigned k_min = 2;
    unsigned k_max = 18;
    std::vector<std::uint64_t> radices{2, 3};
    RepetitionSchedule schedule = RepetitionSchedule::default_schedule();
    std::vector<Algorithm> algorithms{Algorithm::dfp, Algorithm::vdro, Algorithm::sort_baseline};
    unsigned warmup_rounds = 10;
    /// Runs whose estimated working set exceeds this are skipped and reported.
    std::uint64_t memory_ceiling_bytes = std::uint64_t{64} << 20;
    /// Measured time allowed per (algorithm, radix, k); zero means unlimited. Repetitions are
    /// reduced, never below one, when the warmup rounds predict the schedule would exceed it.
    std::chrono::nanoseconds time_budget_per_run = std::chrono::seconds{1};
    Index base = 1;
    std::uint64_t seed = 0x5eed;

    /// Throws ConfigInvalid.
    void validate() const;
};

struct SkippedRun {
    Algorithm algorithm;
    std::uint64_t radix;
    unsigned exponent_k;
    std::string reason;
};

struct SpotCheck {
    Algorithm algorithm;
    std::uint64_t radix;
    unsigned exponent_k;
    bool matched;
};

struct CappedRun {
    Algorithm algorithm;
    std::uint64_t radix;
    unsigned exponent_k;
    std::uint64_t scheduled_repetitions;
    std::uint64_t performed_repetitions;
};

struct BenchReport {
    std::vector<BenchRecord> records;
    std::vector<SkippedRun> skipped;
    std::vector<CappedRun> capped;
    std::vector<SpotCheck> spot_checks;

    /// True iff every spot-checked output matched the reference.
    [[nodiscard]] bool verified() const noexcept;
};

/// Estimated peak bytes held by one run of `a` at length n.
std::uint64_t estimated_working_set(Algorithm a, std::uint64_t n) noexcept;

/// Single-threaded, sequential. `progress`, if given, receives one line per run.
BenchReport run_benchmark(const BenchConfig& cfg, std::ostream* progress = nullptr);

/// Records sorted by (algorithm, radix, k) as CSV text with LF endings.
std::string format_csv(std::span<const BenchRecord> records);
std::vector<BenchRecord> parse_csv(std::string_view text);

/// Throws IoError.
void emit_csv(std::span<const BenchRecord> records, const std::filesystem::path& path);
std::vector<BenchRecord> read_csv(const std::filesystem::path& path);

/// gnuplot script plotting medium time against k, one curve per
/// (algorithm, radix), reading `csv_path`. Throws IoError.
void emit_gnuplot_script(std::span<const BenchRecord> records, const std::filesystem::path& csv_path,
                         const std::filesystem::path& script_path);

/// Two-segment least-squares fit of log2(medium time) against k.
struct Breakpoint {
    unsigned k_break;   ///< first k of the second segment
    double slope_low;
    double slope_high;
    double residual;
};

/// Needs at least four points of one (algorithm, radix) series.
std::optional<Breakpoint> estimate_breakpoint(std::span<const BenchRecord> series);

/// One message per k >= 6 at which dfp (radix 2) was slower than sort_baseline.
std::vector<std::string> relative_ordering_warnings(std::span<const BenchRecord> records);

} // namespace digitrev
