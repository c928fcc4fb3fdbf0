#pragma once

// Direct bit reversal in k vectorial steps: starting from [b], the partial
// result V is replaced by [V, V + p] for p = N/2, N/4, ..., 1.

#include "digitrev/permcore.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace digitrev {

/// Arithmetic cost of one dfp run.
struct OpCount {
    std::uint64_t scalar_additions = 0;
    std::uint64_t divisions_or_shifts = 0;
    /// One per concatenation step. The buffer is allocated once up front;
    /// each block write stands for a reallocation of the growing vector.
    std::uint64_t reallocations = 0;

    friend bool operator==(const OpCount&, const OpCount&) = default;
};

/// Bit-reversal permutation of [b, ..., b+N-1], N = 2^k with k >= 0.
/// dfp(b, N) == b + dfp(0, N) elementwise.
PermutationVector dfp(Index base, std::uint64_t n);

/// Same result as dfp, plus the operation tally: N-1 additions, k shifts,
/// k reallocations.
std::pair<PermutationVector, OpCount> dfp_counted(Index base, std::uint64_t n);

/// Called with the intermediate W after every concatenation step.
using StepObserver = std::function<void(std::span<const Index>)>;

/// Reversed k-bit values of dfp(0, N), built with the doubling recurrence
/// W = [W, W + p], p = 1, 2, ..., N/2. Every intermediate W is ascending, so
/// the result is [0, 1, ..., N-1].
std::vector<Index> mk_b10_rev_kbit(std::uint64_t n, const StepObserver& observer = {});

} // namespace digitrev
