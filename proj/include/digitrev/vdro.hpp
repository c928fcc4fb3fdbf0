#pragma once

// Vectorial digit reversal for an arbitrary radix r >= 2, in two equivalent
// formulations: the kernel-vector form (vdigitrevorder) and the compact
// nested-loop form (vdro). vdro is the production path.

#include "digitrev/permcore.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace digitrev {

/// Loop state of vdigitrevorder, exposed to observers after every append.
struct KernelState {
    std::vector<Index> partial_result; ///< V
    std::vector<Index> kernel;         ///< KV, the block appended last
    unsigned current_step = 1;         ///< p + 1 while r^p <= |V| < r^(p+1)
    std::uint64_t current_scale = 0;   ///< N / r^current_step
    std::uint64_t len_v = 0;
    std::uint64_t len_kv = 0;
};

using KernelObserver = std::function<void(const KernelState&)>;

/// r-digit reversal of [1..N] by the kernel-vector rule: whenever |V| reaches
/// a power r^p the kernel restarts as V + N/r^(p+1) and V doubles; otherwise
/// the kernel advances by N/r^(p+1) and is appended again.
///
/// Throws RadixTooSmall for r < 2 and NotAPowerOfRadix unless N = r^k.
PermutationVector vdigitrevorder(std::uint64_t n, std::uint64_t radix, const KernelObserver& observer = {});

/// r-digit reversal of [base, ..., base+N-1]: V = [base]; for pr = N/r, N/r^2,
/// ..., 1 the current V is taken as kernel and V + c*pr appended for
/// c = 1..r-1. With r = 2 this performs exactly the steps of dfp.
PermutationVector vdro(std::uint64_t n, std::uint64_t radix, Index base = 1);

} // namespace digitrev
