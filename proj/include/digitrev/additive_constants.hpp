#pragma once

// Additive constants method: the bit-reversal permutation of [1..N] written as
// a first-order recurrence Y(p+1) = Y(p) + C(p), Y(1) = 1, where C is the
// length-(N-1) vector of additive constants.

#include "digitrev/permcore.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace digitrev {

/// The additive constants of the bit-reversal permutation of [1..N], N = 2^k.
///
/// Construction only checks the shape (N a power of two >= 2, N-1 entries).
/// The structural properties are what check_proposition1/2 verify, so
/// arbitrary (even corrupted) vectors can be wrapped for inspection.
class AdditiveConstants {
public:
    AdditiveConstants(std::uint64_t length_n, std::vector<Index> constants);

    [[nodiscard]] std::uint64_t length_n() const noexcept { return length_n_; }
    [[nodiscard]] unsigned exponent() const noexcept { return exponent_; }
    [[nodiscard]] std::span<const Index> constants() const noexcept { return constants_; }

    /// 1-based access, rank in [1, N-1].
    [[nodiscard]] Index at_rank(std::size_t rank) const noexcept { return constants_[rank - 1]; }

    /// Value found at every odd rank: N/2.
    [[nodiscard]] Index trivial_constant() const noexcept { return static_cast<Index>(length_n_ / 2); }

    /// The entry at rank N/2 that splits the vector into two equal halves.
    [[nodiscard]] Index minor_constant() const noexcept { return at_rank(length_n_ / 2); }

    friend bool operator==(const AdditiveConstants&, const AdditiveConstants&) = default;

private:
    std::uint64_t length_n_;
    unsigned exponent_;
    std::vector<Index> constants_;
};

/// Builds C_N. N = 2 and N = 4 come straight from the recursive definition;
/// larger N start from the k = 3 non-trivial constants [-2, -5] and grow them
/// by doubling, mirroring and the minor-constant update.
AdditiveConstants mk_capf(std::uint64_t n);

/// Bit-reversal permutation of [1..N] by prefix sums over mk_capf(N).
PermutationVector mk_fperm(std::uint64_t n);

struct ClauseVerdict {
    std::string clause;      ///< roman numeral of the clause, e.g. "iv"
    bool passed = true;
    bool vacuous = false;    ///< nothing to check at this N
    std::size_t failing_rank = 0; ///< 1-based rank of the first violation, 0 if none
    std::string detail;
};

using Verdicts = std::vector<ClauseVerdict>;

[[nodiscard]] bool all_passed(const Verdicts& verdicts) noexcept;

/// Evaluates the eight structural clauses (odd ranks trivial, even ranks
/// negative, halves equal, minor constant value, evenness, mirror symmetry,
/// forward doubling, minor-constant recursion). Requires N >= 4.
Verdicts check_proposition1(const AdditiveConstants& c);

/// Evaluates the four sum clauses (total, non-trivial sum, first half,
/// every window of N/2 consecutive constants). Requires N >= 4.
Verdicts check_proposition2(const AdditiveConstants& c);

/// Sum over even ranks 2, 4, ..., N-2: the non-trivial constants.
Index sum_even_rank_constants(const AdditiveConstants& c) noexcept;

/// Sum over odd ranks 1, 3, ..., N-1: (N/2) copies of the trivial constant.
Index sum_odd_rank_constants(const AdditiveConstants& c) noexcept;

} // namespace digitrev
