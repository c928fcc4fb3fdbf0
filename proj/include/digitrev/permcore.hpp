#pragma once

// Shared domain types for digit-reversal permutations and the slow reference
// implementation every fast algorithm is checked against.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace digitrev {

/// Element type of permutation indices. Signed so that arbitrary offsets
/// (including negative ones) can be represented.
using Index = std::int64_t;

/// A validated triple (radix, exponent, length) with length == radix^exponent
/// computed in exact integer arithmetic.
class RadixPower {
public:
    /// Throws RadixTooSmall for radix < 2 and IndexOverflow when radix^exponent
    /// does not fit in Index.
    static RadixPower from_exponent(std::uint64_t radix, unsigned exponent);

    [[nodiscard]] std::uint64_t radix() const noexcept { return radix_; }
    [[nodiscard]] unsigned exponent() const noexcept { return exponent_; }
    [[nodiscard]] std::uint64_t length() const noexcept { return length_; }

    friend bool operator==(const RadixPower&, const RadixPower&) = default;
    friend RadixPower decompose_radix_power(std::uint64_t n, std::uint64_t radix);

private:
    RadixPower(std::uint64_t radix, unsigned exponent, std::uint64_t length) noexcept
        : radix_(radix), exponent_(exponent), length_(length) {}

    std::uint64_t radix_;
    unsigned exponent_;
    std::uint64_t length_;
};

/// Recovers k from n = radix^k by repeated exact division. No floating-point
/// logarithms are involved, so powers such as 3^3, 3^4 and 7^7 are exact.
/// Throws NotAPowerOfRadix if a remainder shows up before reaching 1 (or n == 0),
/// RadixTooSmall if radix < 2.
RadixPower decompose_radix_power(std::uint64_t n, std::uint64_t radix);

/// A length-N vector holding each of {base, ..., base+N-1} exactly once.
class PermutationVector {
public:
    PermutationVector() = default;

    /// Validates the permutation invariant; throws InvalidArgument otherwise.
    PermutationVector(Index base, std::vector<Index> indices);

    /// Wraps algorithm output without the O(N) validation pass.
    static PermutationVector from_trusted(Index base, std::vector<Index> indices) noexcept;

    [[nodiscard]] Index base() const noexcept { return base_; }
    [[nodiscard]] std::span<const Index> indices() const noexcept { return indices_; }
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
    [[nodiscard]] Index operator[](std::size_t i) const noexcept { return indices_[i]; }

    /// Same permutation re-expressed over {new_base, ..., new_base+N-1}.
    [[nodiscard]] PermutationVector rebased(Index new_base) const;

    [[nodiscard]] std::vector<Index> release() && noexcept { return std::move(indices_); }

    friend bool operator==(const PermutationVector&, const PermutationVector&) = default;

private:
    Index base_ = 0;
    std::vector<Index> indices_;
};

/// True iff `indices` holds every value of {base, ..., base+size-1} exactly once.
bool is_permutation_of_range(Index base, std::span<const Index> indices);

/// Reverses the k-digit base-r representation of `value` (value < r^k).
std::uint64_t reverse_digits(std::uint64_t value, const RadixPower& rp) noexcept;

/// Reference digit reversal: P[j] = base + reverse_digits(j). O(N k).
PermutationVector oracle_digit_reversal(const RadixPower& rp, Index base);

namespace detail {

/// Throws IndexOverflow unless base + n - 1 is representable as an Index.
void require_index_range(Index base, std::uint64_t n);

/// Validates n == 2^k and returns k.
unsigned require_power_of_two(std::uint64_t n);

} // namespace detail

} // namespace digitrev
