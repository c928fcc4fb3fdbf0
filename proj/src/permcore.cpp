#include "digitrev/permcore.hpp"

#include "digitrev/errors.hpp"

#include <limits>
#include <string>
#include <utility>

namespace digitrev {

namespace {

constexpr auto kMaxLength = static_cast<std::uint64_t>(std::numeric_limits<Index>::max());

} // namespace

RadixPower RadixPower::from_exponent(std::uint64_t radix, unsigned exponent)
{
    if (radix < 2) {
        throw RadixTooSmall("radix must be at least 2, got " + std::to_string(radix));
    }
    std::uint64_t length = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (length > kMaxLength / radix) {
            throw IndexOverflow(std::to_string(radix) + "^" + std::to_string(exponent) +
                                " does not fit the index type");
        }
        length *= radix;
    }
    return {radix, exponent, length};
}

RadixPower decompose_radix_power(std::uint64_t n, std::uint64_t radix)
{
    if (radix < 2) {
        throw RadixTooSmall("radix must be at least 2, got " + std::to_string(radix));
    }
    if (n == 0) {
        throw NotAPowerOfRadix("0 is not a power of " + std::to_string(radix));
    }
    if (n > kMaxLength) {
        throw IndexOverflow(std::to_string(n) + " does not fit the index type");
    }
    unsigned exponent = 0;
    for (std::uint64_t rest = n; rest != 1; rest /= radix) {
        if (rest % radix != 0) {
            throw NotAPowerOfRadix(std::to_string(n) + " is not a power of " + std::to_string(radix));
        }
        ++exponent;
    }
    return {radix, exponent, n};
}

PermutationVector::PermutationVector(Index base, std::vector<Index> indices)
    : base_(base), indices_(std::move(indices))
{
    if (!is_permutation_of_range(base_, indices_)) {
        throw InvalidArgument("indices are not a permutation of [" + std::to_string(base_) + ", " +
                              std::to_string(base_) + "+" + std::to_string(indices_.size()) + ")");
    }
}

PermutationVector PermutationVector::from_trusted(Index base, std::vector<Index> indices) noexcept
{
    PermutationVector p;
    p.base_ = base;
    p.indices_ = std::move(indices);
    return p;
}

PermutationVector PermutationVector::rebased(Index new_base) const
{
    detail::require_index_range(new_base, indices_.size());
    std::vector<Index> out(indices_.size());
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        out[i] = indices_[i] - base_ + new_base;
    }
    return from_trusted(new_base, std::move(out));
}

bool is_permutation_of_range(Index base, std::span<const Index> indices)
{
    const std::size_t n = indices.size();
    std::vector<bool> seen(n, false);
    for (Index v : indices) {
        // Compare in unsigned space so that base near the Index limits cannot overflow.
        const auto offset = static_cast<std::uint64_t>(v) - static_cast<std::uint64_t>(base);
        if (v < base || offset >= n || seen[offset]) {
            return false;
        }
        seen[offset] = true;
    }
    return true;
}

std::uint64_t reverse_digits(std::uint64_t value, const RadixPower& rp) noexcept
{
    const std::uint64_t r = rp.radix();
    std::uint64_t reversed = 0;
    for (unsigned d = 0; d < rp.exponent(); ++d) {
        reversed = reversed * r + value % r;
        value /= r;
    }
    return reversed;
}

PermutationVector oracle_digit_reversal(const RadixPower& rp, Index base)
{
    const std::uint64_t n = rp.length();
    detail::require_index_range(base, n);
    std::vector<Index> out(n);
    for (std::uint64_t j = 0; j < n; ++j) {
        out[j] = base + static_cast<Index>(reverse_digits(j, rp));
    }
    return PermutationVector::from_trusted(base, std::move(out));
}

namespace detail {

void require_index_range(Index base, std::uint64_t n)
{
    if (n == 0) {
        return;
    }
    if (n - 1 > kMaxLength ||
        (base > 0 && static_cast<std::uint64_t>(base) > kMaxLength - (n - 1))) {
        throw IndexOverflow("offset " + std::to_string(base) + " plus length " + std::to_string(n) +
                            " overflows the index type");
    }
}

unsigned require_power_of_two(std::uint64_t n)
{
    return decompose_radix_power(n, 2).exponent();
}

} // namespace detail

} // namespace digitrev
