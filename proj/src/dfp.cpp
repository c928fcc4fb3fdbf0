#include "digitrev/dfp.hpp"

#include <cstddef>
#include <utility>

namespace digitrev {

namespace {

template <bool Counted>
PermutationVector run_dfp(Index base, std::uint64_t n, OpCount* count)
{
    detail::require_power_of_two(n);
    detail::require_index_range(base, n);

    std::vector<Index> v(n);
    Index* const out = v.data();
    out[0] = base;
    std::size_t len = 1;
    for (std::uint64_t p2 = n >> 1; p2 >= 1; p2 >>= 1) {
        const auto step = static_cast<Index>(p2);
        for (std::size_t i = 0; i < len; ++i) {
            out[len + i] = out[i] + step;
        }
        if constexpr (Counted) {
            count->scalar_additions += len;
            count->reallocations += 1;
            count->divisions_or_shifts += 1;
        }
        len *= 2;
    }
    return PermutationVector::from_trusted(base, std::move(v));
}

} // namespace

PermutationVector dfp(Index base, std::uint64_t n)
{
    return run_dfp<false>(base, n, nullptr);
}

std::pair<PermutationVector, OpCount> dfp_counted(Index base, std::uint64_t n)
{
    OpCount count;
    PermutationVector v = run_dfp<true>(base, n, &count);
    return {std::move(v), count};
}

std::vector<Index> mk_b10_rev_kbit(std::uint64_t n, const StepObserver& observer)
{
    detail::require_power_of_two(n);
    std::vector<Index> w(n);
    w[0] = 0;
    std::size_t len = 1;
    for (std::uint64_t p2 = 1; p2 <= n / 2; p2 <<= 1) {
        const auto step = static_cast<Index>(p2);
        for (std::size_t i = 0; i < len; ++i) {
            w[len + i] = w[i] + step;
        }
        len *= 2;
        if (observer) {
            observer(std::span<const Index>(w.data(), len));
        }
    }
    return w;
}

} // namespace digitrev
