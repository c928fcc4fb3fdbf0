#include "digitrev/vdro.hpp"

#include "digitrev/errors.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace digitrev {

namespace {

RadixPower validated(std::uint64_t n, std::uint64_t radix)
{
    if (radix < 2) {
        throw RadixTooSmall("radix must be at least 2, got " + std::to_string(radix));
    }
    return decompose_radix_power(n, radix);
}

} // namespace

PermutationVector vdigitrevorder(std::uint64_t n, std::uint64_t radix, const KernelObserver& observer)
{
    const RadixPower rp = validated(n, radix);
    if (rp.exponent() == 0) {
        return PermutationVector::from_trusted(1, {1});
    }
    const auto r = static_cast<Index>(radix);

    KernelState s;
    s.current_scale = n / radix;
    s.kernel.resize(radix);
    for (Index i = 0; i < r; ++i) {
        s.kernel[static_cast<std::size_t>(i)] = static_cast<Index>(s.current_scale) * i + 1;
    }
    s.partial_result.reserve(n);
    s.partial_result = s.kernel;
    s.len_v = radix;
    s.len_kv = 0;
    s.current_step = 1;
    std::uint64_t step_power = radix; // r^current_step
    if (observer) {
        observer(s);
    }

    while (s.len_v < n) {
        if (s.len_v == step_power) {
            s.current_step += 1;
            step_power *= radix;
            s.current_scale /= radix;
            const auto scale = static_cast<Index>(s.current_scale);
            s.kernel.resize(s.partial_result.size());
            for (std::size_t i = 0; i < s.kernel.size(); ++i) {
                s.kernel[i] = s.partial_result[i] + scale;
            }
            s.len_kv = s.len_v;
            s.len_v = 2 * s.len_v;
        } else {
            const auto scale = static_cast<Index>(s.current_scale);
            for (Index& v : s.kernel) {
                v += scale;
            }
            s.len_v += s.len_kv;
        }
        s.partial_result.insert(s.partial_result.end(), s.kernel.begin(), s.kernel.end());
        if (observer) {
            observer(s);
        }
    }
    return PermutationVector::from_trusted(1, std::move(s.partial_result));
}

PermutationVector vdro(std::uint64_t n, std::uint64_t radix, Index base)
{
    validated(n, radix);
    detail::require_index_range(base, n);

    std::vector<Index> v(n);
    Index* const out = v.data();
    out[0] = base;
    std::size_t len = 1;
    for (std::uint64_t pr = n / radix; pr >= 1; pr /= radix) {
        const std::size_t kernel_len = len;
        const auto step = static_cast<Index>(pr);
        Index shift = 0;
        for (std::uint64_t cont = 1; cont < radix; ++cont) {
            shift += step;
            for (std::size_t i = 0; i < kernel_len; ++i) {
                out[len + i] = out[i] + shift;
            }
            len += kernel_len;
        }
    }
    return PermutationVector::from_trusted(base, std::move(v));
}

} // namespace digitrev
