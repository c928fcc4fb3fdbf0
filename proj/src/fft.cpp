#include "digitrev/fft.hpp"

#include "digitrev/dfp.hpp"
#include "digitrev/errors.hpp"

#include <numbers>
#include <string>

namespace digitrev {

Complex twiddle(std::uint64_t k, std::uint64_t n) noexcept
{
    return std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

ComplexSignal dft_naive(const ComplexSignal& x)
{
    const std::size_t n = x.size();
    if (n == 0) {
        throw EmptySignal("DFT of an empty signal");
    }
    std::vector<Complex> roots(n);
    for (std::size_t j = 0; j < n; ++j) {
        roots[j] = twiddle(j, n);
    }
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        std::size_t e = 0; // k*m mod n
        for (std::size_t m = 0; m < n; ++m) {
            acc += x[m] * roots[e];
            e += k;
            if (e >= n) {
                e -= n;
            }
        }
        out[k] = acc;
    }
    return ComplexSignal(std::move(out));
}

namespace {

void require_fft_length(std::size_t n)
{
    if (n == 0) {
        throw EmptySignal("FFT of an empty signal");
    }
    detail::require_power_of_two(n);
}

std::vector<Complex> mk_fft(std::vector<Complex> x, std::vector<Index> tags, std::size_t depth,
                            RecursionTrace* trace)
{
    const std::size_t n = x.size();
    if (trace) {
        if (trace->stages.size() <= depth) {
            trace->stages.resize(depth + 1);
        }
        auto& stage = trace->stages[depth];
        stage.insert(stage.end(), tags.begin(), tags.end());
    }
    if (n == 1) {
        return x;
    }

    const std::size_t half = n / 2;
    std::vector<Complex> odd(half), even(half);
    std::vector<Index> odd_tags, even_tags;
    for (std::size_t i = 0; i < half; ++i) {
        odd[i] = x[2 * i];      // 1-based positions 1, 3, 5, ...
        even[i] = x[2 * i + 1]; // 1-based positions 2, 4, 6, ...
    }
    if (trace) {
        odd_tags.resize(half);
        even_tags.resize(half);
        for (std::size_t i = 0; i < half; ++i) {
            odd_tags[i] = tags[2 * i];
            even_tags[i] = tags[2 * i + 1];
        }
    }
    const std::vector<Complex> o = mk_fft(std::move(odd), std::move(odd_tags), depth + 1, trace);
    const std::vector<Complex> e = mk_fft(std::move(even), std::move(even_tags), depth + 1, trace);

    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < half; ++k) {
        const Complex t = twiddle(k, n) * e[k];
        out[k] = o[k] + t;
        out[half + k] = o[k] - t;
    }
    return out;
}

} // namespace

ComplexSignal fft_recursive(const ComplexSignal& x, RecursionTrace* trace)
{
    require_fft_length(x.size());
    std::vector<Index> tags;
    if (trace) {
        trace->stages.clear();
        tags.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            tags[i] = static_cast<Index>(i) + 1;
        }
    }
    return ComplexSignal(mk_fft({x.begin(), x.end()}, std::move(tags), 0, trace));
}

ComplexSignal fft_iterative(const ComplexSignal& x, std::vector<Index>* input_order)
{
    require_fft_length(x.size());
    const std::size_t n = x.size();
    const PermutationVector order = dfp(0, n);
    if (input_order) {
        input_order->assign(order.indices().begin(), order.indices().end());
    }
    ComplexSignal a = apply_permutation(x, order);

    std::vector<Complex> roots;
    roots.reserve(n / 2);
    for (std::size_t m = 2; m <= n; m *= 2) {
        const std::size_t half = m / 2;
        roots.resize(half);
        for (std::size_t j = 0; j < half; ++j) {
            roots[j] = twiddle(j, m);
        }
        for (std::size_t s = 0; s < n; s += m) {
            for (std::size_t j = 0; j < half; ++j) {
                const Complex t = roots[j] * a[s + j + half];
                const Complex u = a[s + j];
                a[s + j] = u + t;
                a[s + j + half] = u - t;
            }
        }
    }
    return a;
}

ComplexSignal apply_permutation(const ComplexSignal& x, const PermutationVector& p)
{
    if (x.size() != p.size()) {
        throw LengthMismatch("signal has " + std::to_string(x.size()) + " samples, permutation has " +
                             std::to_string(p.size()));
    }
    const auto n = static_cast<std::uint64_t>(x.size());
    std::vector<Complex> out(x.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const auto src = static_cast<std::uint64_t>(p[j]) - static_cast<std::uint64_t>(p.base());
        if (p[j] < p.base() || src >= n) {
            throw IndexOutOfRange("permutation entry " + std::to_string(p[j]) + " outside [" +
                                  std::to_string(p.base()) + ", " + std::to_string(p.base()) + "+" +
                                  std::to_string(n) + ")");
        }
        out[j] = x[src];
    }
    return ComplexSignal(std::move(out));
}

} // namespace digitrev
