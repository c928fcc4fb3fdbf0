#pragma once

// Forward DFT three ways: the O(N^2) definition, the explicitly recursive
// radix-2 decimation in time, and an iterative version whose input reorder
// is the dfp bit-reversal permutation. Sign convention exp(-2*pi*i*k*n/N),
// no normalization.

#include "digitrev/permcore.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace digitrev {

using Complex = std::complex<double>;

class ComplexSignal {
public:
    ComplexSignal() = default;
    explicit ComplexSignal(std::vector<Complex> samples) : samples_(std::move(samples)) {}
    ComplexSignal(std::initializer_list<Complex> samples) : samples_(samples) {}

    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
    [[nodiscard]] bool empty() const noexcept { return samples_.empty(); }
    [[nodiscard]] std::span<const Complex> samples() const noexcept { return samples_; }
    [[nodiscard]] const Complex& operator[](std::size_t i) const noexcept { return samples_[i]; }
    [[nodiscard]] Complex& operator[](std::size_t i) noexcept { return samples_[i]; }

    [[nodiscard]] auto begin() const noexcept { return samples_.begin(); }
    [[nodiscard]] auto end() const noexcept { return samples_.end(); }

    friend bool operator==(const ComplexSignal&, const ComplexSignal&) = default;

private:
    std::vector<Complex> samples_;
};

/// exp(-2*pi*i*k/n)
Complex twiddle(std::uint64_t k, std::uint64_t n) noexcept;

/// X[k] = sum_n x[n] exp(-2*pi*i*k*n/N). Any length >= 1; throws EmptySignal.
ComplexSignal dft_naive(const ComplexSignal& x);

/// Index tags seen by each level of fft_recursive. stages[d] concatenates, left
/// to right, the 1-based input positions handed to every call at depth d.
struct RecursionTrace {
    std::vector<std::vector<Index>> stages;
};

/// Radix-2 DIT with explicit recursion on the (1-based) odd and even samples,
/// combined by butterflies. Length must be 2^k.
ComplexSignal fft_recursive(const ComplexSignal& x, RecursionTrace* trace = nullptr);

/// Iterative radix-2 DIT: gather the input through dfp(0, N), then log2(N)
/// butterfly stages with per-stage twiddle tables. If `input_order` is given
/// it receives the permutation used for the gather.
ComplexSignal fft_iterative(const ComplexSignal& x, std::vector<Index>* input_order = nullptr);

/// y[j] = x[p[j] - p.base()]. Throws LengthMismatch or IndexOutOfRange.
ComplexSignal apply_permutation(const ComplexSignal& x, const PermutationVector& p);

} // namespace digitrev
