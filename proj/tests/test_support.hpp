#pragma once

// Test-only oracles and generators. Nothing here calls into the algorithms
// under test.

#include "digitrev/fft.hpp"
#include "digitrev/permcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace digitrev::testing {

/// Digit reversal through an explicit digit string: write j in base r with k
/// digits (most significant first), reverse the string, read it back.
inline std::vector<Index> digit_string_reversal(std::uint64_t radix, unsigned k, Index base)
{
    std::uint64_t n = 1;
    for (unsigned i = 0; i < k; ++i) {
        n *= radix;
    }
    std::vector<Index> out(n);
    std::vector<std::uint64_t> digits(k);
    for (std::uint64_t j = 0; j < n; ++j) {
        std::uint64_t v = j;
        for (unsigned d = k; d-- > 0;) {
            digits[d] = v % radix; // digits[0] is most significant
            v /= radix;
        }
        std::reverse(digits.begin(), digits.end());
        std::uint64_t rev = 0;
        for (std::uint64_t d : digits) {
            rev = rev * radix + d;
        }
        out[j] = base + static_cast<Index>(rev);
    }
    return out;
}

/// Additive constants by the recursive definition: C_2 = [1],
/// C_2N = [2 C_N, -2N + 3, 2 C_N].
inline std::vector<Index> capf_by_definition(unsigned k)
{
    std::vector<Index> c{1};
    for (unsigned step = 2; step <= k; ++step) {
        std::vector<Index> next;
        next.reserve(2 * c.size() + 1);
        for (Index v : c) {
            next.push_back(2 * v);
        }
        next.push_back(-(Index{1} << step) + 3);
        for (Index v : c) {
            next.push_back(2 * v);
        }
        c = std::move(next);
    }
    return c;
}

inline std::vector<Index> to_vector(const PermutationVector& p)
{
    return {p.indices().begin(), p.indices().end()};
}

inline std::vector<Index> iota_vector(std::size_t n, Index first)
{
    std::vector<Index> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = first + static_cast<Index>(i);
    }
    return v;
}

inline ComplexSignal random_signal(std::size_t n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> s(n);
    for (auto& z : s) {
        z = {dist(rng), dist(rng)};
    }
    return ComplexSignal(std::move(s));
}

/// max_k |a_k - b_k| / max_k |b_k|
inline double max_relative_error(const ComplexSignal& a, const ComplexSignal& b)
{
    double err = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        err = std::max(err, std::abs(a[i] - b[i]));
        scale = std::max(scale, std::abs(b[i]));
    }
    return scale > 0.0 ? err / scale : err;
}

inline bool is_involution(const std::vector<Index>& p)
{
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[static_cast<std::size_t>(p[j])] != static_cast<Index>(j)) {
            return false;
        }
    }
    return true;
}

} // namespace digitrev::testing
