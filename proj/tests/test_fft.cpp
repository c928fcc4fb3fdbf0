#include "digitrev/dfp.hpp"
#include "digitrev/errors.hpp"
#include "digitrev/fft.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace digitrev;
using digitrev::testing::max_relative_error;
using digitrev::testing::random_signal;

namespace {

void expect_close(const ComplexSignal& got, const ComplexSignal& want, double tol = 1e-12)
{
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_NEAR(got[i].real(), want[i].real(), tol) << "bin " << i;
        EXPECT_NEAR(got[i].imag(), want[i].imag(), tol) << "bin " << i;
    }
}

} // namespace

TEST(DftNaive, HandComputedValues)
{
    expect_close(dft_naive({1, 0, 0, 0}), {1, 1, 1, 1});
    expect_close(dft_naive({1, 1, 1, 1}), {4, 0, 0, 0});
    expect_close(dft_naive({1, 2, 3, 4}), {{10, 0}, {-2, 2}, {-2, 0}, {-2, -2}});
    expect_close(dft_naive({Complex{3, -1}}), {Complex{3, -1}});
}

TEST(DftNaive, NonPowerOfTwoLength)
{
    // x = [1, 1, 1]: all energy at DC
    expect_close(dft_naive({1, 1, 1}), {3, 0, 0});
    EXPECT_THROW(dft_naive(ComplexSignal{}), EmptySignal);
}

TEST(FftRecursive, SmallCases)
{
    expect_close(fft_recursive({1, 0, 0, 0}), {1, 1, 1, 1});
    expect_close(fft_recursive({Complex{2.5, -7}}), {Complex{2.5, -7}});
    expect_close(fft_recursive({1, 2, 3, 4}), {{10, 0}, {-2, 2}, {-2, 0}, {-2, -2}});
    EXPECT_THROW(fft_recursive({1, 2, 3}), NotAPowerOfRadix);
    EXPECT_THROW(fft_recursive(ComplexSignal{}), EmptySignal);
}

TEST(FftRecursive, MatchesNaiveDft)
{
    std::mt19937_64 rng(1);
    for (std::size_t n = 1; n <= 256; n *= 2) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto x = random_signal(n, rng);
            EXPECT_LE(max_relative_error(fft_recursive(x), dft_naive(x)), 1e-9) << "n=" << n;
        }
    }
}

TEST(FftRecursive, StageTraceOfEightPoints)
{
    RecursionTrace trace;
    fft_recursive(ComplexSignal(std::vector<Complex>(8)), &trace);
    ASSERT_EQ(trace.stages.size(), 4u);
    EXPECT_EQ(trace.stages[0], (std::vector<Index>{1, 2, 3, 4, 5, 6, 7, 8}));
    EXPECT_EQ(trace.stages[1], (std::vector<Index>{1, 3, 5, 7, 2, 4, 6, 8}));
    EXPECT_EQ(trace.stages[2], (std::vector<Index>{1, 5, 3, 7, 2, 6, 4, 8}));
    EXPECT_EQ(trace.stages[3], (std::vector<Index>{1, 5, 3, 7, 2, 6, 4, 8}));
}

TEST(FftRecursive, InnermostStageIsTheBitReversal)
{
    for (unsigned k = 0; k <= 10; ++k) {
        const std::size_t n = std::size_t{1} << k;
        RecursionTrace trace;
        fft_recursive(ComplexSignal(std::vector<Complex>(n)), &trace);
        ASSERT_EQ(trace.stages.size(), k + 1);
        const auto expected = dfp(1, n);
        EXPECT_EQ(trace.stages.back(), digitrev::testing::to_vector(expected)) << "k=" << k;
    }
}

TEST(FftIterative, SmallCases)
{
    expect_close(fft_iterative({1, 1, 1, 1, 1, 1, 1, 1}), {8, 0, 0, 0, 0, 0, 0, 0});
    expect_close(fft_iterative({Complex{0, 1}}), {Complex{0, 1}});
    EXPECT_THROW(fft_iterative({1, 2, 3, 4, 5, 6}), NotAPowerOfRadix);
}

TEST(FftIterative, InputOrderIsDfp)
{
    std::vector<Index> order;
    fft_iterative(ComplexSignal(std::vector<Complex>(8)), &order);
    EXPECT_EQ(order, (std::vector<Index>{0, 4, 2, 6, 1, 5, 3, 7}));
    std::vector<Index> one_based;
    for (Index i : order) {
        one_based.push_back(i + 1);
    }
    EXPECT_EQ(one_based, (std::vector<Index>{1, 5, 3, 7, 2, 6, 4, 8}));
}

TEST(FftIterative, MatchesRecursive)
{
    std::mt19937_64 rng(2);
    for (std::size_t n = 1; n <= 4096; n *= 2) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto x = random_signal(n, rng);
            EXPECT_LE(max_relative_error(fft_iterative(x), fft_recursive(x)), 1e-12) << "n=" << n;
        }
    }
}

TEST(Fft, Linearity)
{
    std::mt19937_64 rng(3);
    const Complex alpha{0.75, -1.25};
    const Complex beta{-2.0, 0.5};
    for (std::size_t n = 1; n <= 1024; n *= 2) {
        const auto x = random_signal(n, rng);
        const auto y = random_signal(n, rng);
        std::vector<Complex> mix(n);
        for (std::size_t i = 0; i < n; ++i) {
            mix[i] = alpha * x[i] + beta * y[i];
        }
        const auto fx = fft_iterative(x);
        const auto fy = fft_iterative(y);
        std::vector<Complex> combined(n);
        for (std::size_t i = 0; i < n; ++i) {
            combined[i] = alpha * fx[i] + beta * fy[i];
        }
        EXPECT_LE(max_relative_error(fft_iterative(ComplexSignal(mix)), ComplexSignal(combined)), 1e-10);
    }
}

TEST(Fft, Parseval)
{
    std::mt19937_64 rng(4);
    for (std::size_t n = 1; n <= 4096; n *= 2) {
        const auto x = random_signal(n, rng);
        const auto big_x = fft_iterative(x);
        double time_energy = 0.0;
        double freq_energy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            time_energy += std::norm(x[i]);
            freq_energy += std::norm(big_x[i]);
        }
        freq_energy /= static_cast<double>(n);
        EXPECT_LE(std::abs(time_energy - freq_energy) / time_energy, 1e-10) << "n=" << n;
    }
}

TEST(ApplyPermutation, Gather)
{
    const ComplexSignal x{1, 2, 3, 4};
    expect_close(apply_permutation(x, dfp(0, 4)), {1, 3, 2, 4});
    expect_close(apply_permutation(apply_permutation(x, dfp(0, 4)), dfp(0, 4)), x);
}

TEST(ApplyPermutation, OneBasedEightPoints)
{
    const ComplexSignal x{10, 20, 30, 40, 50, 60, 70, 80};
    // x[1], x[5], x[3], x[7], x[2], x[6], x[4], x[8] in 1-based terms
    expect_close(apply_permutation(x, dfp(1, 8)), {10, 50, 30, 70, 20, 60, 40, 80});
}

TEST(ApplyPermutation, Errors)
{
    const ComplexSignal x{1, 2, 3, 4};
    EXPECT_THROW(apply_permutation(x, dfp(0, 8)), LengthMismatch);
    EXPECT_THROW(apply_permutation(x, PermutationVector::from_trusted(0, {0, 1, 2, 4})), IndexOutOfRange);
    EXPECT_THROW(apply_permutation(x, PermutationVector::from_trusted(1, {0, 1, 2, 3})), IndexOutOfRange);
}
