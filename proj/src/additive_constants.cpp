#include "digitrev/additive_constants.hpp"

#include "digitrev/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace digitrev {

AdditiveConstants::AdditiveConstants(std::uint64_t length_n, std::vector<Index> constants)
    : length_n_(length_n), exponent_(detail::require_power_of_two(length_n)),
      constants_(std::move(constants))
{
    if (exponent_ < 1) {
        throw NotAPowerOfRadix("additive constants need N = 2^k with k >= 1");
    }
    if (constants_.size() != length_n_ - 1) {
        throw LengthMismatch("expected " + std::to_string(length_n_ - 1) + " constants, got " +
                             std::to_string(constants_.size()));
    }
}

AdditiveConstants mk_capf(std::uint64_t n)
{
    const unsigned k = detail::require_power_of_two(n);
    if (k < 1) {
        throw NotAPowerOfRadix("additive constants need N = 2^k with k >= 1");
    }
    if (k == 1) {
        return {n, {1}};
    }
    if (k == 2) {
        return {n, {2, -1, 2}};
    }

    // Non-trivial constants of the first half, minor constant last.
    std::vector<Index> head{-2, -5};
    head.reserve(n / 2);
    for (unsigned p = 4; p <= k; ++p) {
        for (Index& v : head) {
            v *= 2;
        }
        const std::size_t c = head.size();
        head.insert(head.end(), head.begin(), head.begin() + static_cast<std::ptrdiff_t>(c - 1));
        head.push_back(head[c - 1] - 3);
    }
    // Mirror about the minor constant.
    const std::size_t c = head.size();
    head.insert(head.end(), head.begin(), head.begin() + static_cast<std::ptrdiff_t>(c - 1));

    std::vector<Index> constants(n - 1, static_cast<Index>(n / 2));
    for (std::size_t i = 0; i < head.size(); ++i) {
        constants[2 * i + 1] = head[i];
    }
    return {n, std::move(constants)};
}

PermutationVector mk_fperm(std::uint64_t n)
{
    const AdditiveConstants c = mk_capf(n);
    std::vector<Index> v(n);
    v[0] = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        v[p + 1] = v[p] + c.constants()[p];
    }
    return PermutationVector::from_trusted(1, std::move(v));
}

bool all_passed(const Verdicts& verdicts) noexcept
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const ClauseVerdict& v) { return v.passed; });
}

namespace {

void require_proposition_domain(const AdditiveConstants& c)
{
    if (c.exponent() < 2) {
        throw InvalidArgument("proposition checks require N >= 4, got N = " + std::to_string(c.length_n()));
    }
}

ClauseVerdict fail_at(std::string clause, std::size_t rank, std::string detail)
{
    return {std::move(clause), false, false, rank, std::move(detail)};
}

ClauseVerdict pass(std::string clause, std::string detail = {})
{
    return {std::move(clause), true, false, 0, std::move(detail)};
}

std::string rank_str(std::size_t rank, Index value)
{
    return "C(" + std::to_string(rank) + ") = " + std::to_string(value);
}

} // namespace

Verdicts check_proposition1(const AdditiveConstants& c)
{
    require_proposition_domain(c);
    const std::size_t n = c.length_n();
    const std::size_t half = n / 2;
    const Index trivial = c.trivial_constant();
    Verdicts out;

    // i. every odd rank holds N/2
    {
        ClauseVerdict v = pass("i");
        for (std::size_t p = 1; p <= half; ++p) {
            const std::size_t rank = 2 * p - 1;
            if (c.at_rank(rank) != trivial) {
                v = fail_at("i", rank, rank_str(rank, c.at_rank(rank)) + ", expected " + std::to_string(trivial));
                break;
            }
        }
        out.push_back(std::move(v));
    }

    // ii. every even rank is negative; rank 2p = N lies past the end and is skipped
    {
        ClauseVerdict v = pass("ii", "ranks 2..N-2");
        for (std::size_t rank = 2; rank <= n - 1; rank += 2) {
            if (c.at_rank(rank) >= 0) {
                v = fail_at("ii", rank, rank_str(rank, c.at_rank(rank)) + " is not negative");
                break;
            }
        }
        out.push_back(std::move(v));
    }

    // iii. halves on either side of rank N/2 are equal
    {
        ClauseVerdict v = pass("iii");
        for (std::size_t rank = 1; rank < half; ++rank) {
            if (c.at_rank(rank) != c.at_rank(half + rank)) {
                v = fail_at("iii", half + rank,
                            rank_str(rank, c.at_rank(rank)) + " vs " + rank_str(half + rank, c.at_rank(half + rank)));
                break;
            }
        }
        out.push_back(std::move(v));
    }

    // iv. minor constant is -N+3
    {
        const Index expected = -static_cast<Index>(n) + 3;
        out.push_back(c.minor_constant() == expected
                          ? pass("iv")
                          : fail_at("iv", half, rank_str(half, c.minor_constant()) + ", expected " +
                                                    std::to_string(expected)));
    }

    // v. non-trivial constants other than the minor one are even
    {
        ClauseVerdict v = pass("v");
        std::size_t checked = 0;
        for (std::size_t p = 1; p + 1 <= half; ++p) {
            const std::size_t rank = 2 * p;
            if (rank == half) {
                continue;
            }
            ++checked;
            if (c.at_rank(rank) % 2 != 0) {
                v = fail_at("v", rank, rank_str(rank, c.at_rank(rank)) + " is odd");
                break;
            }
        }
        if (v.passed && checked == 0) {
            v.vacuous = true;
            v.detail = "only the minor constant is in range";
        }
        out.push_back(std::move(v));
    }

    // vi. mirror symmetry about rank N/2
    {
        ClauseVerdict v = pass("vi");
        for (std::size_t p = 1; p < half; ++p) {
            if (c.at_rank(n - p) != c.at_rank(p)) {
                v = fail_at("vi", n - p, rank_str(n - p, c.at_rank(n - p)) + " vs " + rank_str(p, c.at_rank(p)));
                break;
            }
        }
        out.push_back(std::move(v));
    }

    // vii, viii. compare against the constants of the next size up
    const AdditiveConstants next = mk_capf(2 * n);
    {
        ClauseVerdict v = pass("vii");
        for (std::size_t rank = 1; rank < n; ++rank) {
            const Index doubled = 2 * c.at_rank(rank);
            if (next.at_rank(rank) != doubled) {
                v = fail_at("vii", rank, "C_2N" + rank_str(rank, next.at_rank(rank)).substr(1) + " vs 2*" +
                                             rank_str(rank, c.at_rank(rank)));
                break;
            }
            if (next.at_rank(n + rank) != doubled) {
                v = fail_at("vii", n + rank,
                            "C_2N" + rank_str(n + rank, next.at_rank(n + rank)).substr(1) + " vs 2*" +
                                rank_str(rank, c.at_rank(rank)));
                break;
            }
        }
        out.push_back(std::move(v));
    }
    {
        const Index expected = 2 * c.minor_constant() - 3;
        out.push_back(next.minor_constant() == expected
                          ? pass("viii", "C_2N(N) = 2*C_N(N/2) - 3")
                          : fail_at("viii", n, "C_2N(N) = " + std::to_string(next.minor_constant()) +
                                                   ", expected " + std::to_string(expected)));
    }
    return out;
}

Index sum_even_rank_constants(const AdditiveConstants& c) noexcept
{
    Index sum = 0;
    for (std::size_t rank = 2; rank < c.length_n(); rank += 2) {
        sum += c.at_rank(rank);
    }
    return sum;
}

Index sum_odd_rank_constants(const AdditiveConstants& c) noexcept
{
    Index sum = 0;
    for (std::size_t rank = 1; rank < c.length_n(); rank += 2) {
        sum += c.at_rank(rank);
    }
    return sum;
}

Verdicts check_proposition2(const AdditiveConstants& c)
{
    require_proposition_domain(c);
    const std::size_t n = c.length_n();
    const std::size_t half = n / 2;
    const auto constants = c.constants();
    Verdicts out;

    auto expect_sum = [&out](std::string clause, Index got, Index expected, std::size_t rank) {
        if (got == expected) {
            out.push_back(pass(std::move(clause), "sum = " + std::to_string(got)));
        } else {
            out.push_back(fail_at(std::move(clause), rank,
                                  "sum = " + std::to_string(got) + ", expected " + std::to_string(expected)));
        }
    };

    Index total = 0;
    for (Index v : constants) {
        total += v;
    }
    expect_sum("i", total, static_cast<Index>(n) - 1, 0);

    const Index m = static_cast<Index>(half) - 1;
    expect_sum("ii", sum_even_rank_constants(c), -(m * m), 0);
    out.back().detail += " (even ranks; odd-rank sum = " + std::to_string(sum_odd_rank_constants(c)) + ")";

    // iii and iv share the sliding window of length N/2.
    Index window = 0;
    for (std::size_t i = 0; i < half; ++i) {
        window += constants[i];
    }
    expect_sum("iii", window, 1, 0);

    ClauseVerdict iv = pass("iv", std::to_string(half) + " windows");
    for (std::size_t p = 1; p <= half; ++p) {
        if (p > 1) {
            window += constants[p + half - 2] - constants[p - 2];
        }
        if (window != 1) {
            iv = fail_at("iv", p, "window starting at rank " + std::to_string(p) + " sums to " + std::to_string(window));
            break;
        }
    }
    out.push_back(std::move(iv));
    return out;
}

} // namespace digitrev
