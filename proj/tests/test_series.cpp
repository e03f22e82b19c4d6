#include "geoseries/series.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <stdexcept>

using namespace geoseries;

namespace {
Rational q(std::int64_t p, std::int64_t d)
{
    return Rational(BigInt(p), BigInt(d));
}
} // namespace

TEST_CASE("partial_sum_closed")
{
    CHECK(oracle::direct_sum(q(1, 4), 1) == q(5, 4));
    CHECK(oracle::direct_sum(q(1, 2), 3) == q(15, 8));

    CHECK(partial_sum_closed(q(1, 4), 1) == q(5, 4));
    CHECK(partial_sum_closed(Rational(0), 9) == Rational(1));
    CHECK(partial_sum_closed(q(1, 2), 3) == q(15, 8));
    CHECK(partial_sum_closed(Rational(2), 3) == Rational(15));
    CHECK_THROWS_AS(partial_sum_closed(Rational(1), 3), std::domain_error);
}

TEST_CASE("partial_sum_naive")
{
    CHECK(oracle::direct_sum(q(2, 3), 2) == q(19, 9));

    CHECK(partial_sum_naive(q(1, 4), 1) == q(5, 4));
    CHECK(partial_sum_naive(Rational(1), 4) == Rational(5));
    CHECK(partial_sum_naive(q(2, 3), 2) == q(19, 9));
    CHECK(partial_sum_naive(q(3, 5), 0) == Rational(1));
}

TEST_CASE("closed_limit")
{
    CHECK(closed_limit(SeriesSpec(q(1, 4), 1, true)) == q(4, 3));
    // v + v^2 + ...
    CHECK(closed_limit(SeriesSpec(q(1, 4), 1, false)) == q(1, 3));
    CHECK(closed_limit(SeriesSpec(q(4, 9), 1, false)) == q(4, 5));
    // first_term * (1 + x + ...)
    CHECK(closed_limit(SeriesSpec(q(1, 4), q(1, 4), true)) == q(1, 3));

    CHECK_THROWS_AS(SeriesSpec(Rational(1), 1, true), std::invalid_argument);
    CHECK_THROWS_AS(SeriesSpec(Rational(0), 1, true), std::invalid_argument);
    CHECK_THROWS_AS(SeriesSpec(q(1, 2), 0, true), std::invalid_argument);
    CHECK_THROWS_AS(SeriesSpec(q(1, 2), q(-1, 2), false), std::invalid_argument);
}

TEST_CASE("SeriesSpec terms")
{
    SeriesSpec one(q(1, 3), q(2, 1), true);
    CHECK(one.term(0) == Rational(2));
    CHECK(one.term(2) == q(2, 9));
    SeriesSpec v(q(1, 3), 1, false);
    CHECK(v.term(0) == q(1, 3));
}

TEST_CASE("layer_term")
{
    const LayeredParams mabry{3, 1, q(1, 2)};
    const LayeredParams edgar{5, 4, q(1, 3)};
    CHECK(layer_term(mabry, 1) == q(1, 4));
    CHECK(layer_term(edgar, 1) == q(4, 9));
    CHECK(layer_term(edgar, 2) == q(16, 81));
    CHECK(layer_term(mabry, 3) == pow(q(1, 4), 3));
    CHECK(layer_term(mabry, 3) == q(1, 64));
    CHECK_THROWS_AS(layer_term(mabry, 0), std::invalid_argument);
}

TEST_CASE("closed and naive partial sums agree on random inputs")
{
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint64_t> terms(0, 64);
    int checked = 0;
    while (checked < 200) {
        Rational x = oracle::random_rational(rng, 40, 40);
        if (x == Rational(1))
            continue;
        std::uint64_t N = terms(rng);
        CHECK(partial_sum_closed(x, N) == partial_sum_naive(x, N));
        ++checked;
    }
}

TEST_CASE("layer terms shrink by (1-r)^2 and telescope")
{
    const std::vector<LayeredParams> params{{3, 1, q(1, 2)}, {5, 4, q(1, 3)}, {7, 3, q(1, 5)}, {11, 2, q(2, 7)}};
    for (const auto& p : params) {
        const Rational shrink = (Rational(1) - p.r) * (Rational(1) - p.r);
        Rational sum;
        for (std::uint64_t k = 1; k <= 30; ++k) {
            CHECK(layer_term(p, k + 1) / layer_term(p, k) == shrink);
            sum += layer_term(p, k);
            CHECK(sum == q(p.a, p.n) * (Rational(1) - pow(shrink, k)));
        }
    }
}
