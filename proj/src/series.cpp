#include "geoseries/series.hpp"

#include <stdexcept>

namespace geoseries {

SeriesSpec::SeriesSpec(Rational ratio, Rational first_term, bool starts_at_one)
    : ratio_(std::move(ratio)), first_term_(std::move(first_term)), starts_at_one_(starts_at_one)
{
    if (ratio_.sign() <= 0 || ratio_ >= Rational(1))
        throw std::invalid_argument("series ratio " + ratio_.str() + " must lie strictly between 0 and 1");
    if (first_term_.sign() <= 0)
        throw std::invalid_argument("series first term " + first_term_.str() + " must be positive");
}

Rational SeriesSpec::term(std::uint64_t j) const
{
    return first_term_ * pow(ratio_, starts_at_one_ ? j : j + 1);
}

Rational partial_sum_closed(const Rational& x, std::uint64_t N)
{
    if (x == Rational(1))
        throw std::domain_error("closed partial sum is singular at x = 1");
    return (Rational(1) - pow(x, N + 1)) / (Rational(1) - x);
}

Rational partial_sum_naive(const Rational& x, std::uint64_t N)
{
    Rational sum;
    Rational power(1);
    for (std::uint64_t k = 0; k <= N; ++k) {
        sum += power;
        power *= x;
    }
    return sum;
}

Rational closed_limit(const SeriesSpec& spec)
{
    Rational tail = Rational(1) / (Rational(1) - spec.ratio());
    if (!spec.starts_at_one())
        tail *= spec.ratio();
    return spec.first_term() * tail;
}

Rational layer_term(const LayeredParams& p, std::uint64_t k)
{
    return Rational(p.a) * triangle_area(p, k);
}

} // namespace geoseries
