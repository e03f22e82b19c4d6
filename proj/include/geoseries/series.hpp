#pragma once

// Geometric series: partial sums, limits, and the per-layer colored terms of
// the layered-triangle construction.

#include "geoseries/construction.hpp"
#include "geoseries/rational.hpp"

#include <cstdint>

namespace geoseries {

/// A geometric series with ratio in (0, 1).
///
/// starts_at_one == true models first_term * (1 + ratio + ratio^2 + ...);
/// starts_at_one == false models first_term * (ratio + ratio^2 + ...), so the
/// plain v + v^2 + ... form is {v, 1, false}.
class SeriesSpec {
public:
    /// Throws std::invalid_argument unless 0 < ratio < 1 and first_term > 0.
    SeriesSpec(Rational ratio, Rational first_term, bool starts_at_one);

    const Rational& ratio() const noexcept { return ratio_; }
    const Rational& first_term() const noexcept { return first_term_; }
    bool starts_at_one() const noexcept { return starts_at_one_; }

    /// Value of the term with 0-based index j.
    Rational term(std::uint64_t j) const;

private:
    Rational ratio_;
    Rational first_term_;
    bool starts_at_one_;
};

/// 1 + x + ... + x^N via (1 - x^(N+1)) / (1 - x).
/// Throws std::domain_error when x == 1.
Rational partial_sum_closed(const Rational& x, std::uint64_t N);

/// 1 + x + ... + x^N by term-by-term accumulation. Independent of the closed
/// form and defined for every x.
Rational partial_sum_naive(const Rational& x, std::uint64_t N);

Rational closed_limit(const SeriesSpec& spec);

/// Colored area contributed by layer k: a * triangle_area(p, k).
Rational layer_term(const LayeredParams& p, std::uint64_t k);

} // namespace geoseries
