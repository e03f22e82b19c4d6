#pragma once

// Analytic model of the two area-accounting constructions.
//
// Layered triangle: a master triangle of area 1 is cut into horizontal
// layers. Layer k lies between the apex-similar sub-triangles of scale
// (1-r)^(k-1) and (1-r)^k and holds n congruent small triangles, a of which
// are colored. Layers are counted from the base upward.
//
// Staircase: right triangles with legs s^(k-1) descend along the
// hypotenuse of a triangle with base 1 and height 1/(1-s). Areas here are
// absolute, not normalized to 1.

#include "geoseries/rational.hpp"

#include <cstdint>
#include <string>

namespace geoseries {

/// Triangles per layer (n), colored triangles per layer (a), and the ratio of
/// a layer's height to the distance from the apex to its base (r).
///
/// This is a plain value: valid() checks the full invariant 1 <= a < n,
/// 0 < r < 1. Area formulas only need the shape part (n >= 1, 0 < r < 1),
/// which lets them run on derived configurations with a >= n.
struct LayeredParams {
    std::int64_t n = 0;
    std::int64_t a = 0;
    Rational r;

    bool valid() const;
    bool well_shaped() const;
    std::string str() const;

    friend bool operator==(const LayeredParams&, const LayeredParams&) = default;
};

/// Throws std::invalid_argument unless p.valid().
void require_valid(const LayeredParams& p);
/// Throws std::invalid_argument unless p.well_shaped() and a >= 0.
void require_well_shaped(const LayeredParams& p);

/// Staircase parameter s, the square root of the series ratio r = s^2.
class StaircaseParams {
public:
    /// Throws std::invalid_argument unless 0 < s < 1.
    explicit StaircaseParams(Rational s);

    const Rational& s() const noexcept { return s_; }
    Rational r() const { return s_ * s_; }

    friend bool operator==(const StaircaseParams&, const StaircaseParams&) = default;

private:
    Rational s_;
};

// Layered family. k is 1-based.
Rational layer_area(const LayeredParams& p, std::uint64_t k);
Rational triangle_area(const LayeredParams& p, std::uint64_t k);
/// Colored area of layers 1..layers, (a/n)(1 - (1-r)^(2*layers)).
Rational colored_area_partial(const LayeredParams& p, std::uint64_t layers);
/// a/n: every layer is a/n colored, hence so is the whole triangle.
Rational colored_limit(const LayeredParams& p);
/// Area of the apex triangle left above `layers` layers, (1-r)^(2*layers).
Rational apex_remainder(const LayeredParams& p, std::uint64_t layers);

// Staircase. k is 1-based.
Rational staircase_piece_area(const StaircaseParams& q, std::uint64_t k);
Rational staircase_layer_area(const StaircaseParams& q, std::uint64_t k);
Rational staircase_total_area(const StaircaseParams& q);
/// Colored fraction of every staircase layer, 1/(1+s).
Rational staircase_colored_fraction(const StaircaseParams& q);

} // namespace geoseries
