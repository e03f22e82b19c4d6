#pragma once

// Deterministic SVG output for scenes. Coordinates are converted from exact
// rationals to fixed-point decimals with integer arithmetic only, so the same
// scene and options always give the same bytes.

#include "geoseries/geometry.hpp"
#include "geoseries/rational.hpp"

#include <cstdint>
#include <string>

namespace geoseries {

struct RenderOptions {
    std::uint32_t canvas_width_px = 600;
    std::string color_fill = "#00ffff";
    std::string stroke_color = "#000000";
    int decimal_places = 6;
    bool show_labels = true;
    bool show_layer_annotations = true;
    /// Stretch layered scenes vertically by 97/56 (close to sqrt(3)) so the
    /// master triangle looks equilateral. Presentation only.
    bool equilateral = true;

    /// Throws std::invalid_argument for out-of-range values.
    void validate() const;
};

/// Fixed-point text with exactly `decimal_places` fractional digits, rounded
/// half away from zero. Negative zero prints without a sign.
std::string format_coordinate(const Rational& q, int decimal_places);

/// Vertical stretch applied to layered scenes when options.equilateral is set.
Rational equilateral_stretch();

std::string render(const Scene& scene, const RenderOptions& options = {});

} // namespace geoseries
