#pragma once

// Exact coordinate realizations of the constructions, and an audit that
// checks shoelace areas of the emitted polygons against the closed-form
// areas in construction.hpp.

#include "geoseries/construction.hpp"
#include "geoseries/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace geoseries {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class Role { colored, blank, outline };

std::string_view to_string(Role role);
/// Throws std::invalid_argument for unknown names.
Role role_from_string(std::string_view name);

struct Polygon {
    std::vector<Point> vertices;
    Role role = Role::blank;
    std::optional<std::uint32_t> layer_index;
    std::optional<std::string> label;

    friend bool operator==(const Polygon&, const Polygon&) = default;
};

/// Signed shoelace area, positive for counterclockwise order.
Rational signed_area(const std::vector<Point>& vertices);

/// Exact positive area. Throws std::invalid_argument for fewer than three
/// vertices or zero signed area.
Rational shoelace_area(const Polygon& polygon);

enum class ConstructionKind { layered, staircase };

std::string_view to_string(ConstructionKind kind);
ConstructionKind construction_from_string(std::string_view name);

enum class LabelKind { point, layer };

struct Label {
    Point at;
    std::string text;
    LabelKind kind = LabelKind::point;

    friend bool operator==(const Label&, const Label&) = default;
};

struct Scene {
    ConstructionKind kind = ConstructionKind::layered;
    std::variant<LayeredParams, StaircaseParams> params = LayeredParams{};
    std::string params_echo;
    std::uint32_t layers_rendered = 0;
    /// Outline first, then tiles grouped by layer in emission order.
    std::vector<Polygon> polygons;
    std::vector<Label> labels;

    std::size_t colored_count() const;

    friend bool operator==(const Scene&, const Scene&) = default;
};

/// Master triangle C(-1,0), B(1,0), A(0,1) of area 1 with `layers` layers of
/// m upward and m-1 downward triangles each. Within a layer the downward
/// triangles come first, left to right, then the upward ones; the first a of
/// them are colored.
///
/// Requires r = 1/m with m >= 2, n = 2m-1, 1 <= a <= n and layers >= 1;
/// throws std::invalid_argument otherwise.
Scene build_layered_scene(const LayeredParams& p, std::uint32_t layers);

/// Triangle A(0,h), B(h,0), C(h-1,0) with h = 1/(1-s). Layer k holds the
/// colored right triangle (R_k, W_{k-1}, W_k) with legs s^(k-1) and the blank
/// triangle (R_k, W_k, R_{k+1}) filling the rest of the strip.
Scene build_staircase_scene(const StaircaseParams& q, std::uint32_t layers);

/// Staircase vertices: W_0 = B, R_k = W_{k-1} - (s^(k-1), 0),
/// W_k = R_k + (0, s^(k-1)). Index 0 of `hypotenuse` is W_0; index 0 of
/// `left_side` is R_1.
struct StaircaseVertices {
    std::vector<Point> hypotenuse; // W_0 .. W_layers, on AB
    std::vector<Point> left_side;  // R_1 .. R_{layers+1}, on AC
};
StaircaseVertices staircase_vertices(const StaircaseParams& q, std::uint32_t layers);

struct LayerTally {
    std::uint32_t layer = 0;
    std::size_t polygon_count = 0;
    std::size_t colored_count = 0;
    Rational colored_area;
    Rational layer_area;
    Rational expected_colored_area;
    Rational expected_layer_area;

    Rational colored_fraction() const { return layer_area.is_zero() ? Rational() : colored_area / layer_area; }

    friend bool operator==(const LayerTally&, const LayerTally&) = default;
};

struct Mismatch {
    std::optional<std::uint32_t> layer;
    std::string formula;
    std::string expected;
    std::string actual;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct AuditReport {
    ConstructionKind kind = ConstructionKind::layered;
    std::string params_echo;
    std::vector<LayerTally> layers;
    Rational total_area;
    Rational tiled_area;
    Rational colored_area;
    Rational remainder;
    Rational expected_remainder;
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }

    friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// Per-layer exact tallies compared against the closed-form areas. Never
/// throws for malformed polygons; every discrepancy becomes a Mismatch.
AuditReport audit_scene(const Scene& scene);

} // namespace geoseries
