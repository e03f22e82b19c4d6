#include "geoseries/geometry.hpp"

#include <map>
#include <stdexcept>

namespace geoseries {

namespace {

const Rational half(BigInt(1), BigInt(2));

Polygon triangle(Point p0, Point p1, Point p2, Role role, std::uint32_t layer)
{
    Polygon poly;
    poly.vertices = {std::move(p0), std::move(p1), std::move(p2)};
    poly.role = role;
    poly.layer_index = layer;
    return poly;
}

std::string layer_text(std::uint32_t k)
{
    return "layer " + std::to_string(k);
}

// Only the first few layers get an annotation; deeper ones are too thin.
constexpr std::uint32_t annotated_layers = 3;

} // namespace

std::string_view to_string(Role role)
{
    switch (role) {
    case Role::colored: return "colored";
    case Role::blank: return "blank";
    case Role::outline: return "outline";
    }
    return "blank";
}

Role role_from_string(std::string_view name)
{
    if (name == "colored")
        return Role::colored;
    if (name == "blank")
        return Role::blank;
    if (name == "outline")
        return Role::outline;
    throw std::invalid_argument("unknown polygon role '" + std::string(name) + "'");
}

std::string_view to_string(ConstructionKind kind)
{
    return kind == ConstructionKind::layered ? "layered" : "staircase";
}

ConstructionKind construction_from_string(std::string_view name)
{
    if (name == "layered")
        return ConstructionKind::layered;
    if (name == "staircase")
        return ConstructionKind::staircase;
    throw std::invalid_argument("unknown construction '" + std::string(name) + "'");
}

Rational signed_area(const std::vector<Point>& vertices)
{
    Rational twice;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % vertices.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return twice * half;
}

Rational shoelace_area(const Polygon& polygon)
{
    if (polygon.vertices.size() < 3)
        throw std::invalid_argument("polygon needs at least three vertices");
    Rational area = signed_area(polygon.vertices);
    if (area.is_zero())
        throw std::invalid_argument("degenerate polygon with zero area");
    return abs(area);
}

std::size_t Scene::colored_count() const
{
    std::size_t count = 0;
    for (const auto& poly : polygons)
        count += poly.role == Role::colored;
    return count;
}

Scene build_layered_scene(const LayeredParams& p, std::uint32_t layers)
{
    if (layers == 0)
        throw std::invalid_argument("layered scene needs at least one layer");
    if (!p.well_shaped() || p.r.num() != 1)
        throw std::invalid_argument("layered scene needs r = 1/m with m >= 2 for an integral tessellation, got r=" +
                                    p.r.str());
    const std::int64_t m = p.r.den().convert_to<std::int64_t>();
    if (p.n != 2 * m - 1)
        throw std::invalid_argument("layered scene with r=" + p.r.str() + " needs n=" + std::to_string(2 * m - 1) +
                                    ", got n=" + std::to_string(p.n));
    if (p.a < 1 || p.a > p.n)
        throw std::invalid_argument("layered scene needs 1 <= a <= n, got " + p.str());

    Scene scene;
    scene.kind = ConstructionKind::layered;
    scene.params = p;
    scene.params_echo = "layered m=" + std::to_string(m) + " n=" + std::to_string(p.n) + " a=" +
                        std::to_string(p.a) + " r=" + p.r.str() + " layers=" + std::to_string(layers);
    scene.layers_rendered = layers;

    const Point apex{0, 1};
    const Point left{-1, 0};
    const Point right{1, 0};
    scene.polygons.push_back(Polygon{{left, right, apex}, Role::outline, std::nullopt, std::nullopt});

    const Rational shrink = Rational(1) - p.r;
    Rational scale(1); // (1-r)^(k-1)
    for (std::uint32_t k = 1; k <= layers; ++k) {
        const Rational width = Rational(2) * scale / Rational(m);
        const Rational y0 = Rational(1) - scale;
        const Rational y1 = y0 + p.r * scale;
        const Rational x0 = -scale;
        auto at = [&](const Rational& steps) { return x0 + steps * width; };

        std::int64_t colored_left = p.a;
        auto next_role = [&] { return colored_left-- > 0 ? Role::colored : Role::blank; };
        for (std::int64_t i = 0; i + 1 < m; ++i) {
            Rational base(i);
            scene.polygons.push_back(triangle({at(base + 1), y0}, {at(base + Rational(3) * half), y1},
                                              {at(base + half), y1}, next_role(), k));
        }
        for (std::int64_t i = 0; i < m; ++i) {
            Rational base(i);
            scene.polygons.push_back(
                triangle({at(base), y0}, {at(base + 1), y0}, {at(base + half), y1}, next_role(), k));
        }
        if (k <= annotated_layers) {
            Point mid{(scale + scale * shrink) * half, (y0 + y1) * half};
            scene.labels.push_back(Label{std::move(mid), layer_text(k), LabelKind::layer});
        }
        scale *= shrink;
    }

    scene.labels.push_back(Label{apex, "A", LabelKind::point});
    scene.labels.push_back(Label{right, "B", LabelKind::point});
    scene.labels.push_back(Label{left, "C", LabelKind::point});
    scene.labels.push_back(Label{{shrink, p.r}, "D", LabelKind::point});
    scene.labels.push_back(Label{{-shrink, p.r}, "E", LabelKind::point});
    return scene;
}

StaircaseVertices staircase_vertices(const StaircaseParams& q, std::uint32_t layers)
{
    const Rational height = Rational(1) / (Rational(1) - q.s());
    StaircaseVertices v;
    v.hypotenuse.push_back(Point{height, 0});
    Rational leg(1); // s^(k-1)
    for (std::uint32_t k = 1; k <= layers + 1; ++k) {
        const Point& w_prev = v.hypotenuse.back();
        Point r_k{w_prev.x - leg, w_prev.y};
        v.left_side.push_back(r_k);
        if (k <= layers)
            v.hypotenuse.push_back(Point{r_k.x, r_k.y + leg});
        leg *= q.s();
    }
    return v;
}

Scene build_staircase_scene(const StaircaseParams& q, std::uint32_t layers)
{
    if (layers == 0)
        throw std::invalid_argument("staircase scene needs at least one layer");

    Scene scene;
    scene.kind = ConstructionKind::staircase;
    scene.params = q;
    scene.params_echo = "staircase s=" + q.s().str() + " r=" + q.r().str() + " layers=" + std::to_string(layers);
    scene.layers_rendered = layers;

    const Rational height = Rational(1) / (Rational(1) - q.s());
    const Point apex{0, height};
    const Point right{height, 0};
    const Point corner{height - 1, 0};
    scene.polygons.push_back(Polygon{{corner, right, apex}, Role::outline, std::nullopt, std::nullopt});

    const StaircaseVertices v = staircase_vertices(q, layers);
    for (std::uint32_t k = 1; k <= layers; ++k) {
        const Point& r_k = v.left_side[k - 1];
        const Point& r_next = v.left_side[k];
        const Point& w_prev = v.hypotenuse[k - 1];
        const Point& w_k = v.hypotenuse[k];
        scene.polygons.push_back(triangle(r_k, w_prev, w_k, Role::colored, k));
        scene.polygons.push_back(triangle(r_k, w_k, r_next, Role::blank, k));
        if (k <= annotated_layers) {
            Point mid{(w_prev.x + w_k.x) * half, (w_prev.y + w_k.y) * half};
            scene.labels.push_back(Label{std::move(mid), layer_text(k), LabelKind::layer});
        }
    }

    scene.labels.push_back(Label{apex, "A", LabelKind::point});
    scene.labels.push_back(Label{right, "B", LabelKind::point});
    scene.labels.push_back(Label{corner, "C", LabelKind::point});
    return scene;
}

namespace {

struct Expected {
    Rational total;
    Rational remainder;
    std::size_t per_layer_polygons;
    std::size_t per_layer_colored;
};

void expect(AuditReport& report, std::optional<std::uint32_t> layer, std::string formula, const Rational& expected,
            const Rational& actual)
{
    if (expected != actual)
        report.mismatches.push_back(Mismatch{layer, std::move(formula), expected.str(), actual.str()});
}

void expect_count(AuditReport& report, std::uint32_t layer, std::string formula, std::size_t expected,
                  std::size_t actual)
{
    if (expected != actual)
        report.mismatches.push_back(
            Mismatch{layer, std::move(formula), std::to_string(expected), std::to_string(actual)});
}

} // namespace

AuditReport audit_scene(const Scene& scene)
{
    AuditReport report;
    report.kind = scene.kind;
    report.params_echo = scene.params_echo;

    const auto* layered = std::get_if<LayeredParams>(&scene.params);
    const auto* staircase = std::get_if<StaircaseParams>(&scene.params);
    if ((scene.kind == ConstructionKind::layered) != (layered != nullptr)) {
        report.mismatches.push_back(Mismatch{std::nullopt, "construction kind", std::string(to_string(scene.kind)),
                                             layered ? "layered params" : "staircase params"});
        return report;
    }
    if (layered && !layered->well_shaped()) {
        report.mismatches.push_back(Mismatch{std::nullopt, "params", "n >= 1, 0 < r < 1", layered->str()});
        return report;
    }

    Expected expected;
    const std::uint32_t layers = scene.layers_rendered;
    if (layered) {
        expected.total = 1;
        expected.remainder = apex_remainder(*layered, layers);
        expected.per_layer_polygons = static_cast<std::size_t>(layered->n);
        expected.per_layer_colored = static_cast<std::size_t>(layered->a);
    } else {
        expected.total = staircase_total_area(*staircase);
        expected.remainder = expected.total * pow(staircase->r(), layers);
        expected.per_layer_polygons = 2;
        expected.per_layer_colored = 1;
    }

    std::map<std::uint32_t, LayerTally> tallies;
    for (std::uint32_t k = 1; k <= layers; ++k)
        tallies[k].layer = k;

    std::size_t outlines = 0;
    for (std::size_t i = 0; i < scene.polygons.size(); ++i) {
        const Polygon& poly = scene.polygons[i];
        const std::string where = "polygon " + std::to_string(i);
        const Rational area = poly.vertices.size() >= 3 ? signed_area(poly.vertices) : Rational();
        if (area.sign() <= 0) {
            report.mismatches.push_back(Mismatch{poly.layer_index, "orientation", "positive signed area for " + where,
                                                 area.str()});
        }
        if (poly.role == Role::outline) {
            ++outlines;
            report.total_area = area;
            continue;
        }
        if (!poly.layer_index || *poly.layer_index == 0 || *poly.layer_index > layers) {
            report.mismatches.push_back(Mismatch{poly.layer_index, "layer index", "1.." + std::to_string(layers),
                                                 poly.layer_index ? std::to_string(*poly.layer_index) : "none"});
            continue;
        }
        const std::uint32_t k = *poly.layer_index;
        LayerTally& tally = tallies[k];
        ++tally.polygon_count;
        tally.layer_area += area;
        if (poly.role == Role::colored) {
            ++tally.colored_count;
            tally.colored_area += area;
        }
        if (layered)
            expect(report, k, "triangle_area (" + where + ")", triangle_area(*layered, k), area);
        else if (poly.role == Role::colored)
            expect(report, k, "staircase_piece_area (" + where + ")", staircase_piece_area(*staircase, k), area);
    }
    if (outlines != 1)
        report.mismatches.push_back(Mismatch{std::nullopt, "outline count", "1", std::to_string(outlines)});

    for (auto& [k, tally] : tallies) {
        if (layered) {
            tally.expected_layer_area = layer_area(*layered, k);
            tally.expected_colored_area = Rational(layered->a) * triangle_area(*layered, k);
        } else {
            tally.expected_layer_area = staircase_layer_area(*staircase, k);
            tally.expected_colored_area = staircase_piece_area(*staircase, k);
        }
        expect_count(report, k, layered ? "n" : "polygons per layer", expected.per_layer_polygons,
                     tally.polygon_count);
        expect_count(report, k, layered ? "a" : "colored per layer", expected.per_layer_colored,
                     tally.colored_count);
        expect(report, k, layered ? "layer_area" : "staircase_layer_area", tally.expected_layer_area,
               tally.layer_area);
        expect(report, k, layered ? "layer_term" : "staircase_piece_area", tally.expected_colored_area,
               tally.colored_area);
        if (staircase)
            expect(report, k, "colored fraction 1/(1+s)", staircase_colored_fraction(*staircase),
                   tally.colored_fraction());
        report.tiled_area += tally.layer_area;
        report.colored_area += tally.colored_area;
        report.layers.push_back(tally);
    }

    expect(report, std::nullopt, "total area", expected.total, report.total_area);
    report.remainder = report.total_area - report.tiled_area;
    report.expected_remainder = expected.remainder;
    expect(report, std::nullopt, layered ? "apex remainder (1-r)^(2L)" : "apex remainder s^(2L)/(2(1-s))",
           expected.remainder, report.remainder);
    if (layered)
        expect(report, std::nullopt, "colored_area_partial", colored_area_partial(*layered, layers),
               report.colored_area);
    return report;
}

} // namespace geoseries
