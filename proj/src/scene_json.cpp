#include "geoseries/scene_json.hpp"

#include <stdexcept>

namespace geoseries {

using nlohmann::json;

namespace {

json point_json(const Point& p)
{
    return json::array({p.x.str(), p.y.str()});
}

Point point_from(const json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw std::invalid_argument("point must be a pair of \"p/q\" strings");
    return Point{Rational::parse(j[0].get<std::string>()), Rational::parse(j[1].get<std::string>())};
}

const json& field(const json& j, const char* name)
{
    auto it = j.find(name);
    if (it == j.end())
        throw std::invalid_argument(std::string("scene JSON is missing '") + name + "'");
    return *it;
}

template <class T>
T get_as(const json& j, const char* name)
{
    try {
        return field(j, name).get<T>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("scene JSON field '") + name + "': " + e.what());
    }
}

json params_json(const Scene& scene)
{
    if (const auto* p = std::get_if<LayeredParams>(&scene.params))
        return json{{"n", p->n}, {"a", p->a}, {"r", p->r.str()}};
    const auto& q = std::get<StaircaseParams>(scene.params);
    return json{{"s", q.s().str()}, {"r", q.r().str()}};
}

} // namespace

json scene_to_json(const Scene& scene)
{
    json polygons = json::array();
    for (const auto& poly : scene.polygons) {
        json vertices = json::array();
        for (const auto& v : poly.vertices)
            vertices.push_back(point_json(v));
        json entry{{"role", to_string(poly.role)}, {"vertices", std::move(vertices)}};
        entry["layer_index"] = poly.layer_index ? json(*poly.layer_index) : json(nullptr);
        if (poly.label)
            entry["label"] = *poly.label;
        polygons.push_back(std::move(entry));
    }
    json labels = json::array();
    for (const auto& label : scene.labels) {
        labels.push_back(json{{"at", point_json(label.at)},
                              {"text", label.text},
                              {"kind", label.kind == LabelKind::point ? "point" : "layer"}});
    }
    return json{{"schema", json_schema_version},
                {"construction_kind", to_string(scene.kind)},
                {"params", params_json(scene)},
                {"params_echo", scene.params_echo},
                {"layers", scene.layers_rendered},
                {"polygons", std::move(polygons)},
                {"labels", std::move(labels)}};
}

Scene scene_from_json(const json& doc)
{
    if (!doc.is_object())
        throw std::invalid_argument("scene JSON must be an object");
    if (get_as<int>(doc, "schema") != json_schema_version)
        throw std::invalid_argument("unsupported scene schema version");

    Scene scene;
    scene.kind = construction_from_string(get_as<std::string>(doc, "construction_kind"));
    const json& params = field(doc, "params");
    if (scene.kind == ConstructionKind::layered) {
        scene.params = LayeredParams{get_as<std::int64_t>(params, "n"), get_as<std::int64_t>(params, "a"),
                                     Rational::parse(get_as<std::string>(params, "r"))};
    } else {
        scene.params = StaircaseParams(Rational::parse(get_as<std::string>(params, "s")));
    }
    scene.params_echo = get_as<std::string>(doc, "params_echo");
    scene.layers_rendered = get_as<std::uint32_t>(doc, "layers");

    for (const json& entry : field(doc, "polygons")) {
        Polygon poly;
        poly.role = role_from_string(get_as<std::string>(entry, "role"));
        for (const json& v : field(entry, "vertices"))
            poly.vertices.push_back(point_from(v));
        const json& layer = field(entry, "layer_index");
        if (!layer.is_null())
            poly.layer_index = get_as<std::uint32_t>(entry, "layer_index");
        if (entry.contains("label"))
            poly.label = get_as<std::string>(entry, "label");
        scene.polygons.push_back(std::move(poly));
    }
    for (const json& entry : field(doc, "labels")) {
        Label label;
        label.at = point_from(field(entry, "at"));
        label.text = get_as<std::string>(entry, "text");
        label.kind = get_as<std::string>(entry, "kind") == "layer" ? LabelKind::layer : LabelKind::point;
        scene.labels.push_back(std::move(label));
    }
    return scene;
}

json audit_to_json(const AuditReport& report)
{
    json layers = json::array();
    for (const auto& t : report.layers) {
        layers.push_back(json{{"layer", t.layer},
                              {"polygons", t.polygon_count},
                              {"colored", t.colored_count},
                              {"colored_area", t.colored_area.str()},
                              {"layer_area", t.layer_area.str()},
                              {"colored_fraction", t.colored_fraction().str()},
                              {"expected_colored_area", t.expected_colored_area.str()},
                              {"expected_layer_area", t.expected_layer_area.str()}});
    }
    json mismatches = json::array();
    for (const auto& m : report.mismatches) {
        mismatches.push_back(json{{"layer", m.layer ? json(*m.layer) : json(nullptr)},
                                  {"formula", m.formula},
                                  {"expected", m.expected},
                                  {"actual", m.actual}});
    }
    return json{{"construction_kind", to_string(report.kind)},
                {"params_echo", report.params_echo},
                {"layers", std::move(layers)},
                {"total_area", report.total_area.str()},
                {"tiled_area", report.tiled_area.str()},
                {"colored_area", report.colored_area.str()},
                {"remainder", report.remainder.str()},
                {"expected_remainder", report.expected_remainder.str()},
                {"mismatches", std::move(mismatches)},
                {"check", report.ok() ? "pass" : "fail"}};
}

} // namespace geoseries
