#include "geoseries/render_svg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace geoseries {

namespace {

constexpr int margin_px = 40;
constexpr int label_offset_px = 12;

bool is_hex_color(const std::string& s)
{
    if (s.size() != 4 && s.size() != 7)
        return false;
    if (s.front() != '#')
        return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
    });
}

std::string xml_escape(const std::string& text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

// Comments may not contain "--".
std::string comment_safe(std::string text)
{
    for (std::size_t pos = text.find("--"); pos != std::string::npos; pos = text.find("--"))
        text.replace(pos, 2, "- -");
    return text;
}

BigInt ceil_div(const Rational& q)
{
    BigInt whole = q.num() / q.den();
    if (q.sign() > 0 && whole * q.den() != q.num())
        ++whole;
    return whole;
}

int sign_of(const Rational& q)
{
    return q.sign();
}

// World to canvas: scale, shift, and flip y so it grows upward on screen.
class Viewport {
public:
    Viewport(const Scene& scene, const RenderOptions& options)
    {
        if (scene.kind == ConstructionKind::layered && options.equilateral)
            stretch_ = equilateral_stretch();
        const Polygon* outline = nullptr;
        for (const auto& poly : scene.polygons)
            if (poly.role == Role::outline)
                outline = &poly;
        const auto& bound_source = outline ? outline->vertices : scene.polygons.front().vertices;
        min_x_ = max_x_ = bound_source.front().x;
        min_y_ = max_y_ = bound_source.front().y * stretch_;
        for (const auto& poly : scene.polygons) {
            for (const auto& v : poly.vertices) {
                Rational y = v.y * stretch_;
                min_x_ = std::min(min_x_, v.x);
                max_x_ = std::max(max_x_, v.x);
                min_y_ = std::min(min_y_, y);
                max_y_ = std::max(max_y_, y);
            }
        }
        width_ = options.canvas_width_px;
        scale_ = Rational(static_cast<std::int64_t>(width_) - 2 * margin_px) / (max_x_ - min_x_);
        height_ = ceil_div((max_y_ - min_y_) * scale_) + 2 * margin_px;
    }

    Rational x(const Point& p) const { return Rational(margin_px) + (p.x - min_x_) * scale_; }
    Rational y(const Point& p) const
    {
        return Rational(height_, BigInt(1)) - Rational(margin_px) - (p.y * stretch_ - min_y_) * scale_;
    }

    std::uint32_t width() const { return width_; }
    const BigInt& height() const { return height_; }

private:
    Rational stretch_{1};
    Rational min_x_, max_x_, min_y_, max_y_;
    Rational scale_;
    std::uint32_t width_ = 0;
    BigInt height_;
};

std::string points_attr(const Polygon& poly, const Viewport& view, int places)
{
    std::string out;
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        if (i)
            out += ' ';
        out += format_coordinate(view.x(poly.vertices[i]), places);
        out += ',';
        out += format_coordinate(view.y(poly.vertices[i]), places);
    }
    return out;
}

} // namespace

void RenderOptions::validate() const
{
    if (canvas_width_px <= 2 * margin_px)
        throw std::invalid_argument("canvas width must exceed " + std::to_string(2 * margin_px) + " px");
    if (decimal_places < 1 || decimal_places > 12)
        throw std::invalid_argument("decimal places must lie in [1, 12]");
    if (!is_hex_color(color_fill))
        throw std::invalid_argument("fill color '" + color_fill + "' is not a hex color");
    if (!is_hex_color(stroke_color))
        throw std::invalid_argument("stroke color '" + stroke_color + "' is not a hex color");
}

std::string format_coordinate(const Rational& q, int decimal_places)
{
    if (decimal_places < 0)
        throw std::invalid_argument("decimal places must be non-negative");
    BigInt scale = 1;
    for (int i = 0; i < decimal_places; ++i)
        scale *= 10;
    BigInt magnitude = abs(q.num()) * scale;
    BigInt digits = magnitude / q.den();
    BigInt rest = magnitude % q.den();
    if (2 * rest >= q.den())
        ++digits;

    std::string text = digits.str();
    if (text.size() <= static_cast<std::size_t>(decimal_places))
        text.insert(0, static_cast<std::size_t>(decimal_places) + 1 - text.size(), '0');
    if (decimal_places > 0)
        text.insert(text.size() - static_cast<std::size_t>(decimal_places), 1, '.');
    if (q.sign() < 0 && !digits.is_zero())
        text.insert(0, 1, '-');
    return text;
}

Rational equilateral_stretch()
{
    return Rational(BigInt(97), BigInt(56));
}

std::string render(const Scene& scene, const RenderOptions& options)
{
    options.validate();
    if (scene.polygons.empty())
        throw std::invalid_argument("cannot render a scene without polygons");

    const Viewport view(scene, options);
    const int places = options.decimal_places;
    const std::string width = std::to_string(view.width());
    const std::string height = view.height().str();

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<!-- " << xml_escape(comment_safe(scene.params_echo)) << " -->\n";

    svg << "<g id=\"outline\">\n";
    for (const auto& poly : scene.polygons) {
        if (poly.role != Role::outline)
            continue;
        svg << "<polygon points=\"" << points_attr(poly, view, places) << "\" fill=\"none\" stroke=\""
            << options.stroke_color << "\" stroke-width=\"1.5\"/>\n";
    }
    svg << "</g>\n";

    std::vector<const Polygon*> tiles;
    for (const auto& poly : scene.polygons)
        if (poly.role != Role::outline)
            tiles.push_back(&poly);
    std::stable_sort(tiles.begin(), tiles.end(), [](const Polygon* a, const Polygon* b) {
        return a->layer_index.value_or(0) < b->layer_index.value_or(0);
    });

    svg << "<g id=\"tiles\">\n";
    for (const Polygon* poly : tiles) {
        const bool colored = poly->role == Role::colored;
        svg << "<polygon points=\"" << points_attr(*poly, view, places) << "\" fill=\""
            << (colored ? options.color_fill : std::string("none")) << "\" stroke=\"" << options.stroke_color
            << "\" stroke-width=\"0.5\" data-layer=\"" << poly->layer_index.value_or(0) << "\" data-role=\""
            << to_string(poly->role) << "\"/>\n";
    }
    svg << "</g>\n";

    if (options.show_labels || options.show_layer_annotations) {
        Rational cx, cy;
        std::size_t count = 0;
        for (const auto& poly : scene.polygons) {
            if (poly.role != Role::outline)
                continue;
            for (const auto& v : poly.vertices) {
                cx += view.x(v);
                cy += view.y(v);
                ++count;
            }
        }
        if (count) {
            cx /= Rational(static_cast<std::int64_t>(count));
            cy /= Rational(static_cast<std::int64_t>(count));
        }

        svg << "<g id=\"labels\" font-family=\"serif\" font-size=\"14\">\n";
        for (const auto& label : scene.labels) {
            const bool is_point = label.kind == LabelKind::point;
            if ((is_point && !options.show_labels) || (!is_point && !options.show_layer_annotations))
                continue;
            Rational x = view.x(label.at);
            Rational y = view.y(label.at);
            std::string anchor = "start";
            if (is_point) {
                // Push point labels away from the outline centroid.
                int dx = sign_of(x - cx);
                int dy = sign_of(y - cy);
                x += Rational(dx * label_offset_px);
                y += Rational(dy * label_offset_px + (dy >= 0 ? 4 : 0));
                anchor = dx < 0 ? "end" : (dx == 0 ? "middle" : "start");
            } else {
                x += Rational(8);
                y += Rational(4);
            }
            svg << "<text x=\"" << format_coordinate(x, places) << "\" y=\"" << format_coordinate(y, places)
                << "\" text-anchor=\"" << anchor << "\">" << xml_escape(label.text) << "</text>\n";
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace geoseries
