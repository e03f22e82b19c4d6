#pragma once

// Minimal reader for the SVG the renderer writes: enough to check tag
// balance, the viewBox, and polygon coordinates. Decimals are read back as
// exact rationals.

#include "geoseries/rational.hpp"

#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace geoseries::probe {

struct SvgPolygon {
    std::vector<std::pair<Rational, Rational>> points;
    std::string fill;
    std::string role;
};

struct SvgDoc {
    bool well_formed = false;
    Rational view_width;
    Rational view_height;
    std::vector<SvgPolygon> polygons;
    std::size_t text_elements = 0;
};

inline Rational parse_decimal(const std::string& text)
{
    std::string digits;
    BigInt scale = 1;
    bool after_point = false;
    bool negative = false;
    for (char c : text) {
        if (c == '-' && digits.empty() && !negative) {
            negative = true;
        } else if (c == '.' && !after_point) {
            after_point = true;
        } else if (c >= '0' && c <= '9') {
            digits += c;
            if (after_point)
                scale *= 10;
        } else {
            throw std::invalid_argument("bad decimal '" + text + "'");
        }
    }
    if (digits.empty())
        throw std::invalid_argument("bad decimal '" + text + "'");
    const auto first = digits.find_first_not_of('0');
    BigInt value{first == std::string::npos ? std::string("0") : digits.substr(first)};
    return Rational(negative ? BigInt(-value) : value, scale);
}

inline bool tags_balanced(const std::string& svg)
{
    static const std::regex tag(R"re(<(/?)([A-Za-z][\w:.-]*)((?:[^>"]|"[^"]*")*?)(/?)>)re");
    std::vector<std::string> stack;
    std::size_t roots = 0;
    std::string stripped = std::regex_replace(svg, std::regex(R"re(<\?xml[^>]*\?>|<!--[\s\S]*?-->)re"), "");
    for (auto it = std::sregex_iterator(stripped.begin(), stripped.end(), tag); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        const bool closing = m[1].length() > 0;
        const bool self_closing = m[4].length() > 0;
        const std::string name = m[2];
        if (closing) {
            if (stack.empty() || stack.back() != name)
                return false;
            stack.pop_back();
        } else if (!self_closing) {
            if (stack.empty())
                ++roots;
            stack.push_back(name);
        } else if (stack.empty()) {
            return false;
        }
    }
    return stack.empty() && roots == 1 && stripped.find('<') != std::string::npos;
}

inline SvgDoc read_svg(const std::string& svg)
{
    SvgDoc doc;
    doc.well_formed = tags_balanced(svg);

    static const std::regex view_box(R"re(viewBox="0 0 ([0-9.]+) ([0-9.]+)")re");
    std::smatch vb;
    if (std::regex_search(svg, vb, view_box)) {
        doc.view_width = parse_decimal(vb[1]);
        doc.view_height = parse_decimal(vb[2]);
    }

    static const std::regex polygon(R"re(<polygon ([^>]*)/>)re");
    static const std::regex pair(R"re((-?[0-9.]+),(-?[0-9.]+))re");
    auto attribute = [](const std::string& attrs, const std::string& name) {
        const std::regex re(" ?" + name + "=\"([^\"]*)\"");
        std::smatch m;
        return std::regex_search(attrs, m, re) ? std::string(m[1]) : std::string();
    };
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), polygon); it != std::sregex_iterator(); ++it) {
        SvgPolygon poly;
        const std::string attrs = (*it)[1];
        const std::string points = attribute(attrs, "points");
        poly.fill = attribute(attrs, "fill");
        poly.role = attribute(attrs, "data-role");
        for (auto p = std::sregex_iterator(points.begin(), points.end(), pair); p != std::sregex_iterator(); ++p)
            poly.points.emplace_back(parse_decimal((*p)[1]), parse_decimal((*p)[2]));
        doc.polygons.push_back(std::move(poly));
    }

    static const std::regex text_open(R"re(<text[ >])re");
    doc.text_elements = static_cast<std::size_t>(
        std::distance(std::sregex_iterator(svg.begin(), svg.end(), text_open), std::sregex_iterator()));
    return doc;
}

/// Unsigned area of a polygon read from SVG; screen y points down, so take
/// the absolute value.
inline Rational area(const SvgPolygon& poly)
{
    Rational twice;
    for (std::size_t i = 0; i < poly.points.size(); ++i) {
        const auto& [x0, y0] = poly.points[i];
        const auto& [x1, y1] = poly.points[(i + 1) % poly.points.size()];
        twice += x0 * y1 - x1 * y0;
    }
    return abs(twice) / Rational(2);
}

} // namespace geoseries::probe
