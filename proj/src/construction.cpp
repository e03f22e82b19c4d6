#include "geoseries/construction.hpp"

#include <stdexcept>

namespace geoseries {

namespace {

void require_layer_index(std::uint64_t k)
{
    if (k == 0)
        throw std::invalid_argument("layer index must be >= 1");
}

Rational one_minus_r_squared(const LayeredParams& p)
{
    Rational t = Rational(1) - p.r;
    return t * t;
}

} // namespace

bool LayeredParams::well_shaped() const
{
    return n >= 1 && r.sign() > 0 && r < Rational(1);
}

bool LayeredParams::valid() const
{
    return well_shaped() && a >= 1 && a < n;
}

std::string LayeredParams::str() const
{
    return "(n=" + std::to_string(n) + ", a=" + std::to_string(a) + ", r=" + r.str() + ")";
}

void require_valid(const LayeredParams& p)
{
    if (!p.valid())
        throw std::invalid_argument("invalid layered parameters " + p.str() + ": need 1 <= a < n and 0 < r < 1");
}

void require_well_shaped(const LayeredParams& p)
{
    if (!p.well_shaped() || p.a < 0)
        throw std::invalid_argument("malformed layered parameters " + p.str() + ": need n >= 1, a >= 0, 0 < r < 1");
}

StaircaseParams::StaircaseParams(Rational s) : s_(std::move(s))
{
    if (s_.sign() <= 0 || s_ >= Rational(1))
        throw std::invalid_argument("staircase parameter s=" + s_.str() + " must lie strictly between 0 and 1");
}

Rational layer_area(const LayeredParams& p, std::uint64_t k)
{
    require_well_shaped(p);
    require_layer_index(k);
    Rational shrink = one_minus_r_squared(p);
    return (Rational(1) - shrink) * pow(shrink, k - 1);
}

Rational triangle_area(const LayeredParams& p, std::uint64_t k)
{
    return layer_area(p, k) / Rational(p.n);
}

Rational colored_area_partial(const LayeredParams& p, std::uint64_t layers)
{
    require_well_shaped(p);
    return Rational(BigInt(p.a), BigInt(p.n)) * (Rational(1) - pow(one_minus_r_squared(p), layers));
}

Rational colored_limit(const LayeredParams& p)
{
    require_well_shaped(p);
    return Rational(BigInt(p.a), BigInt(p.n));
}

Rational apex_remainder(const LayeredParams& p, std::uint64_t layers)
{
    require_well_shaped(p);
    return pow(one_minus_r_squared(p), layers);
}

Rational staircase_piece_area(const StaircaseParams& q, std::uint64_t k)
{
    require_layer_index(k);
    return Rational(BigInt(1), BigInt(2)) * pow(q.r(), k - 1);
}

Rational staircase_layer_area(const StaircaseParams& q, std::uint64_t k)
{
    require_layer_index(k);
    return Rational(BigInt(1), BigInt(2)) * (Rational(1) + q.s()) * pow(q.r(), k - 1);
}

Rational staircase_total_area(const StaircaseParams& q)
{
    return Rational(1) / (Rational(2) * (Rational(1) - q.s()));
}

Rational staircase_colored_fraction(const StaircaseParams& q)
{
    return Rational(1) / (Rational(1) + q.s());
}

} // namespace geoseries
