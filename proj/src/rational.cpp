#include "geoseries/rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace geoseries {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BigInt parse_integer(std::string_view s, bool allow_sign, std::string_view whole)
{
    bool negative = false;
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    // cpp_int reads a leading 0 as an octal prefix.
    const auto first = s.find_first_not_of('0');
    s = first == std::string_view::npos ? std::string_view("0") : s.substr(first);
    BigInt value{std::string(s)};
    return negative ? BigInt(-value) : value;
}

} // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw std::domain_error("rational with zero denominator");
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, true, text), BigInt(1));
    BigInt num = parse_integer(text.substr(0, slash), true, text);
    BigInt den = parse_integer(text.substr(slash + 1), false, text);
    if (den.is_zero())
        throw std::invalid_argument("malformed rational '" + std::string(text) + "': denominator must be positive");
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const
{
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const
{
    return Rational(BigInt(-num_), den_, Canonical{});
}

Rational& Rational::operator+=(const Rational& rhs)
{
    *this = Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    *this = Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    *this = Rational(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("rational division by zero");
    *this = Rational(num_ * rhs.den_, den_ * rhs.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    int c = lhs.compare(rhs);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational normalize(BigInt num, BigInt den)
{
    return Rational(std::move(num), std::move(den));
}

Ordering compare(const Rational& a, const Rational& b)
{
    auto c = a <=> b;
    if (c < 0)
        return Ordering::less;
    if (c > 0)
        return Ordering::greater;
    return Ordering::equal;
}

Rational pow(const Rational& base, std::uint64_t exponent)
{
    BigInt num = 1;
    BigInt den = 1;
    BigInt bn = base.num_;
    BigInt bd = base.den_;
    // Powers of coprime integers stay coprime, so the result is canonical.
    while (exponent != 0) {
        if (exponent & 1u) {
            num *= bn;
            den *= bd;
        }
        exponent >>= 1;
        if (exponent != 0) {
            bn *= bn;
            bd *= bd;
        }
    }
    if (num.is_zero())
        den = 1;
    return Rational(std::move(num), std::move(den), Rational::Canonical{});
}

Rational abs(const Rational& q)
{
    return q.sign() < 0 ? -q : q;
}

Rational reciprocal(const Rational& q)
{
    return Rational(1) / q;
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.str();
}

std::ostream& operator<<(std::ostream& os, Ordering o)
{
    switch (o) {
    case Ordering::less: return os << "less";
    case Ordering::equal: return os << "equal";
    case Ordering::greater: return os << "greater";
    }
    return os;
}

} // namespace geoseries
