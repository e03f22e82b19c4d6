#pragma once

// Exact rational numbers over arbitrary-precision integers.
//
// Values are always kept in canonical form: the denominator is positive,
// numerator and denominator are coprime, and zero is 0/1. Canonicalization
// happens in the constructor, so structural equality is numeric equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace geoseries {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : num_(value) {}

    /// Builds num/den in canonical form. Throws std::domain_error if den == 0.
    Rational(BigInt num, BigInt den);

    /// Parses "p/q" or "p". q must be a positive integer; "n/1" is accepted.
    /// Throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    /// Canonical text: "p/q", or just "p" for integers.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    struct Canonical {};
    // Caller guarantees den > 0 and gcd(|num|, den) == 1.
    Rational(BigInt num, BigInt den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    friend Rational pow(const Rational& base, std::uint64_t exponent);

    BigInt num_ = 0;
    BigInt den_ = 1;
};

/// Same as the two-argument constructor; named for call sites that read
/// better as a function.
Rational normalize(BigInt num, BigInt den);

enum class Ordering { less, equal, greater };

/// Total order by integer cross-multiplication.
Ordering compare(const Rational& a, const Rational& b);

/// Exact power with 0^0 == 1.
Rational pow(const Rational& base, std::uint64_t exponent);

Rational abs(const Rational& q);
Rational reciprocal(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Rational& q);
std::ostream& operator<<(std::ostream& os, Ordering o);

} // namespace geoseries
