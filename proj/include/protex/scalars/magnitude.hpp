#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace protex {

using Exponent = boost::rational<std::int64_t>;

// An exact norm value: either zero or a formal power g^q of a fixed base g > 1
// with rational exponent q. Closed under multiplication, division by nonzero
// values and max; addition is deliberately absent.
class Magnitude {
public:
    constexpr Magnitude() = default;

    static Magnitude zero() { return {}; }
    static Magnitude one() { return power(0); }
    static Magnitude power(Exponent q) {
        Magnitude m;
        m.exp_ = q;
        return m;
    }

    bool is_zero() const { return !exp_.has_value(); }

    // Precondition: !is_zero().
    const Exponent& exponent() const;

    // "0" or "g^<q>" with q an integer or "a/b" in lowest terms.
    std::string str() const;
    static Magnitude parse(std::string_view text);

    friend bool operator==(const Magnitude&, const Magnitude&) = default;
    friend std::strong_ordering operator<=>(const Magnitude& a, const Magnitude& b);

    friend Magnitude operator*(const Magnitude& a, const Magnitude& b);
    // Throws std::domain_error when b is zero.
    friend Magnitude operator/(const Magnitude& a, const Magnitude& b);

    Magnitude& operator*=(const Magnitude& b) { return *this = *this * b; }

private:
    std::optional<Exponent> exp_;
};

inline const Magnitude& max(const Magnitude& a, const Magnitude& b) { return a < b? b: a; }
inline const Magnitude& min(const Magnitude& a, const Magnitude& b) { return b < a? b: a; }

std::ostream& operator<<(std::ostream& o, const Magnitude& m);

} // namespace protex
