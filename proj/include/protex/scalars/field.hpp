#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <protex/errors.hpp>
#include <protex/scalars/magnitude.hpp>

namespace protex {

namespace detail {

constexpr bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d*d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

} // namespace detail

// The prime field Z/P. Values are stored reduced in [0, P).
template <int P>
class Fp {
    static_assert(detail::is_prime(P) && P < 256, "Fp requires a prime modulus below 256");

public:
    static constexpr int order = P;

    constexpr Fp() = default;
    constexpr Fp(long long v): v_(static_cast<std::uint8_t>(((v % P) + P) % P)) {}

    constexpr int value() const { return v_; }

    friend constexpr Fp operator+(Fp a, Fp b) { return Fp(int(a.v_) + int(b.v_)); }
    friend constexpr Fp operator-(Fp a, Fp b) { return Fp(int(a.v_) - int(b.v_)); }
    friend constexpr Fp operator*(Fp a, Fp b) { return Fp(int(a.v_) * int(b.v_)); }
    friend constexpr Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    constexpr Fp operator-() const { return Fp(-int(v_)); }
    constexpr Fp& operator+=(Fp b) { return *this = *this + b; }
    constexpr Fp& operator-=(Fp b) { return *this = *this - b; }
    constexpr Fp& operator*=(Fp b) { return *this = *this * b; }
    constexpr Fp& operator/=(Fp b) { return *this = *this / b; }
    friend constexpr bool operator==(Fp, Fp) = default;

    // Fermat: a^(P-2).
    constexpr Fp inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in a prime field");
        Fp r(1), b(*this);
        for (int e = P-2; e > 0; e >>= 1) {
            if (e & 1) r *= b;
            b *= b;
        }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& o, Fp a) { return o << a.value(); }

private:
    std::uint8_t v_ = 0;
};

using F2 = Fp<2>;
using F3 = Fp<3>;
using F5 = Fp<5>;

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

// Per-scalar facts: a short name, exact text forms, and finite enumeration where it exists.
template <typename S> struct scalar_traits;

template <int P>
struct scalar_traits<Fp<P>> {
    static constexpr bool is_finite = true;
    static constexpr int order = P;

    static std::string name() { return "F" + std::to_string(P); }

    static Fp<P> parse(std::string_view s) {
        int v = 0;
        if (s.empty() || s.size() > 3) throw parse_error("malformed F" + std::to_string(P) + " element '" + std::string(s) + "'");
        for (char c: s) {
            if (c < '0' || c > '9') throw parse_error("malformed F" + std::to_string(P) + " element '" + std::string(s) + "'");
            v = 10*v + (c-'0');
        }
        if (v >= P) throw parse_error("F" + std::to_string(P) + " element '" + std::string(s) + "' is not a digit below " + std::to_string(P));
        return Fp<P>(v);
    }

    static std::string format(Fp<P> a) { return std::to_string(a.value()); }

    static std::vector<Fp<P>> elements() {
        std::vector<Fp<P>> out;
        for (int v = 0; v < P; ++v) out.emplace_back(v);
        return out;
    }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_finite = false;

    static std::string name() { return "Q"; }

    static Rational parse(std::string_view s) {
        auto bad = [&] { return parse_error("malformed rational '" + std::string(s) + "'"); };
        if (s.empty()) throw bad();
        auto slash = s.find('/');
        auto digits_ok = [](std::string_view d, bool allow_sign) {
            if (allow_sign && !d.empty() && d.front() == '-') d.remove_prefix(1);
            if (d.empty()) return false;
            for (char c: d) if (c < '0' || c > '9') return false;
            return true;
        };
        if (slash == std::string_view::npos) {
            if (!digits_ok(s, true)) throw bad();
            return Rational(BigInt(std::string(s)));
        }
        auto num = s.substr(0, slash), den = s.substr(slash+1);
        if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
        BigInt d(std::string{den});
        if (d == 0) throw parse_error("rational '" + std::string(s) + "' has zero denominator");
        return Rational(BigInt(std::string(num)), d);
    }

    static std::string format(const Rational& a) {
        auto num = boost::multiprecision::numerator(a);
        auto den = boost::multiprecision::denominator(a);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }
};

// A base field with an absolute value. Prime fields only carry the trivial
// absolute value; the rationals carry either the trivial one or a p-adic one
// |x| = g^(-v_p(x)), reading the formal base g as p.
template <typename S>
class ValuedField {
public:
    static ValuedField trivial() { return ValuedField(0); }

    static ValuedField padic(unsigned p) {
        if constexpr (scalar_traits<S>::is_finite) {
            throw invariant_violation("a finite field admits only the trivial absolute value");
        }
        else {
            if (!detail::is_prime(int(p))) throw invariant_violation("p-adic valuation needs a prime, got " + std::to_string(p));
            return ValuedField(p);
        }
    }

    bool is_padic() const { return prime_ != 0; }
    unsigned prime() const { return prime_; }

    Magnitude abs(const S& x) const {
        if (x == S(0)) return Magnitude::zero();
        if constexpr (!scalar_traits<S>::is_finite) {
            if (prime_) return Magnitude::power(-valuation(x));
        }
        return Magnitude::one();
    }

    // p-adic valuation of a nonzero rational.
    std::int64_t valuation(const S& x) const
        requires (!scalar_traits<S>::is_finite)
    {
        auto count = [p = prime_](BigInt n) {
            std::int64_t v = 0;
            if (n < 0) n = -n;
            while (n % p == 0) {
                n /= p;
                ++v;
            }
            return v;
        };
        return count(boost::multiprecision::numerator(x)) - count(boost::multiprecision::denominator(x));
    }

    std::string name() const {
        if (prime_) return scalar_traits<S>::name() + "_" + std::to_string(prime_);
        return scalar_traits<S>::name();
    }

    friend bool operator==(const ValuedField&, const ValuedField&) = default;

private:
    explicit ValuedField(unsigned p): prime_(p) {}
    unsigned prime_ = 0;
};

} // namespace protex

namespace Eigen {

template <int P>
struct NumTraits<protex::Fp<P>>: GenericNumTraits<protex::Fp<P>> {
    using Real = protex::Fp<P>;
    using NonInteger = protex::Fp<P>;
    using Literal = protex::Fp<P>;
    using Nested = protex::Fp<P>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 1,
        MulCost = 1
    };
    static inline int digits10() { return 0; }
    static inline int max_digits10() { return 0; }
};

} // namespace Eigen
