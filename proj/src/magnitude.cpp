#include <charconv>
#include <ostream>
#include <stdexcept>

#include <protex/errors.hpp>
#include <protex/scalars/magnitude.hpp>

namespace protex {

const Exponent& Magnitude::exponent() const {
    if (!exp_) throw std::logic_error("exponent() of the zero magnitude");
    return *exp_;
}

std::strong_ordering operator<=>(const Magnitude& a, const Magnitude& b) {
    if (a.is_zero() || b.is_zero()) {
        return !a.is_zero() <=> !b.is_zero();
    }
    if (*a.exp_ < *b.exp_) return std::strong_ordering::less;
    if (*b.exp_ < *a.exp_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Magnitude operator*(const Magnitude& a, const Magnitude& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return Magnitude::power(*a.exp_ + *b.exp_);
}

Magnitude operator/(const Magnitude& a, const Magnitude& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero magnitude");
    if (a.is_zero()) return {};
    return Magnitude::power(*a.exp_ - *b.exp_);
}

std::string Magnitude::str() const {
    if (!exp_) return "0";
    std::string s = "g^" + std::to_string(exp_->numerator());
    if (exp_->denominator() != 1) s += "/" + std::to_string(exp_->denominator());
    return s;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data()+s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data()+s.size() || s.front() == '+') {
        throw parse_error("malformed magnitude '" + std::string(whole) + "'");
    }
    return v;
}

} // namespace

Magnitude Magnitude::parse(std::string_view text) {
    if (text == "0") return {};
    if (text.substr(0, 2) != "g^") {
        throw parse_error("malformed magnitude '" + std::string(text) + "': expected \"0\" or \"g^<rational>\"");
    }
    auto body = text.substr(2);
    auto slash = body.find('/');
    Magnitude out;
    if (slash == std::string_view::npos) {
        out = power(parse_int(body, text));
    }
    else {
        auto den = parse_int(body.substr(slash+1), text);
        if (den == 0) throw parse_error("malformed magnitude '" + std::string(text) + "': zero denominator");
        out = power(Exponent(parse_int(body.substr(0, slash), text), den));
    }
    // the printed form is the only accepted spelling
    if (out.str() != text) throw parse_error("non-canonical magnitude '" + std::string(text) + "', write '" + out.str() + "'");
    return out;
}

std::ostream& operator<<(std::ostream& o, const Magnitude& m) {
    return o << m.str();
}

} // namespace protex
