#include "lvwaves/rational.hpp"

#include "lvwaves/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace lvwaves {

namespace {

using boost::multiprecision::cpp_int;

cpp_int pow10(unsigned e) {
    cpp_int r = 1;
    for (unsigned i = 0; i < e; ++i) r *= 10;
    return r;
}

// Decimal literal with optional sign, fraction and exponent.
Rational parse_decimal(std::string_view s, std::string_view whole) {
    if (s.empty()) throw ParseError("empty number in '" + std::string(whole) + "'");
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
    }
    cpp_int digits = 0;
    int scale = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (; i < s.size(); ++i) {
        const char ch = s[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits = digits * 10 + (ch - '0');
            any_digit = true;
            if (seen_point) --scale;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) throw ParseError("no digits in '" + std::string(whole) + "'");
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') throw ParseError("unexpected character in '" + std::string(whole) + "'");
        ++i;
        int exponent = 0;
        const auto* first = s.data() + i;
        const auto* last = s.data() + s.size();
        if (first != last && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, exponent);
        if (ec != std::errc{} || ptr != last) throw ParseError("bad exponent in '" + std::string(whole) + "'");
        scale += exponent;
    }
    Rational value = scale >= 0 ? Rational(digits * pow10(static_cast<unsigned>(scale)))
                                : Rational(digits, pow10(static_cast<unsigned>(-scale)));
    return negative ? Rational(-value) : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return parse_decimal(s, text);
    const Rational num = parse_decimal(trim(s.substr(0, slash)), text);
    const Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return num / den;
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw ParseError("non-finite number");
    return Rational(value);
}

Rational rational_from_decimal_double(double value) {
    if (!std::isfinite(value)) throw ParseError("non-finite number");
    char buf[32];
    std::to_chars_result res = std::to_chars(buf, buf + sizeof buf, value);
    return parse_decimal(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)), "double");
}

std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() +
           (boost::multiprecision::denominator(r) == 1 ? std::string{}
                                                       : "/" + boost::multiprecision::denominator(r).str());
}

}  // namespace lvwaves
