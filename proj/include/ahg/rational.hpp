#pragma once

#include "ahg/types.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace ahg {

// Exact arbitrary-precision arithmetic for everything user-facing.
// A faster fixed-width path exists inside the stability search, but any
// value that leaves the library is computed or re-checked with these types.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders a rational exactly: "14" when integral, a finite decimal such as
// "12.5" when the reduced denominator is of the form 2^a * 5^b, and "p/q"
// otherwise.
inline std::string to_display_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r); // > 0, coprime with num
    if (den == 1) return num.str();

    // Count factors of 2 and 5; a finite decimal exists iff nothing is left.
    BigInt rest = den;
    unsigned twos = 0, fives = 0;
    while (rest % 2 == 0) { rest /= 2; ++twos; }
    while (rest % 5 == 0) { rest /= 5; ++fives; }
    if (rest != 1) return num.str() + "/" + den.str();

    unsigned digits = twos > fives ? twos : fives;
    BigInt scale = 1;
    for (unsigned i = twos; i < digits; ++i) scale *= 2;
    for (unsigned i = fives; i < digits; ++i) scale *= 5;
    BigInt scaled = num * scale; // now num/den == scaled / 10^digits
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string s = scaled.str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (negative ? "-" : "") + s;
}

// Accepts "12", "-3/4", "12.5". Returns nullopt on anything else.
inline std::optional<Rational> rational_from_string(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            std::string p = text.substr(0, slash), q = text.substr(slash + 1);
            if (!is_int(p) || !is_int(q)) return std::nullopt;
            BigInt den(q);
            if (den == 0) return std::nullopt;
            return Rational(BigInt(p), den);
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            std::string head = text.substr(0, dot), tail = text.substr(dot + 1);
            if (head.empty() || head == "-" || head == "+") head += "0";
            if (!is_int(head) || tail.empty()) return std::nullopt;
            for (char c : tail)
                if (c < '0' || c > '9') return std::nullopt;
            BigInt scale = 1;
            for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
            BigInt whole(head);
            BigInt frac(tail);
            BigInt total = whole * scale + (whole < 0 || head[0] == '-' ? -frac : frac);
            return Rational(total, scale);
        }
        if (!is_int(text)) return std::nullopt;
        return Rational(BigInt(text));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace ahg
