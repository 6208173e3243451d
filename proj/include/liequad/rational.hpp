#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "liequad/errors.hpp"

namespace liequad {

// Exact arbitrary-precision scalars. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the canonical form
// the text format below relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q"
/// with q > 1 and the sign carried by p.
inline std::string rational_str(const Rational& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "p" or "p/q". The minus sign is only accepted on the numerator
/// and q must be a positive integer.
inline Rational parse_rational(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
    if (!is_digits(num_digits) || !is_digits(den))
        throw ParseError("invalid rational: '" + std::string(text) + "'");
    Int q{std::string(den)};
    if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rational(Int{std::string(num)}, q);
}

} // namespace liequad
