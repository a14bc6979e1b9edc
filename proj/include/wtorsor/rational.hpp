#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "wtorsor/errors.hpp"

namespace wtorsor {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the invariant
// the rest of the library relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denom(r) == 1; }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& r) {
    std::string s = numer(r).str();
    if (!is_integer(r)) {
        s += '/';
        s += denom(r).str();
    }
    return s;
}

/// Accepts "n" and "n/d" with optional sign on the numerator.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw InvalidInputError("not a rational number: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (num.empty() || den.empty()) fail();
    }
    auto check_digits = [&](std::string_view part, bool sign_ok) {
        if (part.empty()) fail();
        std::size_t i = 0;
        if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) fail();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') fail();
    };
    check_digits(num, true);
    BigInt n{std::string(num)};
    if (den.empty()) return Rational(n);
    check_digits(den, false);
    BigInt d{std::string(den)};
    if (d == 0) throw InvalidInputError("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(n, d);
}

}  // namespace wtorsor
