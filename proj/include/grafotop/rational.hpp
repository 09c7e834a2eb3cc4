#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace grafotop {

// Exact arithmetic everywhere: dimensions, curvatures and traces are
// rationals, matrix elimination runs over arbitrary-precision integers.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown on malformed user input (unknown vertex, bad file, bad params).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal identity that must hold fails (a bug detector).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// "p/q" for proper fractions, plain "p" for integers.
inline std::string to_fraction_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0)
            throw input_error("zero denominator in rational: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw input_error("cannot parse rational: " + s);
    }
}

} // namespace grafotop
