#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p/q", plain integers and decimal literals ("0.85" -> 17/20).
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& r);

double parse_double(const std::string& text);

// Numeric backend traits. The rational backend decides ties exactly; the
// float backend clusters values whose relative gap is below tie_rel.
template <class T>
struct Backend;

template <>
struct Backend<Rational> {
    using Scalar = Rational;
    static constexpr bool exact = true;
    static const char* name() { return "rational"; }

    static Rational parse(const std::string& s) { return parse_rational(s); }
    static Rational from_int(long v) { return Rational(v); }
    static Rational from_double(double v) { return Rational(v); }
    static double to_double(const Rational& r) { return static_cast<double>(r); }
    static std::string str(const Rational& r) { return rational_to_string(r); }

    static bool same_value(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct Backend<double> {
    using Scalar = double;
    static constexpr bool exact = false;
    static constexpr double tie_rel = 1e-9;
    static const char* name() { return "float"; }

    static double parse(const std::string& s) { return parse_double(s); }
    static double from_int(long v) { return static_cast<double>(v); }
    static double from_double(double v) { return v; }
    static double to_double(double v) { return v; }
    static std::string str(double v);

    static bool same_value(double a, double b) {
        double scale = std::max({1.0, std::abs(a), std::abs(b)});
        return std::abs(a - b) <= tie_rel * scale;
    }
};

class game_error : public std::runtime_error {
public:
    explicit game_error(const std::string& what) : std::runtime_error(what) {}
};

class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cmg
