#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace credo {

// Arbitrary-precision rational, always kept normalized. Expression templates
// are disabled so `auto` and generic code see plain values.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Parses "3/4", "0.25", "-1.5", "2". Decimal strings become exact fractions.
Rat parse_number(std::string_view text);

// Exact decimal rendering with `places` digits after the point, rounding
// half away from zero. places = 0 prints a bare integer.
std::string format_decimal(const Rat& value, int places);

// "p/q" when the denominator is not 1, else "p".
std::string format_exact(const Rat& value);

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Scalar policy used by the numeric layers. Rational mode compares exactly;
// float mode compares up to a caller-supplied tolerance.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool exact = true;
    static Rat from_rat(const Rat& r) { return r; }
    static Rat default_tol() { return Rat(0); }
    static Rat abs(const Rat& x) { return rat_abs(x); }
    static bool is_zero(const Rat& x, const Rat&) { return x == 0; }
    static bool eq(const Rat& a, const Rat& b, const Rat&) { return a == b; }
    // a <= b up to tolerance
    static bool leq(const Rat& a, const Rat& b, const Rat&) { return a <= b; }
    static std::string decimal(const Rat& x, int places) { return format_decimal(x, places); }
    static std::string exact_str(const Rat& x) { return format_exact(x); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double from_rat(const Rat& r) { return r.convert_to<double>(); }
    static double default_tol() { return 1e-9; }
    static double abs(double x) { return std::fabs(x); }
    static bool is_zero(double x, double tol) { return std::fabs(x) <= tol; }
    static bool eq(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
    static bool leq(double a, double b, double tol) { return a <= b + tol; }
    static std::string decimal(double x, int places) { return format_decimal(Rat(x), places); }
    static std::string exact_str(double x) { return format_exact(Rat(x)); }
};

}  // namespace credo
