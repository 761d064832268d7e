#include "credo/rational.hpp"

#include <algorithm>

namespace credo {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void bad_number(std::string_view text) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
}

}  // namespace

Rat parse_number(std::string_view text) {
    std::string_view s = text;
    // trim ascii whitespace
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) bad_number(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad_number(text);

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_number(text);
        BigInt d{std::string(den)};
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        Rat r{BigInt{std::string(num)}, d};
        return negative ? Rat(-r) : r;
    }

    auto dot = s.find('.');
    std::string_view intpart = dot == std::string_view::npos ? s : s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (intpart.empty() && frac.empty()) bad_number(text);
    if (!intpart.empty() && !all_digits(intpart)) bad_number(text);
    if (!frac.empty() && !all_digits(frac)) bad_number(text);

    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt units = intpart.empty() ? BigInt(0) : BigInt{std::string(intpart)};
    BigInt sub = frac.empty() ? BigInt(0) : BigInt{std::string(frac)};
    Rat r{units * scale + sub, scale};
    return negative ? Rat(-r) : r;
}

std::string format_decimal(const Rat& value, int places) {
    if (places < 0) places = 0;
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;

    Rat scaled = value * scale;
    BigInt num = numerator(scaled), den = denominator(scaled);
    bool negative = num < 0;
    if (negative) num = -num;
    // round half away from zero
    BigInt q = num / den, r = num % den;
    if (2 * r >= den) q += 1;

    BigInt units = q / scale, sub = q % scale;
    std::string out = negative && q != 0 ? "-" : "";
    out += units.str();
    if (places > 0) {
        std::string digits = sub.str();
        out += '.';
        out += std::string(places - digits.size(), '0');
        out += digits;
    }
    return out;
}

std::string format_exact(const Rat& value) {
    BigInt num = numerator(value), den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace credo
