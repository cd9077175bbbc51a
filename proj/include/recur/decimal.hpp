#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recur/arith.hpp"
#include "recur/error.hpp"

namespace recur {

/// Decimal rescaling applied to a whole model: every written duration is
/// multiplied by 10^k so that ticks are integers. k is the maximum number
/// of (significant) decimal places across the inputs.
struct DurationScale {
    unsigned k = 0;

    Tick factor() const { return pow10_tick(k); }

    friend bool operator==(DurationScale, DurationScale) = default;
};

namespace detail {

/// A finitely written decimal numeral, validated and split into parts.
/// Trailing fractional zeros are dropped so "13.50" scales like "13.5".
struct ParsedDecimal {
    bool negative = false;
    std::string_view int_digits;
    std::string_view frac_digits;  // already trimmed of trailing zeros

    bool is_zero() const {
        return int_digits.find_first_not_of('0') == std::string_view::npos && frac_digits.empty();
    }
};

inline ParsedDecimal parse_decimal(std::string_view text) {
    ParsedDecimal out;
    std::string_view rest = text;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        out.negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    auto all_digits = [](std::string_view s) {
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::size_t dot = rest.find('.');
    std::string_view int_part = dot == std::string_view::npos ? rest : rest.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
    if (int_part.empty() || !all_digits(int_part) || !all_digits(frac_part) ||
        (dot != std::string_view::npos && frac_part.empty()))
        throw NonDecimalError("not a finitely written decimal numeral: \"" + std::string(text) + "\"");
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.remove_suffix(1);
    out.int_digits = int_part;
    out.frac_digits = frac_part;
    return out;
}

/// Value of the numeral multiplied by 10^k, exact or OverflowError.
inline Tick scale_decimal(const ParsedDecimal& d, unsigned k) {
    Tick value = 0;
    for (char c : d.int_digits) value = checked_add(checked_mul(value, 10), c - '0');
    for (unsigned i = 0; i < k; ++i) {
        Tick digit = i < d.frac_digits.size() ? d.frac_digits[i] - '0' : 0;
        value = checked_add(checked_mul(value, 10), digit);
    }
    return d.negative ? checked_sub(0, value) : value;
}

}  // namespace detail

/// Number of significant decimal places in a numeral ("13.50" -> 1).
inline unsigned decimal_places(std::string_view text) {
    return static_cast<unsigned>(detail::parse_decimal(text).frac_digits.size());
}

/// Parse a (possibly signed) decimal at a fixed scale; exact or throws.
inline Tick parse_scaled(std::string_view text, DurationScale scale) {
    auto parsed = detail::parse_decimal(text);
    if (parsed.frac_digits.size() > scale.k)
        throw NonDecimalError("\"" + std::string(text) + "\" has more than " + std::to_string(scale.k) +
                              " decimal places");
    return detail::scale_decimal(parsed, scale.k);
}

/// Render ticks back in the original unit with exactly scale.k decimals.
/// The fraction is taken from the magnitude, so -3 at k=1 prints "-0.3".
inline std::string format_ticks(Tick value, DurationScale scale) {
    if (scale.k == 0) return std::to_string(value);
    Tick factor = scale.factor();
    bool negative = value < 0;
    Tick magnitude = negative ? checked_sub(0, value) : value;
    std::string digits = std::to_string(magnitude % factor);
    return (negative ? "-" : "") + std::to_string(magnitude / factor) + "." +
           std::string(scale.k - digits.size(), '0') + digits;
}

/// Rescale a list of written durations to integer ticks.
///
/// k becomes the maximum number of decimal places across the entries and
/// every entry is multiplied by 10^k. Entries must be positive, finitely
/// written decimals; anything else is an error.
inline std::pair<std::vector<Tick>, DurationScale> normalize_durations(
    const std::vector<std::string>& durations) {
    unsigned k = 0;
    std::vector<detail::ParsedDecimal> parsed;
    parsed.reserve(durations.size());
    for (const auto& text : durations) {
        auto d = detail::parse_decimal(text);
        if (d.negative || d.is_zero())
            throw NonPositiveDurationError("duration \"" + text + "\" is not positive");
        k = std::max(k, static_cast<unsigned>(d.frac_digits.size()));
        parsed.push_back(d);
    }
    std::vector<Tick> ticks;
    ticks.reserve(parsed.size());
    for (const auto& d : parsed) ticks.push_back(detail::scale_decimal(d, k));
    return {std::move(ticks), DurationScale{k}};
}

}  // namespace recur
