#include "jasonrs/logic/decimal.hpp"

#include <cctype>
#include <limits>

#include "jasonrs/logic/errors.hpp"

namespace jasonrs::logic {
namespace {

using Wide = __int128;

constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr Wide kMin = std::numeric_limits<std::int64_t>::min();

Decimal checked(Wide units) {
    if (units > kMax || units < kMin) {
        throw ArithmeticOverflow();
    }
    return Decimal::from_units(static_cast<std::int64_t>(units));
}

} // namespace

Decimal Decimal::from_int(std::int64_t value) {
    return checked(static_cast<Wide>(value) * kUnit);
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    int fraction = 0;
    bool seen_digit = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits.push_back(text[i++]);
        seen_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
            return std::nullopt;
        }
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits.push_back(text[i++]);
            ++fraction;
            seen_digit = true;
        }
    }
    if (!seen_digit) {
        return std::nullopt;
    }
    long exponent = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            exp_negative = text[i] == '-';
            ++i;
        }
        if (i >= text.size()) {
            return std::nullopt;
        }
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            exponent = exponent * 10 + (text[i++] - '0');
            if (exponent > 400) {
                return std::nullopt;
            }
        }
        if (exp_negative) {
            exponent = -exponent;
        }
    }
    if (i != text.size()) {
        return std::nullopt;
    }

    if (digits.find_first_not_of('0') == std::string::npos) {
        return from_units(0);
    }
    // value = digits * 10^(exponent - fraction); scale into units.
    long shift = exponent - fraction + kFractionDigits;
    // Strip trailing zeros that would otherwise be lost by a negative shift.
    while (shift < 0 && !digits.empty() && digits.back() == '0') {
        digits.pop_back();
        ++shift;
    }
    if (shift < 0) {
        return std::nullopt; // more precision than representable
    }
    Wide units = 0;
    for (char c : digits) {
        units = units * 10 + (c - '0');
        if (units > kMax + 1) {
            return std::nullopt;
        }
    }
    for (long k = 0; k < shift; ++k) {
        if (units == 0) {
            break;
        }
        units *= 10;
        if (units > kMax + 1) {
            return std::nullopt;
        }
    }
    if (negative) {
        units = -units;
    }
    if (units > kMax || units < kMin) {
        return std::nullopt;
    }
    return from_units(static_cast<std::int64_t>(units));
}

std::string Decimal::to_string() const {
    Wide u = units_;
    bool negative = u < 0;
    if (negative) {
        u = -u;
    }
    auto whole = static_cast<unsigned long long>(u / kUnit);
    auto frac = static_cast<unsigned long long>(u % kUnit);
    std::string out = negative ? "-" : "";
    out += std::to_string(whole);
    if (frac != 0) {
        std::string f = std::to_string(frac);
        f.insert(0, static_cast<std::size_t>(kFractionDigits) - f.size(), '0');
        while (!f.empty() && f.back() == '0') {
            f.pop_back();
        }
        out += '.';
        out += f;
    }
    return out;
}

Decimal operator+(Decimal a, Decimal b) { return checked(static_cast<Wide>(a.units_) + b.units_); }
Decimal operator-(Decimal a, Decimal b) { return checked(static_cast<Wide>(a.units_) - b.units_); }

Decimal operator*(Decimal a, Decimal b) {
    return checked(static_cast<Wide>(a.units_) * b.units_ / Decimal::kUnit);
}

Decimal operator/(Decimal a, Decimal b) {
    if (b.units_ == 0) {
        throw DivisionByZero();
    }
    return checked(static_cast<Wide>(a.units_) * Decimal::kUnit / b.units_);
}

Decimal Decimal::operator-() const { return checked(-static_cast<Wide>(units_)); }

} // namespace jasonrs::logic
