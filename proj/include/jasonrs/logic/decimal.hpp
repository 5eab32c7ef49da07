#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace jasonrs::logic {

/// Exact fixed-point number with six fractional digits.
///
/// Addition, subtraction and comparison are exact. Multiplication and
/// division truncate toward zero at the sixth fractional digit. Any result
/// outside the int64 unit range raises ArithmeticOverflow.
class Decimal {
public:
    static constexpr int kFractionDigits = 6;
    static constexpr std::int64_t kUnit = 1'000'000;

    constexpr Decimal() = default;

    static Decimal from_int(std::int64_t value);
    static constexpr Decimal from_units(std::int64_t units) {
        Decimal d;
        d.units_ = units;
        return d;
    }

    /// Accepts `[-]digits[.digits][(e|E)[+-]digits]`. Returns nullopt when the
    /// text is malformed, needs more than six fractional digits, or overflows.
    static std::optional<Decimal> parse(std::string_view text);

    constexpr std::int64_t units() const { return units_; }
    constexpr bool is_integer() const { return units_ % kUnit == 0; }
    double to_double() const { return static_cast<double>(units_) / kUnit; }

    /// Shortest exact rendering: "10", "-0.25", "3.5".
    std::string to_string() const;

    friend Decimal operator+(Decimal a, Decimal b);
    friend Decimal operator-(Decimal a, Decimal b);
    friend Decimal operator*(Decimal a, Decimal b);
    friend Decimal operator/(Decimal a, Decimal b);
    Decimal operator-() const;

    friend constexpr bool operator==(Decimal, Decimal) = default;
    friend constexpr std::strong_ordering operator<=>(Decimal, Decimal) = default;

private:
    std::int64_t units_ = 0;
};

} // namespace jasonrs::logic
