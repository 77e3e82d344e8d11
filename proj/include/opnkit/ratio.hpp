#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "opnkit/natural.hpp"

namespace opnkit {

/// Exact rational in lowest terms with a positive denominator.
class Ratio {
public:
    Ratio() = default;
    Ratio(std::int64_t v); // NOLINT(google-explicit-constructor)
    Ratio(const Natural& v); // NOLINT(google-explicit-constructor)
    Ratio(const Natural& num, const Natural& den);
    explicit Ratio(const mpq_class& v);
    static Ratio of(std::int64_t num, std::int64_t den);

    /// Accepts "a", "a/b" and finite decimals such as "1.44440557" or "-0.5".
    static Ratio parse(std::string_view text);

    [[nodiscard]] const mpq_class& mpq() const noexcept { return value_; }
    [[nodiscard]] mpz_class num() const { return value_.get_num(); }
    [[nodiscard]] mpz_class den() const { return value_.get_den(); }
    [[nodiscard]] int sign() const noexcept { return sgn(value_); }
    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    Ratio& operator+=(const Ratio& o) { value_ += o.value_; return *this; }
    Ratio& operator-=(const Ratio& o) { value_ -= o.value_; return *this; }
    Ratio& operator*=(const Ratio& o) { value_ *= o.value_; return *this; }
    Ratio& operator/=(const Ratio& o);

    friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
    friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
    friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
    friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }
    friend Ratio operator-(const Ratio& a) { return Ratio(mpq_class(-a.value_)); }

    friend bool operator==(const Ratio& a, const Ratio& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Ratio& r);

private:
    mpq_class value_{0};
};

/// r^e for a non-negative integer exponent.
Ratio pow(const Ratio& r, unsigned e);

} // namespace opnkit
