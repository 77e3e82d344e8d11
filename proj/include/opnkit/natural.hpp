#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace opnkit {

/// Arbitrary-precision non-negative integer.
///
/// Closed under +, *, pow, / and %. Subtraction throws DomainError when the
/// result would be negative.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v); // NOLINT(google-explicit-constructor)
    explicit Natural(const mpz_class& v);
    explicit Natural(mpz_class&& v);

    /// Parses a decimal digit string.
    static Natural parse(std::string_view digits);
    static Natural pow(const Natural& base, std::uint64_t exponent);
    /// 2^e - 1.
    static Natural mersenne(std::uint64_t e);

    [[nodiscard]] const mpz_class& mpz() const noexcept { return value_; }

    [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const noexcept { return value_ == 1; }
    [[nodiscard]] bool is_odd() const noexcept { return mpz_odd_p(value_.get_mpz_t()) != 0; }
    [[nodiscard]] bool fits_u64() const noexcept;
    /// Requires fits_u64().
    [[nodiscard]] std::uint64_t to_u64() const;
    [[nodiscard]] std::optional<std::uint64_t> try_u64() const;
    [[nodiscard]] std::size_t bit_length() const noexcept;
    [[nodiscard]] std::string str() const { return value_.get_str(); }

    Natural& operator+=(const Natural& o);
    Natural& operator-=(const Natural& o);
    Natural& operator*=(const Natural& o);
    Natural& operator/=(const Natural& o);
    Natural& operator%=(const Natural& o);

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
    friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

    friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n);

private:
    mpz_class value_{0};
};

Natural gcd(const Natural& a, const Natural& b);
/// Floor of the square root.
Natural isqrt(const Natural& n);

} // namespace opnkit
