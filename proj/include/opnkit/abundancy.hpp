#pragma once

#include <utility>

#include "opnkit/arithmetic.hpp"
#include "opnkit/interval.hpp"
#include "opnkit/ratio.hpp"

namespace opnkit {

/// I(n) = sigma(n)/n, exact and reduced.
Ratio abundancy_index(const Factorization& f);

/// The two closed forms of I(r^s):
///   (r^(s+1) - 1) / (r^s (r - 1))   and   1 + 1/(r-1) - 1/(r^s (r-1)).
struct PrimePowerIndexForms {
    Ratio quotient;
    Ratio expanded;
};

PrimePowerIndexForms prime_power_index_forms(const Natural& r, unsigned s);
/// I(r^s) for a prime r, s >= 1. Throws DomainError if r is not prime.
Ratio prime_power_index(const Natural& r, unsigned s);

/// I(r^(2s)) computed directly and as I(r^s) * (1 + (1 - r^-s)/(r^(s+1) - 1)).
struct SquareIndexRelation {
    Ratio direct;
    Ratio via_product;
};

SquareIndexRelation square_index_relation(const Natural& r, unsigned s);

/// x(n) = ln I(n^2) / ln I(n) together with the factorization it describes.
struct ExponentValue {
    IntervalReal value;
    Factorization of;
    /// True once the enclosure sits strictly inside (1, 2).
    bool range_certified = false;
};

/// Enclosure of x(n) at a fixed working precision; n = value(f) > 1.
IntervalReal exponent_enclosure(const Factorization& f, unsigned bits);
/// Enclosure of x(r^s) via 1 + ln(1 + delta) / ln I(r^s),
/// delta = (1 - r^-s)/(r^(s+1) - 1).
IntervalReal prime_power_exponent_enclosure(const Natural& r, unsigned s, unsigned bits);
/// Enclosure of ln I(u) / ln I(u^2) = 1/x(u).
IntervalReal reciprocal_exponent_enclosure(const Natural& u, unsigned bits);

/// x(n), escalating precision until 1 < x(n) < 2 is certified (or max_bits).
/// Throws DomainError for n = 1.
ExponentValue x_exponent(const Factorization& f, const PrecisionConfig& cfg);
ExponentValue x_prime_power(const Natural& r, unsigned s, const PrecisionConfig& cfg);

enum class SandwichStatus { Holds, Violated, Undecided };
const char* to_string(SandwichStatus s);

struct SandwichResult {
    SandwichStatus status;
    IntervalReal xa;
    IntervalReal xb;
    IntervalReal xab;
    unsigned bits;
};

/// Certifies min(x(a), x(b)) < x(ab) < max(x(a), x(b)) for coprime a, b > 1
/// by disjoint enclosures. x(a) = x(b) is never assumed away: if the two
/// cannot be separated at max_bits the result is Undecided.
SandwichResult sandwich_check(const Factorization& fa, const Factorization& fb, const PrecisionConfig& cfg);

/// L^(1/x(u)) at a fixed precision. L > 1, u an odd prime.
IntervalReal index_lower_bound_enclosure(const Ratio& L, const Natural& u, unsigned bits);
/// Same, evaluated at cfg.initial_bits.
IntervalReal index_lower_bound_from_square(const Ratio& L, const Natural& u, const PrecisionConfig& cfg);

} // namespace opnkit
