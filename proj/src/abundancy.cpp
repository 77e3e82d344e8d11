#include "opnkit/abundancy.hpp"

#include "opnkit/error.hpp"

namespace opnkit {

namespace {

constexpr unsigned kInnerGuard = 16;

IntervalReal narrow(const IntervalReal& x, unsigned bits)
{
    Float lo(bits);
    Float hi(bits);
    mpfr_set(lo.get(), x.lo().get(), MPFR_RNDD);
    mpfr_set(hi.get(), x.hi().get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), bits};
}

void require_prime(const Natural& r, const char* what)
{
    if (!is_prime(r)) {
        throw DomainError(std::string(what) + ": " + r.str() + " is not prime");
    }
}

void require_exponent(unsigned s, const char* what)
{
    if (s == 0) {
        throw DomainError(std::string(what) + ": exponent must be at least 1");
    }
}

bool in_open_unit_to_two(const IntervalReal& x)
{
    return compare(x, Ratio(1)) == Ordering::Greater && compare(x, Ratio(2)) == Ordering::Less;
}

} // namespace

Ratio abundancy_index(const Factorization& f)
{
    return {sigma(f), f.value()};
}

PrimePowerIndexForms prime_power_index_forms(const Natural& r, unsigned s)
{
    require_prime(r, "prime_power_index");
    require_exponent(s, "prime_power_index");
    const Natural rs = Natural::pow(r, s);
    const Natural rm1 = r - Natural(1);
    const Ratio quotient(rs * r - Natural(1), rs * rm1);
    const Ratio expanded = Ratio(1) + Ratio(Natural(1), rm1) - Ratio(Natural(1), rs * rm1);
    return {quotient, expanded};
}

Ratio prime_power_index(const Natural& r, unsigned s)
{
    return prime_power_index_forms(r, s).quotient;
}

SquareIndexRelation square_index_relation(const Natural& r, unsigned s)
{
    require_prime(r, "square_index_relation");
    require_exponent(s, "square_index_relation");
    const Natural rs = Natural::pow(r, s);
    const Ratio direct = prime_power_index(r, 2 * s);
    // 1 - r^-s over r^(s+1) - 1, kept as an exact rational.
    const Ratio correction = (Ratio(1) - Ratio(Natural(1), rs)) / Ratio(rs * r - Natural(1));
    return {direct, prime_power_index(r, s) * (Ratio(1) + correction)};
}

IntervalReal exponent_enclosure(const Factorization& f, unsigned bits)
{
    if (f.is_one()) {
        throw DomainError("x(n) is undefined for n = 1");
    }
    const unsigned w = bits + kInnerGuard;
    const IntervalReal num = eval_ln(abundancy_index(f.squared()), w);
    const IntervalReal den = eval_ln(abundancy_index(f), w);
    return narrow(num / den, bits);
}

IntervalReal prime_power_exponent_enclosure(const Natural& r, unsigned s, unsigned bits)
{
    require_prime(r, "x(r^s)");
    require_exponent(s, "x(r^s)");
    const unsigned w = bits + kInnerGuard;
    const Natural rs = Natural::pow(r, s);
    const Ratio delta(rs - Natural(1), rs * (rs * r - Natural(1)));
    const IntervalReal num = eval_ln(Ratio(1) + delta, w);
    const IntervalReal den = eval_ln(prime_power_index(r, s), w);
    return narrow(IntervalReal::exact(Ratio(1), w) + num / den, bits);
}

IntervalReal reciprocal_exponent_enclosure(const Natural& u, unsigned bits)
{
    require_prime(u, "1/x(u)");
    const unsigned w = bits + kInnerGuard;
    const IntervalReal num = eval_ln(prime_power_index(u, 1), w);
    const IntervalReal den = eval_ln(prime_power_index(u, 2), w);
    return narrow(num / den, bits);
}

ExponentValue x_exponent(const Factorization& f, const PrecisionConfig& cfg)
{
    cfg.validate();
    for (unsigned bits = cfg.initial_bits;; bits = std::min(bits * 2, cfg.max_bits)) {
        IntervalReal v = exponent_enclosure(f, bits);
        const bool ok = in_open_unit_to_two(v);
        if (ok || bits >= cfg.max_bits) {
            return {std::move(v), f, ok};
        }
    }
}

ExponentValue x_prime_power(const Natural& r, unsigned s, const PrecisionConfig& cfg)
{
    cfg.validate();
    const Factorization f = Factorization::prime_power(r, s);
    for (unsigned bits = cfg.initial_bits;; bits = std::min(bits * 2, cfg.max_bits)) {
        IntervalReal v = prime_power_exponent_enclosure(r, s, bits);
        const bool ok = in_open_unit_to_two(v);
        if (ok || bits >= cfg.max_bits) {
            return {std::move(v), f, ok};
        }
    }
}

const char* to_string(SandwichStatus s)
{
    switch (s) {
    case SandwichStatus::Holds:
        return "HOLDS";
    case SandwichStatus::Violated:
        return "VIOLATED";
    case SandwichStatus::Undecided:
        break;
    }
    return "UNDECIDED";
}

SandwichResult sandwich_check(const Factorization& fa, const Factorization& fb, const PrecisionConfig& cfg)
{
    cfg.validate();
    if (fa.is_one() || fb.is_one()) {
        throw DomainError("sandwich: both arguments must exceed 1");
    }
    if (!fa.coprime_to(fb)) {
        throw DomainError("sandwich: " + fa.str() + " and " + fb.str() + " are not coprime");
    }
    const Factorization fab = fa * fb;
    for (unsigned bits = cfg.initial_bits;; bits = std::min(bits * 2, cfg.max_bits)) {
        IntervalReal xa = exponent_enclosure(fa, bits);
        IntervalReal xb = exponent_enclosure(fb, bits);
        IntervalReal xab = exponent_enclosure(fab, bits);
        SandwichStatus status = SandwichStatus::Undecided;
        const Ordering ab = compare(xa, xb);
        if (ab != Ordering::Undecided) {
            const IntervalReal& low = ab == Ordering::Less ? xa : xb;
            const IntervalReal& high = ab == Ordering::Less ? xb : xa;
            const Ordering above_low = compare(xab, low);
            const Ordering below_high = compare(xab, high);
            if (above_low == Ordering::Greater && below_high == Ordering::Less) {
                status = SandwichStatus::Holds;
            } else if (above_low == Ordering::Less || below_high == Ordering::Greater) {
                status = SandwichStatus::Violated;
            }
        }
        if (status != SandwichStatus::Undecided || bits >= cfg.max_bits) {
            return {status, std::move(xa), std::move(xb), std::move(xab), bits};
        }
    }
}

IntervalReal index_lower_bound_enclosure(const Ratio& L, const Natural& u, unsigned bits)
{
    if (L <= Ratio(1)) {
        throw DomainError("index lower bound: L must exceed 1, got " + L.str());
    }
    if (!u.is_odd()) {
        throw DomainError("index lower bound: u must be an odd prime");
    }
    const unsigned w = bits + kInnerGuard;
    return narrow(eval_pow(L, reciprocal_exponent_enclosure(u, w), w), bits);
}

IntervalReal index_lower_bound_from_square(const Ratio& L, const Natural& u, const PrecisionConfig& cfg)
{
    cfg.validate();
    return index_lower_bound_enclosure(L, u, cfg.initial_bits);
}

} // namespace opnkit
