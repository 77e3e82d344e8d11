#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include <mpfr.h>

#include "opnkit/ratio.hpp"

namespace opnkit {

/// Owning MPFR value. Only used as an interval endpoint.
class Float {
public:
    explicit Float(mpfr_prec_t bits);
    Float(const Float& o);
    Float(Float&& o) noexcept;
    Float& operator=(const Float& o);
    Float& operator=(Float&& o) noexcept;
    ~Float();

    [[nodiscard]] mpfr_ptr get() noexcept { return v_; }
    [[nodiscard]] mpfr_srcptr get() const noexcept { return v_; }
    [[nodiscard]] mpfr_prec_t bits() const noexcept { return mpfr_get_prec(v_); }
    /// The exact dyadic value.
    [[nodiscard]] Ratio to_ratio() const;

private:
    mpfr_t v_;
    bool live_ = false;
};

/// Working precision and its escalation ceiling. Escalation doubles.
struct PrecisionConfig {
    unsigned initial_bits = 256;
    unsigned max_bits = 4096;

    /// Throws DomainError unless 2 <= initial_bits <= max_bits.
    void validate() const;
    /// Defaults, with initial_bits taken from OPNKIT_PRECISION_BITS when set.
    static PrecisionConfig from_env();
};

enum class Ordering { Less, Greater, Undecided };

const char* to_string(Ordering o);

/// Rigorous enclosure [lo, hi] of a real number.
///
/// Every operation rounds outward, so the true value of any expression built
/// from these functions lies inside the resulting interval. `precision` is the
/// working precision (bits) the enclosure was produced at.
class IntervalReal {
public:
    IntervalReal(Float lo, Float hi, unsigned precision);

    /// Outward-rounded enclosure of an exact rational.
    static IntervalReal exact(const Ratio& r, unsigned bits);

    [[nodiscard]] const Float& lo() const noexcept { return lo_; }
    [[nodiscard]] const Float& hi() const noexcept { return hi_; }
    [[nodiscard]] unsigned precision() const noexcept { return precision_; }

    /// hi - lo rounded up.
    [[nodiscard]] Float width() const;
    [[nodiscard]] double width_upper() const;
    [[nodiscard]] bool contains(const Ratio& r) const;
    [[nodiscard]] bool is_point() const;

    /// `mid ± radius @<bits>b`. The printed radius covers the decimal
    /// rounding of the midpoint as well as the enclosure itself.
    [[nodiscard]] std::string str(int max_digits = 20) const;
    /// Lower endpoint as a decimal rounded down, `sig` significant digits.
    [[nodiscard]] std::string lo_str(int sig = 30) const;
    /// Upper endpoint as a decimal rounded up.
    [[nodiscard]] std::string hi_str(int sig = 30) const;

private:
    Float lo_;
    Float hi_;
    unsigned precision_;
};

IntervalReal operator+(const IntervalReal& a, const IntervalReal& b);
IntervalReal operator-(const IntervalReal& a, const IntervalReal& b);
IntervalReal operator*(const IntervalReal& a, const IntervalReal& b);
/// Throws DomainError when b contains zero.
IntervalReal operator/(const IntervalReal& a, const IntervalReal& b);
IntervalReal operator-(const IntervalReal& a);

/// True when the two enclosures share at least one point.
bool overlaps(const IntervalReal& a, const IntervalReal& b);

/// ln(r) for r > 0: argument reduction by powers of two, then the series
/// ln y = 2 atanh((y - 1)/(y + 1)) with its truncation remainder folded into
/// the upper bound.
IntervalReal eval_ln(const Ratio& r, unsigned bits);
/// ln over an interval; requires lo > 0.
IntervalReal eval_ln(const IntervalReal& x, unsigned bits);
IntervalReal eval_exp(const IntervalReal& x, unsigned bits);
/// base^exponent = exp(exponent * ln(base)); base must be strictly positive.
IntervalReal eval_pow(const IntervalReal& base, const IntervalReal& exponent, unsigned bits);
IntervalReal eval_pow(const Ratio& base, const IntervalReal& exponent, unsigned bits);
/// sqrt(r), r >= 0, from an integer square root of r * 4^m.
IntervalReal eval_sqrt(const Ratio& r, unsigned bits);
IntervalReal ln2(unsigned bits);

/// Less iff hi < r, Greater iff lo > r, otherwise Undecided.
Ordering compare(const IntervalReal& x, const Ratio& r);
/// Less iff x.hi < y.lo, Greater iff x.lo > y.hi.
Ordering compare(const IntervalReal& x, const IntervalReal& y);

struct Decision {
    Ordering order;
    IntervalReal value;
    unsigned bits;
};

struct PairDecision {
    Ordering order;
    IntervalReal lhs;
    IntervalReal rhs;
    unsigned bits;
};

/// Re-evaluates `eval(bits)` at doubling precision until the enclosure is
/// strictly on one side of `threshold`, or max_bits is reached.
template <class Eval>
Decision decide(Eval&& eval, const Ratio& threshold, const PrecisionConfig& cfg)
{
    for (unsigned bits = cfg.initial_bits;; bits = std::min(bits * 2, cfg.max_bits)) {
        IntervalReal v = eval(bits);
        const Ordering o = compare(v, threshold);
        if (o != Ordering::Undecided || bits >= cfg.max_bits) {
            return {o, std::move(v), bits};
        }
    }
}

/// Same escalation for two evaluated quantities.
template <class EvalA, class EvalB>
PairDecision decide_pair(EvalA&& lhs, EvalB&& rhs, const PrecisionConfig& cfg)
{
    for (unsigned bits = cfg.initial_bits;; bits = std::min(bits * 2, cfg.max_bits)) {
        IntervalReal a = lhs(bits);
        IntervalReal b = rhs(bits);
        const Ordering o = compare(a, b);
        if (o != Ordering::Undecided || bits >= cfg.max_bits) {
            return {o, std::move(a), std::move(b), bits};
        }
    }
}

} // namespace opnkit
