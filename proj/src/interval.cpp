#include "opnkit/interval.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>

#include "opnkit/error.hpp"

namespace opnkit {

namespace {

constexpr unsigned kGuardBits = 32;
// exp() arguments are reduced by 2^s with s = exponent + kExpShift.
constexpr long kExpShift = 10;
constexpr mpfr_exp_t kExpArgLimit = 24;

Float rounded(const Float& src, mpfr_prec_t bits, mpfr_rnd_t rnd)
{
    Float out(bits);
    mpfr_set(out.get(), src.get(), rnd);
    return out;
}

IntervalReal make(const Float& lo, const Float& hi, unsigned bits)
{
    return {rounded(lo, bits, MPFR_RNDD), rounded(hi, bits, MPFR_RNDU), bits};
}

IntervalReal zero_interval(unsigned bits)
{
    return {Float(bits), Float(bits), bits};
}

std::string take(char* s)
{
    const std::unique_ptr<char, void (*)(char*)> guard(s, [](char* p) { mpfr_free_str(p); });
    return std::string(s);
}

// Enclosure of atanh(z) for 0 <= z < 1 at working precision w.
std::pair<Float, Float> atanh_series(const Ratio& z, mpfr_prec_t w)
{
    Float lo(w);
    Float hi(w);
    if (z.sign() == 0) {
        return {lo, hi};
    }
    Float zl(w);
    Float zh(w);
    mpfr_set_q(zl.get(), z.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(zh.get(), z.mpq().get_mpq_t(), MPFR_RNDU);
    Float z2l(w);
    Float z2h(w);
    mpfr_sqr(z2l.get(), zl.get(), MPFR_RNDD);
    mpfr_sqr(z2h.get(), zh.get(), MPFR_RNDU);

    Float pl = zl;
    Float ph = zh;
    Float tl(w);
    Float th(w);
    for (unsigned long j = 0;; ++j) {
        const unsigned long d = 2 * j + 1;
        mpfr_div_ui(tl.get(), pl.get(), d, MPFR_RNDD);
        mpfr_div_ui(th.get(), ph.get(), d, MPFR_RNDU);
        mpfr_add(lo.get(), lo.get(), tl.get(), MPFR_RNDD);
        mpfr_add(hi.get(), hi.get(), th.get(), MPFR_RNDU);
        // ph bounds z^(2j+3), the numerator of the first omitted term.
        mpfr_mul(pl.get(), pl.get(), z2l.get(), MPFR_RNDD);
        mpfr_mul(ph.get(), ph.get(), z2h.get(), MPFR_RNDU);
        if (mpfr_zero_p(ph.get()) != 0 || mpfr_get_exp(ph.get()) < mpfr_get_exp(lo.get()) - w - 4) {
            // Tail sum_{i>j} z^(2i+1)/(2i+1) <= z^(2j+3) / ((2j+3)(1 - z^2)).
            Float den(w);
            mpfr_ui_sub(den.get(), 1, z2h.get(), MPFR_RNDD);
            mpfr_mul_ui(den.get(), den.get(), d + 2, MPFR_RNDD);
            Float tail(w);
            mpfr_div(tail.get(), ph.get(), den.get(), MPFR_RNDU);
            mpfr_add(hi.get(), hi.get(), tail.get(), MPFR_RNDU);
            break;
        }
    }
    return {std::move(lo), std::move(hi)};
}

std::pair<Float, Float> ln2_enclosure(mpfr_prec_t w)
{
    auto [lo, hi] = atanh_series(Ratio::of(1, 3), w);
    mpfr_mul_2ui(lo.get(), lo.get(), 1, MPFR_RNDD);
    mpfr_mul_2ui(hi.get(), hi.get(), 1, MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

// Enclosure of exp(a) for an exact dyadic a at working precision w.
std::pair<Float, Float> exp_point(const Float& a, mpfr_prec_t w)
{
    if (mpfr_zero_p(a.get()) != 0) {
        Float one(w);
        mpfr_set_ui(one.get(), 1, MPFR_RNDN);
        return {one, one};
    }
    if (mpfr_get_exp(a.get()) > kExpArgLimit) {
        throw DomainError("exp: argument magnitude too large");
    }
    if (mpfr_sgn(a.get()) < 0) {
        Float neg(a.bits());
        mpfr_neg(neg.get(), a.get(), MPFR_RNDN);
        auto [l, h] = exp_point(neg, w);
        Float lo(w);
        Float hi(w);
        mpfr_ui_div(lo.get(), 1, h.get(), MPFR_RNDD);
        mpfr_ui_div(hi.get(), 1, l.get(), MPFR_RNDU);
        return {std::move(lo), std::move(hi)};
    }

    const long s = std::max<long>(0, mpfr_get_exp(a.get()) + kExpShift);
    const mpfr_prec_t wp = w + s + 16;
    Float t(a.bits());
    mpfr_div_2si(t.get(), a.get(), s, MPFR_RNDN); // exact
    // t < 2^-10, so the Taylor tail after term T_k is below 2 T_k t/(k+1).
    Float lo(wp);
    Float hi(wp);
    mpfr_set_ui(lo.get(), 1, MPFR_RNDN);
    mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
    Float tl = lo;
    Float th = hi;
    for (unsigned long k = 1;; ++k) {
        mpfr_mul(tl.get(), tl.get(), t.get(), MPFR_RNDD);
        mpfr_div_ui(tl.get(), tl.get(), k, MPFR_RNDD);
        mpfr_mul(th.get(), th.get(), t.get(), MPFR_RNDU);
        mpfr_div_ui(th.get(), th.get(), k, MPFR_RNDU);
        mpfr_add(lo.get(), lo.get(), tl.get(), MPFR_RNDD);
        mpfr_add(hi.get(), hi.get(), th.get(), MPFR_RNDU);
        if (mpfr_get_exp(th.get()) < -wp - 2) {
            mpfr_mul_2ui(th.get(), th.get(), 1, MPFR_RNDU);
            mpfr_add(hi.get(), hi.get(), th.get(), MPFR_RNDU);
            break;
        }
    }
    for (long i = 0; i < s; ++i) {
        mpfr_sqr(lo.get(), lo.get(), MPFR_RNDD);
        mpfr_sqr(hi.get(), hi.get(), MPFR_RNDU);
    }
    return {std::move(lo), std::move(hi)};
}

mpfr_prec_t endpoint_bits(const IntervalReal& a, const IntervalReal& b)
{
    return std::max({a.lo().bits(), a.hi().bits(), b.lo().bits(), b.hi().bits()});
}

unsigned label_bits(const IntervalReal& a, const IntervalReal& b)
{
    return std::min(a.precision(), b.precision());
}

} // namespace

// ---------------------------------------------------------------------------
// Float

Float::Float(mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
    live_ = true;
}

Float::Float(const Float& o)
{
    mpfr_init2(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
    live_ = true;
}

Float::Float(Float&& o) noexcept
{
    // MPFR has no move; steal the limbs by swapping with a minimal value.
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
    live_ = true;
}

Float& Float::operator=(const Float& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.bits());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Float& Float::operator=(Float&& o) noexcept
{
    if (this != &o) {
        mpfr_swap(v_, o.v_);
    }
    return *this;
}

Float::~Float()
{
    if (live_) {
        mpfr_clear(v_);
    }
}

Ratio Float::to_ratio() const
{
    if (mpfr_number_p(v_) == 0) {
        throw DomainError("Float: not a finite number");
    }
    mpz_class m;
    const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    mpq_class q(m);
    if (e >= 0) {
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return Ratio(q);
}

// ---------------------------------------------------------------------------
// PrecisionConfig

void PrecisionConfig::validate() const
{
    if (initial_bits < 2 || initial_bits > max_bits) {
        throw DomainError("precision: need 2 <= initial_bits <= max_bits");
    }
}

PrecisionConfig PrecisionConfig::from_env()
{
    PrecisionConfig cfg;
    if (const char* env = std::getenv("OPNKIT_PRECISION_BITS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v < 2 || v > (1UL << 20)) {
            throw DomainError("OPNKIT_PRECISION_BITS: expected an integer >= 2");
        }
        cfg.initial_bits = static_cast<unsigned>(v);
        cfg.max_bits = std::max(cfg.max_bits, cfg.initial_bits);
    }
    return cfg;
}

const char* to_string(Ordering o)
{
    switch (o) {
    case Ordering::Less:
        return "LESS";
    case Ordering::Greater:
        return "GREATER";
    case Ordering::Undecided:
        break;
    }
    return "UNDECIDED";
}

// ---------------------------------------------------------------------------
// IntervalReal

IntervalReal::IntervalReal(Float lo, Float hi, unsigned precision)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_(precision)
{
    if (mpfr_number_p(lo_.get()) == 0 || mpfr_number_p(hi_.get()) == 0) {
        throw std::logic_error("IntervalReal: non-finite endpoint");
    }
    if (mpfr_greater_p(lo_.get(), hi_.get()) != 0) {
        throw std::logic_error("IntervalReal: lo > hi");
    }
}

IntervalReal IntervalReal::exact(const Ratio& r, unsigned bits)
{
    Float lo(bits);
    Float hi(bits);
    mpfr_set_q(lo.get(), r.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), r.mpq().get_mpq_t(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), bits};
}

Float IntervalReal::width() const
{
    Float w(std::max(lo_.bits(), hi_.bits()));
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
}

double IntervalReal::width_upper() const
{
    return mpfr_get_d(width().get(), MPFR_RNDU);
}

bool IntervalReal::contains(const Ratio& r) const
{
    return mpfr_cmp_q(lo_.get(), r.mpq().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), r.mpq().get_mpq_t()) >= 0;
}

bool IntervalReal::is_point() const
{
    return mpfr_equal_p(lo_.get(), hi_.get()) != 0;
}

std::string IntervalReal::str(int max_digits) const
{
    const std::string bits = " @" + std::to_string(precision_) + "b";
    if (mpfr_zero_p(lo_.get()) != 0 && mpfr_zero_p(hi_.get()) != 0) {
        return "0 ± 0" + bits;
    }
    const mpfr_prec_t p = std::max(lo_.bits(), hi_.bits()) + 2;
    Float mid(p);
    mpfr_add(mid.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    Float r1(p);
    Float r2(p);
    mpfr_sub(r1.get(), hi_.get(), mid.get(), MPFR_RNDU);
    mpfr_sub(r2.get(), mid.get(), lo_.get(), MPFR_RNDU);
    if (mpfr_less_p(r1.get(), r2.get()) != 0) {
        r1 = r2;
    }

    int digits = max_digits;
    if (mpfr_zero_p(r1.get()) == 0) {
        const double log10_rad = static_cast<double>(mpfr_get_exp(r1.get())) * 0.30102999566398120;
        digits = std::clamp(static_cast<int>(-std::floor(log10_rad)) + 1, 1, max_digits);
    }
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*RNf", digits, mid.get());
    const std::string mid_text = take(raw);

    // radius + 10^-digits / 2, rounded up, covers the decimal midpoint.
    Float half_ulp(64);
    mpfr_ui_pow_ui(half_ulp.get(), 10, static_cast<unsigned long>(digits), MPFR_RNDD);
    mpfr_ui_div(half_ulp.get(), 1, half_ulp.get(), MPFR_RNDU);
    mpfr_div_2ui(half_ulp.get(), half_ulp.get(), 1, MPFR_RNDU);
    mpfr_add(r1.get(), r1.get(), half_ulp.get(), MPFR_RNDU);
    mpfr_asprintf(&raw, "%.0RUe", r1.get());
    return mid_text + " ± " + take(raw) + bits;
}

std::string IntervalReal::lo_str(int sig) const
{
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*RDe", sig - 1, lo_.get());
    return take(raw);
}

std::string IntervalReal::hi_str(int sig) const
{
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*RUe", sig - 1, hi_.get());
    return take(raw);
}

// ---------------------------------------------------------------------------
// Arithmetic

IntervalReal operator+(const IntervalReal& a, const IntervalReal& b)
{
    const auto p = endpoint_bits(a, b);
    Float lo(p);
    Float hi(p);
    mpfr_add(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
    mpfr_add(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), label_bits(a, b)};
}

IntervalReal operator-(const IntervalReal& a, const IntervalReal& b)
{
    const auto p = endpoint_bits(a, b);
    Float lo(p);
    Float hi(p);
    mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
    mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), label_bits(a, b)};
}

IntervalReal operator-(const IntervalReal& a)
{
    Float lo(a.hi().bits());
    Float hi(a.lo().bits());
    mpfr_neg(lo.get(), a.hi().get(), MPFR_RNDD);
    mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), a.precision()};
}

namespace {

template <class Op>
IntervalReal corner_hull(const IntervalReal& a, const IntervalReal& b, Op op)
{
    const auto p = endpoint_bits(a, b);
    const mpfr_srcptr xs[2] = {a.lo().get(), a.hi().get()};
    const mpfr_srcptr ys[2] = {b.lo().get(), b.hi().get()};
    Float lo(p);
    Float hi(p);
    Float t(p);
    bool first = true;
    for (const auto x : xs) {
        for (const auto y : ys) {
            op(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), lo.get()) != 0) {
                mpfr_set(lo.get(), t.get(), MPFR_RNDD);
            }
            op(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), hi.get()) != 0) {
                mpfr_set(hi.get(), t.get(), MPFR_RNDU);
            }
            first = false;
        }
    }
    return {std::move(lo), std::move(hi), label_bits(a, b)};
}

} // namespace

IntervalReal operator*(const IntervalReal& a, const IntervalReal& b)
{
    return corner_hull(a, b, mpfr_mul);
}

IntervalReal operator/(const IntervalReal& a, const IntervalReal& b)
{
    if (mpfr_sgn(b.lo().get()) <= 0 && mpfr_sgn(b.hi().get()) >= 0) {
        throw DomainError("interval division: divisor contains zero");
    }
    return corner_hull(a, b, mpfr_div);
}

bool overlaps(const IntervalReal& a, const IntervalReal& b)
{
    return mpfr_less_p(a.hi().get(), b.lo().get()) == 0 && mpfr_less_p(b.hi().get(), a.lo().get()) == 0;
}

// ---------------------------------------------------------------------------
// Elementary functions

IntervalReal ln2(unsigned bits)
{
    const auto [lo, hi] = ln2_enclosure(bits + kGuardBits);
    return make(lo, hi, bits);
}

IntervalReal eval_ln(const Ratio& r, unsigned bits)
{
    if (r.sign() <= 0) {
        throw DomainError("ln: argument must be positive, got " + r.str());
    }
    if (r == Ratio(1)) {
        return zero_interval(bits);
    }
    const mpfr_prec_t w = bits + kGuardBits;

    // Reduce to y = r / 2^k with y in [2/3, 4/3] unless r is already in [1/2, 2].
    long k = 0;
    mpq_class y = r.mpq();
    if (r > Ratio(2) || r < Ratio::of(1, 2)) {
        k = static_cast<long>(mpz_sizeinbase(y.get_num_mpz_t(), 2)) -
            static_cast<long>(mpz_sizeinbase(y.get_den_mpz_t(), 2));
        if (k > 0) {
            mpq_div_2exp(y.get_mpq_t(), y.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
        } else if (k < 0) {
            mpq_mul_2exp(y.get_mpq_t(), y.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
        }
        const mpq_class upper(4, 3);
        const mpq_class lower(2, 3);
        while (y > upper) {
            mpq_div_2exp(y.get_mpq_t(), y.get_mpq_t(), 1);
            ++k;
        }
        while (y < lower) {
            mpq_mul_2exp(y.get_mpq_t(), y.get_mpq_t(), 1);
            --k;
        }
    }

    mpq_class z = (y - 1) / (y + 1);
    z.canonicalize();
    const bool negative = sgn(z) < 0;
    auto [al, ah] = atanh_series(Ratio(mpq_class(abs(z))), w);
    mpfr_mul_2ui(al.get(), al.get(), 1, MPFR_RNDD);
    mpfr_mul_2ui(ah.get(), ah.get(), 1, MPFR_RNDU);
    Float lo(w);
    Float hi(w);
    if (negative) {
        mpfr_neg(lo.get(), ah.get(), MPFR_RNDD);
        mpfr_neg(hi.get(), al.get(), MPFR_RNDU);
    } else {
        lo = std::move(al);
        hi = std::move(ah);
    }

    if (k != 0) {
        const auto [l2lo, l2hi] = ln2_enclosure(w);
        Float klo(w);
        Float khi(w);
        if (k > 0) {
            mpfr_mul_si(klo.get(), l2lo.get(), k, MPFR_RNDD);
            mpfr_mul_si(khi.get(), l2hi.get(), k, MPFR_RNDU);
        } else {
            mpfr_mul_si(klo.get(), l2hi.get(), k, MPFR_RNDD);
            mpfr_mul_si(khi.get(), l2lo.get(), k, MPFR_RNDU);
        }
        mpfr_add(lo.get(), lo.get(), klo.get(), MPFR_RNDD);
        mpfr_add(hi.get(), hi.get(), khi.get(), MPFR_RNDU);
    }
    return make(lo, hi, bits);
}

IntervalReal eval_ln(const IntervalReal& x, unsigned bits)
{
    if (mpfr_sgn(x.lo().get()) <= 0) {
        throw DomainError("ln: interval argument must be strictly positive");
    }
    const IntervalReal at_lo = eval_ln(x.lo().to_ratio(), bits);
    if (x.is_point()) {
        return at_lo;
    }
    const IntervalReal at_hi = eval_ln(x.hi().to_ratio(), bits);
    return {at_lo.lo(), at_hi.hi(), bits};
}

IntervalReal eval_exp(const IntervalReal& x, unsigned bits)
{
    const mpfr_prec_t w = bits + kGuardBits;
    auto lo = exp_point(x.lo(), w).first;
    auto hi = exp_point(x.hi(), w).second;
    return make(lo, hi, bits);
}

IntervalReal eval_pow(const IntervalReal& base, const IntervalReal& exponent, unsigned bits)
{
    if (mpfr_sgn(base.lo().get()) <= 0) {
        throw DomainError("pow: base interval must be strictly positive");
    }
    const unsigned w = bits + kGuardBits;
    const IntervalReal e = exponent * eval_ln(base, w);
    const IntervalReal r = eval_exp(e, w);
    return make(r.lo(), r.hi(), bits);
}

IntervalReal eval_pow(const Ratio& base, const IntervalReal& exponent, unsigned bits)
{
    if (base.sign() <= 0) {
        throw DomainError("pow: base must be positive, got " + base.str());
    }
    const unsigned w = bits + kGuardBits;
    const IntervalReal e = exponent * eval_ln(base, w);
    const IntervalReal r = eval_exp(e, w);
    return make(r.lo(), r.hi(), bits);
}

IntervalReal eval_sqrt(const Ratio& r, unsigned bits)
{
    if (r.sign() < 0) {
        throw DomainError("sqrt: negative argument " + r.str());
    }
    if (r.sign() == 0) {
        return zero_interval(bits);
    }
    const mpz_class a = r.num();
    const mpz_class b = r.den();
    const long skew = static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)) -
                      static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
    const auto m = static_cast<mp_bitcnt_t>(bits + 8 + std::max<long>(0, skew / 2 + 2));
    // t = floor(r * 4^m), s = isqrt(t): s <= sqrt(r * 4^m) < s + 1.
    mpz_class t = a;
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 2 * m);
    mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), b.get_mpz_t());
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    Float lo(bits);
    Float hi(bits);
    mpfr_set_z_2exp(lo.get(), s.get_mpz_t(), -static_cast<mpfr_exp_t>(m), MPFR_RNDD);
    s += 1;
    mpfr_set_z_2exp(hi.get(), s.get_mpz_t(), -static_cast<mpfr_exp_t>(m), MPFR_RNDU);
    return {std::move(lo), std::move(hi), bits};
}

// ---------------------------------------------------------------------------
// Comparison

Ordering compare(const IntervalReal& x, const Ratio& r)
{
    if (mpfr_cmp_q(x.hi().get(), r.mpq().get_mpq_t()) < 0) {
        return Ordering::Less;
    }
    if (mpfr_cmp_q(x.lo().get(), r.mpq().get_mpq_t()) > 0) {
        return Ordering::Greater;
    }
    return Ordering::Undecided;
}

Ordering compare(const IntervalReal& x, const IntervalReal& y)
{
    if (mpfr_less_p(x.hi().get(), y.lo().get()) != 0) {
        return Ordering::Less;
    }
    if (mpfr_greater_p(x.lo().get(), y.hi().get()) != 0) {
        return Ordering::Greater;
    }
    return Ordering::Undecided;
}

} // namespace opnkit
