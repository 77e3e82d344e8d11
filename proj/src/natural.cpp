#include "opnkit/natural.hpp"

#include <cctype>
#include <ostream>

#include "opnkit/error.hpp"

namespace opnkit {

namespace {

// mpz_class has no uint64_t constructor on every platform; go through the
// two 32-bit halves so LP64 and LLP64 agree.
mpz_class from_u64(std::uint64_t v)
{
    mpz_class hi(static_cast<unsigned long>(v >> 32));
    mpz_class lo(static_cast<unsigned long>(v & 0xffffffffULL));
    return (hi << 32) + lo;
}

} // namespace

Natural::Natural(std::uint64_t v) : value_(from_u64(v)) {}

Natural::Natural(const mpz_class& v) : value_(v)
{
    if (sgn(value_) < 0) {
        throw DomainError("Natural: negative value");
    }
}

Natural::Natural(mpz_class&& v) : value_(std::move(v))
{
    if (sgn(value_) < 0) {
        throw DomainError("Natural: negative value");
    }
}

Natural Natural::parse(std::string_view digits)
{
    if (digits.empty()) {
        throw ParseError("empty integer");
    }
    for (const char c : digits) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            throw ParseError("not a non-negative decimal integer: '" + std::string(digits) + "'");
        }
    }
    return Natural(mpz_class(std::string(digits), 10));
}

Natural Natural::pow(const Natural& base, std::uint64_t exponent)
{
    if (exponent > 0xffffffffULL) {
        throw DomainError("Natural::pow: exponent too large");
    }
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.value_.get_mpz_t(), static_cast<unsigned long>(exponent));
    return Natural(std::move(r));
}

Natural Natural::mersenne(std::uint64_t e)
{
    mpz_class r;
    mpz_setbit(r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    r -= 1;
    return Natural(std::move(r));
}

bool Natural::fits_u64() const noexcept
{
    return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t Natural::to_u64() const
{
    if (!fits_u64()) {
        throw DomainError("Natural: value does not fit in 64 bits");
    }
    const mpz_class hi = value_ >> 32;
    const mpz_class lo = value_ & mpz_class(0xffffffffUL);
    return (static_cast<std::uint64_t>(hi.get_ui()) << 32) | lo.get_ui();
}

std::optional<std::uint64_t> Natural::try_u64() const
{
    if (!fits_u64()) {
        return std::nullopt;
    }
    return to_u64();
}

std::size_t Natural::bit_length() const noexcept
{
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural& Natural::operator+=(const Natural& o)
{
    value_ += o.value_;
    return *this;
}

Natural& Natural::operator-=(const Natural& o)
{
    if (value_ < o.value_) {
        throw DomainError("Natural: subtraction would be negative");
    }
    value_ -= o.value_;
    return *this;
}

Natural& Natural::operator*=(const Natural& o)
{
    value_ *= o.value_;
    return *this;
}

Natural& Natural::operator/=(const Natural& o)
{
    if (o.is_zero()) {
        throw DomainError("Natural: division by zero");
    }
    mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
    return *this;
}

Natural& Natural::operator%=(const Natural& o)
{
    if (o.is_zero()) {
        throw DomainError("Natural: modulo by zero");
    }
    mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n)
{
    return os << n.value_;
}

Natural gcd(const Natural& a, const Natural& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Natural(std::move(g));
}

Natural isqrt(const Natural& n)
{
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.mpz().get_mpz_t());
    return Natural(std::move(r));
}

} // namespace opnkit
