#include "opnkit/ratio.hpp"

#include <cctype>
#include <ostream>

#include "opnkit/error.hpp"

namespace opnkit {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

Ratio::Ratio(std::int64_t v) : value_(mpz_class(std::to_string(v), 10)) {}

Ratio::Ratio(const Natural& v) : value_(v.mpz()) {}

Ratio::Ratio(const Natural& num, const Natural& den)
{
    if (den.is_zero()) {
        throw DomainError("Ratio: zero denominator");
    }
    value_ = mpq_class(num.mpz(), den.mpz());
    value_.canonicalize();
}

Ratio::Ratio(const mpq_class& v) : value_(v)
{
    if (sgn(value_.get_den()) == 0) {
        throw DomainError("Ratio: zero denominator");
    }
    value_.canonicalize();
}

Ratio Ratio::of(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw DomainError("Ratio: zero denominator");
    }
    mpq_class q(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
    q.canonicalize();
    return Ratio(q);
}

Ratio Ratio::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    mpq_class q;
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const auto n = body.substr(0, slash);
        const auto d = body.substr(slash + 1);
        if (!all_digits(n) || !all_digits(d)) {
            throw ParseError("not a rational: '" + std::string(text) + "'");
        }
        mpz_class den(std::string(d), 10);
        if (sgn(den) == 0) {
            throw ParseError("zero denominator: '" + std::string(text) + "'");
        }
        q = mpq_class(mpz_class(std::string(n), 10), den);
    } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const auto ip = body.substr(0, dot);
        const auto fp = body.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp)) {
            throw ParseError("not a decimal: '" + std::string(text) + "'");
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        const mpz_class whole(ip.empty() ? std::string("0") : std::string(ip), 10);
        const mpz_class frac(std::string(fp), 10);
        q = mpq_class(whole * scale + frac, scale);
    } else {
        if (!all_digits(body)) {
            throw ParseError("not a rational: '" + std::string(text) + "'");
        }
        q = mpq_class(mpz_class(std::string(body), 10));
    }
    q.canonicalize();
    if (negative) {
        q = -q;
    }
    return Ratio(q);
}

std::string Ratio::str() const
{
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_str();
}

Ratio& Ratio::operator/=(const Ratio& o)
{
    if (o.sign() == 0) {
        throw DomainError("Ratio: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Ratio& r)
{
    return os << r.str();
}

Ratio pow(const Ratio& r, unsigned e)
{
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), r.mpq().get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), r.mpq().get_den_mpz_t(), e);
    return Ratio(mpq_class(n, d));
}

} // namespace opnkit
