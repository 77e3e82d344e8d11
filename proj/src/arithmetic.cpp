#include "opnkit/arithmetic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>

#include "opnkit/error.hpp"

namespace opnkit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m)
{
    u64 r = 1 % m;
    b %= m;
    while (e != 0) {
        if ((e & 1U) != 0) {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1U;
    }
    return r;
}

// Deterministic for every n < 3.3 * 10^24 with these twelve bases.
constexpr std::array<u64, 12> kWordWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
// Fixed schedule for multi-word candidates.
constexpr std::array<unsigned long, 20> kBigWitnesses{2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                                      31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

bool miller_rabin_u64(u64 n)
{
    if (n < 2) {
        return false;
    }
    for (const u64 p : kWordWitnesses) {
        if (n % p == 0) {
            return n == p;
        }
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (const u64 a : kWordWitnesses) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

bool miller_rabin_mpz(const mpz_class& n)
{
    for (const unsigned long p : kBigWitnesses) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            return n == p;
        }
    }
    const mpz_class nm1 = n - 1;
    mpz_class d = nm1;
    const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    mpz_class x;
    for (const unsigned long a : kBigWitnesses) {
        mpz_class base(a);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) {
            continue;
        }
        bool composite = true;
        for (mp_bitcnt_t r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

const std::vector<u64>& small_primes()
{
    static const std::vector<u64> primes = primes_up_to(1U << 16);
    return primes;
}

// Pollard-Brent. Returns a nontrivial factor of the odd composite n.
u64 rho_u64(u64 n, u64& budget)
{
    for (u64 c = 1;; ++c) {
        u64 y = 2;
        u64 x = 2;
        u64 ys = 2;
        u64 q = 1;
        u64 g = 1;
        constexpr u64 kBatch = 128;
        const auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        for (u64 r = 1; g == 1; r <<= 1U) {
            x = y;
            for (u64 i = 0; i < r; ++i) {
                y = f(y);
            }
            for (u64 k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                const u64 lim = std::min(kBatch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                if (budget <= lim) {
                    throw EffortExceeded("factorize: rho iteration budget exhausted");
                }
                budget -= lim;
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

mpz_class rho_mpz(const mpz_class& n, u64& budget)
{
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2;
        mpz_class x = 2;
        mpz_class ys = 2;
        mpz_class q = 1;
        mpz_class g = 1;
        mpz_class diff;
        constexpr u64 kBatch = 128;
        const auto step = [&](mpz_class& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        for (u64 r = 1; g == 1; r <<= 1U) {
            x = y;
            for (u64 i = 0; i < r; ++i) {
                step(y);
            }
            for (u64 k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                const u64 lim = std::min(kBatch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    step(y);
                    diff = abs(x - y);
                    q = q * diff % n;
                }
                if (budget <= lim) {
                    throw EffortExceeded("factorize: rho iteration budget exhausted");
                }
                budget -= lim;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g == n) {
            do {
                step(ys);
                diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

using FactorMap = std::map<mpz_class, unsigned>;

void split_u64(u64 n, FactorMap& out, u64& budget)
{
    if (n == 1) {
        return;
    }
    if (miller_rabin_u64(n)) {
        out[mpz_class(Natural(n).mpz())] += 1;
        return;
    }
    const u64 d = rho_u64(n, budget);
    split_u64(d, out, budget);
    split_u64(n / d, out, budget);
}

void split_mpz(const mpz_class& n, FactorMap& out, u64& budget)
{
    if (n == 1) {
        return;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        split_u64(Natural(n).to_u64(), out, budget);
        return;
    }
    if (miller_rabin_mpz(n)) {
        out[n] += 1;
        return;
    }
    const mpz_class d = rho_mpz(n, budget);
    split_mpz(d, out, budget);
    split_mpz(n / d, out, budget);
}

std::vector<PrimePower> to_factors(const FactorMap& m)
{
    std::vector<PrimePower> v;
    v.reserve(m.size());
    for (const auto& [p, e] : m) {
        v.push_back({Natural(p), e});
    }
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Factorization Factorization::from_factors(std::vector<PrimePower> factors)
{
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].exponent == 0) {
            throw DomainError("factorization: exponent must be at least 1");
        }
        if (i > 0 && !(factors[i - 1].prime < factors[i].prime)) {
            throw DomainError("factorization: primes must be strictly increasing");
        }
        if (!is_prime(factors[i].prime)) {
            throw DomainError("factorization: " + factors[i].prime.str() + " is not prime");
        }
    }
    Factorization f;
    f.factors_ = std::move(factors);
    return f;
}

Factorization Factorization::prime_power(const Natural& p, unsigned e)
{
    return from_factors({PrimePower{p, e}});
}

Natural Factorization::value() const
{
    Natural v(1);
    for (const auto& [p, e] : factors_) {
        v *= Natural::pow(p, e);
    }
    return v;
}

Factorization Factorization::squared() const
{
    Factorization f = *this;
    for (auto& pp : f.factors_) {
        pp.exponent *= 2;
    }
    return f;
}

unsigned Factorization::exponent_of(const Natural& p) const
{
    const auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                                     [](const PrimePower& pp, const Natural& x) { return pp.prime < x; });
    return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

bool Factorization::coprime_to(const Factorization& other) const
{
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->prime == b->prime) {
            return false;
        }
        if (a->prime < b->prime) {
            ++a;
        } else {
            ++b;
        }
    }
    return true;
}

std::string Factorization::str() const
{
    if (factors_.empty()) {
        return "1";
    }
    std::string s;
    for (const auto& [p, e] : factors_) {
        if (!s.empty()) {
            s += '*';
        }
        s += p.str();
        if (e != 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s;
}

Factorization operator*(const Factorization& a, const Factorization& b)
{
    Factorization out;
    auto x = a.factors_.begin();
    auto y = b.factors_.begin();
    while (x != a.factors_.end() || y != b.factors_.end()) {
        if (y == b.factors_.end() || (x != a.factors_.end() && x->prime < y->prime)) {
            out.factors_.push_back(*x++);
        } else if (x == a.factors_.end() || y->prime < x->prime) {
            out.factors_.push_back(*y++);
        } else {
            out.factors_.push_back({x->prime, x->exponent + y->exponent});
            ++x;
            ++y;
        }
    }
    return out;
}

bool is_prime(std::uint64_t n)
{
    return miller_rabin_u64(n);
}

bool is_prime(const Natural& n)
{
    if (const auto v = n.try_u64()) {
        return miller_rabin_u64(*v);
    }
    return miller_rabin_mpz(n.mpz());
}

Factorization factorize(const Natural& n, const FactorizeOptions& opts)
{
    if (n.is_zero()) {
        throw DomainError("factorize: n must be at least 1");
    }
    if (n.bit_length() > opts.max_bits) {
        throw EffortExceeded("factorize: " + std::to_string(n.bit_length()) + "-bit input exceeds budget");
    }
    FactorMap found;
    u64 budget = opts.rho_iterations;

    if (const auto small = n.try_u64()) {
        u64 m = *small;
        for (const u64 p : small_primes()) {
            if (p > opts.trial_limit || p * p > m) {
                break;
            }
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e != 0) {
                found[mpz_class(Natural(p).mpz())] = e;
            }
        }
        split_u64(m, found, budget);
        Factorization f;
        f.factors_ = to_factors(found);
        return f;
    }

    mpz_class m = n.mpz();
    for (const u64 p : small_primes()) {
        if (p > opts.trial_limit) {
            break;
        }
        const auto pl = static_cast<unsigned long>(p);
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), pl) != 0) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), pl);
            ++e;
        }
        if (e != 0) {
            found[mpz_class(pl)] = e;
        }
        if (m == 1) {
            break;
        }
    }
    split_mpz(m, found, budget);
    // Entries come from the splitter's primality tests; no re-validation.
    Factorization f;
    f.factors_ = to_factors(found);
    return f;
}

std::size_t omega(const Factorization& f)
{
    return f.size();
}

unsigned valuation(const Natural& p, const Factorization& f)
{
    if (!is_prime(p)) {
        throw DomainError("valuation: " + p.str() + " is not prime");
    }
    return f.exponent_of(p);
}

Natural sigma(const Factorization& f)
{
    Natural s(1);
    for (const auto& [p, e] : f.factors()) {
        // (p^(e+1) - 1) / (p - 1), exact.
        Natural num = Natural::pow(p, std::uint64_t{e} + 1) - Natural(1);
        s *= num / (p - Natural(1));
    }
    return s;
}

Natural sigma_oracle(const Natural& n, std::uint64_t cap)
{
    if (n.is_zero()) {
        throw DomainError("sigma_oracle: n must be at least 1");
    }
    if (!n.fits_u64() || n.to_u64() > cap) {
        throw DomainError("sigma_oracle: n exceeds the oracle cap " + std::to_string(cap));
    }
    const u64 v = n.to_u64();
    u64 total = 0;
    for (u64 d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            total += d;
            if (d != v / d) {
                total += v / d;
            }
        }
    }
    return Natural(total);
}

bool is_perfect(const Natural& n, const FactorizeOptions& opts)
{
    return sigma(factorize(n, opts)) == n * Natural(2);
}

Factorization parse_factored(std::string_view text, const FactorizeOptions& opts)
{
    const auto body = trim(text);
    if (body.empty()) {
        throw ParseError("empty factored integer");
    }
    if (body.find_first_of("^*") == std::string_view::npos) {
        return factorize(Natural::parse(body), opts);
    }
    std::vector<PrimePower> factors;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const auto star = body.find('*', pos);
        const auto term = trim(body.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
        const auto caret = term.find('^');
        PrimePower pp;
        pp.prime = Natural::parse(trim(term.substr(0, caret)));
        if (caret != std::string_view::npos) {
            const auto e = Natural::parse(trim(term.substr(caret + 1)));
            if (e.is_zero() || !e.fits_u64() || e.to_u64() > 0xffffffULL) {
                throw ParseError("bad exponent in '" + std::string(term) + "'");
            }
            pp.exponent = static_cast<unsigned>(e.to_u64());
        }
        factors.push_back(std::move(pp));
        if (star == std::string_view::npos) {
            break;
        }
        pos = star + 1;
    }
    try {
        return Factorization::from_factors(std::move(factors));
    } catch (const DomainError& e) {
        throw ParseError(std::string("malformed factorization '") + std::string(body) + "': " + e.what());
    }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    if (limit < 2) {
        return out;
    }
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) {
            continue;
        }
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) {
            composite[j] = true;
        }
    }
    return out;
}

} // namespace opnkit
