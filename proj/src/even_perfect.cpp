#include "opnkit/even_perfect.hpp"

#include <algorithm>

#include "opnkit/arithmetic.hpp"
#include "opnkit/error.hpp"

namespace opnkit {

bool lucas_lehmer(std::uint64_t p)
{
    if (p < 2) {
        throw DomainError("lucas_lehmer: p must be at least 2");
    }
    if (p == 2) {
        return true;
    }
    if (!is_prime(p)) {
        return false;
    }
    const auto bits = static_cast<mp_bitcnt_t>(p);
    const mpz_class m = Natural::mersenne(p).mpz();
    mpz_class s = 4;
    mpz_class hi;
    for (std::uint64_t i = 0; i + 2 < p; ++i) {
        s = s * s - 2;
        if (sgn(s) < 0) {
            s += m;
        }
        // x mod 2^p - 1 = (x >> p) + (x & (2^p - 1)), folded until below 2^p.
        while (mpz_sizeinbase(s.get_mpz_t(), 2) > bits) {
            mpz_fdiv_q_2exp(hi.get_mpz_t(), s.get_mpz_t(), bits);
            mpz_fdiv_r_2exp(s.get_mpz_t(), s.get_mpz_t(), bits);
            s += hi;
        }
        if (s == m) {
            s = 0;
        }
    }
    return s == 0;
}

EuclideanForm even_perfect_from_exponent(std::uint64_t p)
{
    if (!lucas_lehmer(p)) {
        throw DomainError("even_perfect: 2^" + std::to_string(p) + " - 1 is not prime");
    }
    Natural m = Natural::mersenne(p);
    Natural perfect = m * Natural::pow(Natural(2), p - 1);
    return {p, std::move(m), std::move(perfect)};
}

bool verify_euclidean(const EuclideanForm& form)
{
    FactorizeOptions opts;
    opts.max_bits = std::max(opts.max_bits, form.perfect.bit_length());
    return is_perfect(form.perfect, opts);
}

std::vector<std::uint64_t> mersenne_scan(std::uint64_t limit, bool allow_beyond_cap)
{
    if (limit < 2) {
        throw DomainError("mersenne_scan: limit must be at least 2");
    }
    if (limit > kMersenneScanCap && !allow_beyond_cap) {
        throw DomainError("mersenne_scan: limit above " + std::to_string(kMersenneScanCap) +
                          " needs an explicit override");
    }
    std::vector<std::uint64_t> out;
    for (const std::uint64_t p : primes_up_to(limit)) {
        if (lucas_lehmer(p)) {
            out.push_back(p);
        }
    }
    return out;
}

} // namespace opnkit
