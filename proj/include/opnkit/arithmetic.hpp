#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opnkit/natural.hpp"

namespace opnkit {

struct FactorizeOptions;

struct PrimePower {
    Natural prime;
    unsigned exponent = 1;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization: primes strictly increasing, every exponent
/// at least one. The empty factorization represents 1.
class Factorization {
public:
    Factorization() = default;

    /// Validates the canonical-form invariants, including primality of every
    /// listed prime. Throws DomainError on violation.
    static Factorization from_factors(std::vector<PrimePower> factors);
    static Factorization prime_power(const Natural& p, unsigned e);

    [[nodiscard]] std::span<const PrimePower> factors() const noexcept { return factors_; }
    [[nodiscard]] bool is_one() const noexcept { return factors_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return factors_.size(); }

    /// The represented integer.
    [[nodiscard]] Natural value() const;
    /// Same primes with every exponent doubled: the factorization of value()^2.
    [[nodiscard]] Factorization squared() const;
    /// Exponent of p, 0 when absent.
    [[nodiscard]] unsigned exponent_of(const Natural& p) const;
    [[nodiscard]] bool coprime_to(const Factorization& other) const;

    /// `3^2*5`, or `1` for the empty factorization.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
    /// Factorization of the product.
    friend Factorization operator*(const Factorization& a, const Factorization& b);

private:
    friend Factorization factorize(const Natural& n, const FactorizeOptions& opts);

    std::vector<PrimePower> factors_;
};

/// Limits that turn pathological factorization inputs into EffortExceeded.
struct FactorizeOptions {
    std::uint64_t trial_limit = 1U << 16;
    std::uint64_t rho_iterations = 1U << 22;
    std::size_t max_bits = 4096;
};

/// Miller-Rabin: deterministic below 2^64, fixed witness schedule above.
bool is_prime(const Natural& n);
bool is_prime(std::uint64_t n);

/// Throws DomainError for n = 0 and EffortExceeded past the budget.
Factorization factorize(const Natural& n, const FactorizeOptions& opts = {});

/// Number of distinct primes.
std::size_t omega(const Factorization& f);
/// p-adic valuation; p must be prime.
unsigned valuation(const Natural& p, const Factorization& f);

/// Sum of divisors from the closed form prod (p^(e+1) - 1)/(p - 1).
Natural sigma(const Factorization& f);

inline constexpr std::uint64_t kSigmaOracleCap = 10'000'000;
/// Sum of divisors by direct divisor enumeration, for 1 <= n <= cap.
Natural sigma_oracle(const Natural& n, std::uint64_t cap = kSigmaOracleCap);

bool is_perfect(const Natural& n, const FactorizeOptions& opts = {});

/// Parses `p1^e1*p2^e2*...` (ascending primes) or a bare integer, which is
/// factorized.
Factorization parse_factored(std::string_view text, const FactorizeOptions& opts = {});

/// All primes p <= limit, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

} // namespace opnkit
