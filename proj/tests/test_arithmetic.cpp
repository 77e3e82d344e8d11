#include <gtest/gtest.h>

#include <numeric>

#include "opnkit/arithmetic.hpp"
#include "opnkit/corpus.hpp"
#include "opnkit/error.hpp"

using namespace opnkit;

namespace {

Factorization F(std::initializer_list<std::pair<std::uint64_t, unsigned>> fs)
{
    std::vector<PrimePower> v;
    for (const auto& [p, e] : fs) {
        v.push_back({Natural(p), e});
    }
    return Factorization::from_factors(std::move(v));
}

bool trial_division_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST(Natural, SubtractionBelowZeroThrows)
{
    EXPECT_EQ(Natural(7) - Natural(7), Natural(0));
    EXPECT_THROW(Natural(3) - Natural(4), DomainError);
}

TEST(Natural, ComparesHugeValues)
{
    const Natural big = Natural::pow(Natural(10), 1500);
    EXPECT_LT(big, big + Natural(1));
    EXPECT_GT(Natural::pow(Natural(3), 3144), big); // 3^3144 ~ 10^1500.07
    EXPECT_LT(Natural::pow(Natural(3), 3143), big);
}

TEST(Natural, U64RoundTripAtWordBoundary)
{
    const std::uint64_t top = ~std::uint64_t{0};
    EXPECT_EQ(Natural(top).to_u64(), top);
    EXPECT_FALSE((Natural(top) + Natural(1)).fits_u64());
    EXPECT_THROW(Natural::parse("12a"), ParseError);
}

TEST(ArithBasics, KnownValues)
{
    EXPECT_EQ(gcd(Natural(5), Natural(9)), Natural(1));
    const Factorization f45 = factorize(Natural(45));
    EXPECT_EQ(omega(f45), 2U);
    EXPECT_EQ(valuation(Natural(3), f45), 2U);
    EXPECT_EQ(valuation(Natural(7), f45), 0U);
    EXPECT_THROW(valuation(Natural(9), f45), DomainError);
}

TEST(IsPrime, AgreesWithTrialDivisionBelow20000)
{
    for (std::uint64_t n = 0; n < 20000; ++n) {
        ASSERT_EQ(is_prime(Natural(n)), trial_division_prime(n)) << n;
    }
}

TEST(IsPrime, StrongPseudoprimesAndLargePrimes)
{
    // Strong pseudoprimes to several small bases.
    EXPECT_FALSE(is_prime(Natural(3215031751ULL)));
    EXPECT_FALSE(is_prime(Natural(3825123056546413051ULL)));
    EXPECT_TRUE(is_prime(Natural(18446744073709551557ULL))); // largest 64-bit prime
    EXPECT_TRUE(is_prime(Natural::mersenne(127)));
    EXPECT_FALSE(is_prime(Natural::mersenne(67)));
}

TEST(Factorize, KnownValues)
{
    EXPECT_EQ(factorize(Natural(45)), F({{3, 2}, {5, 1}}));
    EXPECT_TRUE(factorize(Natural(1)).is_one());
    EXPECT_EQ(factorize(Natural(8191)), F({{8191, 1}}));
    EXPECT_THROW(factorize(Natural(0)), DomainError);
}

TEST(Factorize, NeedsRho)
{
    // Both factors are above the trial-division threshold.
    const Natural n = Natural(1000003) * Natural(1000033);
    EXPECT_EQ(factorize(n), F({{1000003, 1}, {1000033, 1}}));
    // 2^67 - 1 = 193707721 * 761838257287, beyond one machine word.
    const Natural m67 = Natural::mersenne(67) * Natural(4294967311ULL) * Natural(4294967311ULL);
    EXPECT_EQ(factorize(m67), F({{193707721, 1}, {4294967311ULL, 2}, {761838257287ULL, 1}}));
}

TEST(Factorize, BudgetExhaustionIsAResourceError)
{
    FactorizeOptions tight;
    tight.rho_iterations = 8;
    const Natural n = Natural(1000003) * Natural(1000033);
    EXPECT_THROW(factorize(n, tight), EffortExceeded);

    FactorizeOptions narrow_bits;
    narrow_bits.max_bits = 16;
    EXPECT_THROW(factorize(Natural(1) + Natural::pow(Natural(2), 20), narrow_bits), EffortExceeded);
}

TEST(Factorize, ReconstructsValue)
{
    CorpusRng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Natural n(rng.between(1, std::uint64_t{1} << 50));
        const Factorization f = factorize(n);
        ASSERT_EQ(f.value(), n);
        for (const auto& pp : f.factors()) {
            ASSERT_TRUE(is_prime(pp.prime));
        }
    }
}

TEST(Factorization, RejectsNonCanonicalLists)
{
    EXPECT_THROW(F({{5, 1}, {3, 1}}), DomainError);
    EXPECT_THROW(F({{3, 1}, {3, 1}}), DomainError);
    EXPECT_THROW(F({{9, 1}}), DomainError);
    EXPECT_THROW(F({{3, 0}}), DomainError);
}

TEST(Sigma, KnownValues)
{
    EXPECT_EQ(sigma(F({{3, 2}})), Natural(13));
    EXPECT_EQ(sigma(Factorization{}), Natural(1));
    EXPECT_EQ(sigma(F({{3, 2}, {5, 1}})), Natural(78));
}

TEST(SigmaOracle, KnownValuesAndCap)
{
    EXPECT_EQ(sigma_oracle(Natural(6)), Natural(12));
    EXPECT_EQ(sigma_oracle(Natural(1)), Natural(1));
    EXPECT_EQ(sigma_oracle(Natural(496)), Natural(992));
    EXPECT_THROW(sigma_oracle(Natural(kSigmaOracleCap + 1)), DomainError);
    EXPECT_THROW(sigma_oracle(Natural(0)), DomainError);
}

TEST(SigmaOracle, MatchesClosedFormOnPrefix)
{
    for (std::uint64_t n = 1; n <= 20000; ++n) {
        ASSERT_EQ(sigma(factorize(Natural(n))), sigma_oracle(Natural(n))) << n;
    }
}

TEST(Sigma, PrimeIsPPlusOne)
{
    for (const std::uint64_t p : primes_up_to(5000)) {
        ASSERT_EQ(sigma(Factorization::prime_power(Natural(p), 1)), Natural(p + 1));
    }
}

TEST(Sigma, MultiplicativeOnCoprimePairs)
{
    CorpusRng rng(11);
    int checked = 0;
    while (checked < 3000) {
        const std::uint64_t a = rng.between(1, 10000);
        const std::uint64_t b = rng.between(1, 10000);
        if (std::gcd(a, b) != 1) {
            continue;
        }
        const Factorization fa = factorize(Natural(a));
        const Factorization fb = factorize(Natural(b));
        const Factorization fab = factorize(Natural(a * b));
        ASSERT_EQ(sigma(fab), sigma(fa) * sigma(fb));
        ASSERT_EQ(omega(fab), omega(fa) + omega(fb));
        ASSERT_EQ(fa * fb, fab);
        ++checked;
    }
}

TEST(IsPerfect, KnownValues)
{
    EXPECT_TRUE(is_perfect(Natural(6)));
    EXPECT_TRUE(is_perfect(Natural(28)));
    EXPECT_FALSE(is_perfect(Natural(45)));
    EXPECT_THROW(is_perfect(Natural(0)), DomainError);
}

TEST(ParseFactored, TextFormat)
{
    EXPECT_EQ(parse_factored("3^2*5"), F({{3, 2}, {5, 1}}));
    EXPECT_EQ(parse_factored(" 45 "), F({{3, 2}, {5, 1}}));
    EXPECT_EQ(parse_factored("1"), Factorization{});
    EXPECT_EQ(parse_factored("3^2*5").str(), "3^2*5");
    EXPECT_EQ(Factorization{}.str(), "1");
    EXPECT_THROW(parse_factored("5*3"), ParseError);
    EXPECT_THROW(parse_factored("9^2"), ParseError);
    EXPECT_THROW(parse_factored("3^0"), ParseError);
    EXPECT_THROW(parse_factored("3^"), ParseError);
    EXPECT_THROW(parse_factored(""), ParseError);
    EXPECT_THROW(parse_factored("0"), DomainError);
}
