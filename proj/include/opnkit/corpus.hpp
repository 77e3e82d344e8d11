#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "opnkit/arithmetic.hpp"
#include "opnkit/constraints.hpp"

namespace opnkit {

/// Seeded generator whose draws are identical on every platform
/// (mt19937_64 output is fixed by the standard; bounded draws use rejection).
class CorpusRng {
public:
    explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

struct CoprimePair {
    Factorization a;
    Factorization b;
};

/// Coprime odd pairs a, b > 1 with a, b <= max_value. Each side uses up to
/// five odd primes below 100 with exponents at most 4; the two sides draw
/// from disjoint primes.
std::vector<CoprimePair> sandwich_corpus(std::uint64_t seed, std::size_t count, std::uint64_t max_value = 1'000'000);

/// Candidates satisfying the structural constraints (q prime = 1 mod 4,
/// k = 1 mod 4, n odd, gcd(q, n) = 1) and I(q^k)^3 < 2 < I(n)^3.
std::vector<EulerianCandidate> lemma4_corpus(std::uint64_t seed, std::size_t count);

} // namespace opnkit
