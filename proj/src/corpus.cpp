#include "opnkit/corpus.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <span>

#include "opnkit/error.hpp"

namespace opnkit {

namespace {

std::vector<std::uint64_t> odd_primes_below_100()
{
    auto p = primes_up_to(100);
    p.erase(p.begin()); // 2
    return p;
}

// Product of p^e over the given factors, or nullopt once it exceeds cap.
std::optional<std::uint64_t> bounded_value(const std::vector<PrimePower>& fs, std::uint64_t cap)
{
    std::uint64_t v = 1;
    for (const auto& [p, e] : fs) {
        const std::uint64_t pv = p.to_u64();
        for (unsigned i = 0; i < e; ++i) {
            if (v > cap / pv) {
                return std::nullopt;
            }
            v *= pv;
        }
    }
    return v;
}

std::vector<PrimePower> draw_side(CorpusRng& rng, std::span<const std::uint64_t> pool)
{
    std::vector<PrimePower> fs;
    for (const std::uint64_t p : pool) {
        fs.push_back({Natural(p), static_cast<unsigned>(rng.between(1, 4))});
    }
    std::sort(fs.begin(), fs.end(), [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
    return fs;
}

} // namespace

std::uint64_t CorpusRng::below(std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("CorpusRng::below: n must be positive");
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return x % n;
}

std::vector<CoprimePair> sandwich_corpus(std::uint64_t seed, std::size_t count, std::uint64_t max_value)
{
    CorpusRng rng(seed);
    const auto primes = odd_primes_below_100();
    std::vector<CoprimePair> out;
    out.reserve(count);
    std::vector<std::uint64_t> pool = primes;
    while (out.size() < count) {
        rng.shuffle(pool);
        const std::size_t ka = rng.between(1, 5);
        const std::size_t kb = rng.between(1, 5);
        auto fa = draw_side(rng, std::span(pool).first(ka));
        auto fb = draw_side(rng, std::span(pool).subspan(ka, kb));
        if (!bounded_value(fa, max_value) || !bounded_value(fb, max_value)) {
            continue;
        }
        out.push_back({Factorization::from_factors(std::move(fa)), Factorization::from_factors(std::move(fb))});
    }
    return out;
}

std::vector<EulerianCandidate> lemma4_corpus(std::uint64_t seed, std::size_t count)
{
    CorpusRng rng(seed);
    const auto primes = odd_primes_below_100();
    std::vector<std::uint64_t> euler_primes;
    for (const std::uint64_t p : primes_up_to(10'000)) {
        if (p >= 5 && p % 4 == 1) {
            euler_primes.push_back(p);
        }
    }
    constexpr std::uint64_t kNCap = 100'000'000;
    std::vector<EulerianCandidate> out;
    out.reserve(count);
    std::vector<std::uint64_t> pool;
    while (out.size() < count) {
        const std::uint64_t q = euler_primes[rng.below(euler_primes.size())];
        const unsigned k = rng.below(4) == 0 ? 5 : 1;
        pool = primes;
        std::erase(pool, q);
        rng.shuffle(pool);
        auto fn = draw_side(rng, std::span(pool).first(rng.between(1, 5)));
        if (!bounded_value(fn, kNCap)) {
            continue;
        }
        EulerianCandidate c{Natural(q), k, Factorization::from_factors(std::move(fn))};
        if (!lemma4_premise_holds(c)) {
            continue;
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace opnkit
