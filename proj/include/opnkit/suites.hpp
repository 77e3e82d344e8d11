#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "opnkit/corpus.hpp"
#include "opnkit/interval.hpp"

namespace opnkit {

/// Outcome of one property suite. `facts` are ordered key/value details.
struct SuiteSummary {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::size_t undecided = 0;
    std::vector<std::pair<std::string, std::string>> facts;

    [[nodiscard]] bool clean() const { return failures == 0 && undecided == 0; }
    void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
    [[nodiscard]] std::string fact_or(std::string_view key, std::string fallback = {}) const;
};

/// sigma(factorize(n)) == sigma_oracle(n) for 1 <= n <= n_max.
SuiteSummary run_sigma_oracle_suite(std::uint64_t n_max);

/// sandwich_check over the corpus; failures count VIOLATED.
SuiteSummary run_sandwich_suite(const std::vector<CoprimePair>& corpus, const PrecisionConfig& cfg);

/// 1 < x(n) < 2 certified for every a, b and ab in the corpus.
SuiteSummary run_exponent_range_suite(const std::vector<CoprimePair>& corpus, const PrecisionConfig& cfg);

/// I(n) < I(n^2) < I(n)^2 as exact rationals for every a, b and ab.
SuiteSummary run_index_square_suite(const std::vector<CoprimePair>& corpus);

/// x(r^s) > x(r^t) for every odd prime r <= r_max and 1 <= s < t <= t_max.
SuiteSummary run_monotonicity_s_suite(std::uint64_t r_max, unsigned t_max, const PrecisionConfig& cfg);

/// x(r) > x(r') for consecutive odd primes r < r' <= r_max.
SuiteSummary run_monotonicity_r_suite(std::uint64_t r_max, const PrecisionConfig& cfg);

/// The provable implications over premise-satisfying candidates; the
/// observed P3 => P1 status is reported as a fact only.
SuiteSummary run_lemma4_suite(const std::vector<EulerianCandidate>& corpus);

enum class Theorem2Expectation {
    /// Every f(q,u) exceeds 1 + sqrt(3) by the certified margin.
    Contradiction,
    /// Every f(q,u) stays below 1 + sqrt(3).
    NoContradiction,
};

SuiteSummary run_theorem2_suite(std::uint64_t q_limit, std::uint64_t u, Theorem2Expectation expect,
                                const PrecisionConfig& cfg);

/// mersenne_scan(limit), each form verified perfect through sigma.
SuiteSummary run_mersenne_suite(std::uint64_t limit);

/// acquaah_konyagin_holds agrees with q < n sqrt(3) decided by enclosures.
SuiteSummary run_acquaah_konyagin_suite(std::uint64_t seed, std::size_t count, const PrecisionConfig& cfg);

} // namespace opnkit
