#pragma once

#include <cstdint>
#include <vector>

#include "opnkit/natural.hpp"

namespace opnkit {

/// M = (2^p - 1) 2^(p-1) with p and 2^p - 1 prime.
struct EuclideanForm {
    std::uint64_t p;
    Natural mersenne;
    Natural perfect;
};

/// Lucas-Lehmer test for M_p = 2^p - 1. p = 2 is special-cased to true and a
/// composite p returns false without running the recurrence. Throws
/// DomainError for p < 2.
bool lucas_lehmer(std::uint64_t p);

/// Throws DomainError unless lucas_lehmer(p).
EuclideanForm even_perfect_from_exponent(std::uint64_t p);

/// sigma(perfect) = 2 perfect through the generic factorize/sigma path.
bool verify_euclidean(const EuclideanForm& form);

inline constexpr std::uint64_t kMersenneScanCap = 2500;

/// Every p <= limit with lucas_lehmer(p), ascending. Limits above
/// kMersenneScanCap need allow_beyond_cap.
std::vector<std::uint64_t> mersenne_scan(std::uint64_t limit, bool allow_beyond_cap = false);

} // namespace opnkit
