#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opnkit/arithmetic.hpp"
#include "opnkit/error.hpp"
#include "opnkit/interval.hpp"

namespace opnkit {

/// A hypothetical odd perfect number N = q^k n^2 in Eulerian shape. Fields are
/// stored as given; validate_eulerian() reports which constraints hold.
struct EulerianCandidate {
    Natural q;
    unsigned k = 1;
    Factorization n;

    [[nodiscard]] Natural N() const;
    [[nodiscard]] Natural euler_part() const { return Natural::pow(q, k); }
    [[nodiscard]] std::string str() const;
};

/// Parses `q=<int> k=<int> n=<factored-integer>`.
EulerianCandidate parse_candidate(std::string_view line, const FactorizeOptions& opts = {});

enum class CheckStatus { Pass, Fail, Undecided };
const char* to_string(CheckStatus s);

struct CheckEntry {
    std::string name;
    CheckStatus status;
    std::string witness;
    /// Bits used by an enclosure-based check; 0 for exact checks.
    unsigned precision_bits = 0;
};

struct ConstraintReport {
    std::vector<CheckEntry> checks;

    void add(std::string name, CheckStatus status, std::string witness, unsigned bits = 0);
    [[nodiscard]] const CheckEntry* find(std::string_view name) const;
    [[nodiscard]] std::size_t count(CheckStatus s) const;
};

/// Names of the checks validate_eulerian() emits, in order.
namespace check {
inline constexpr std::string_view kQPrime = "q_prime";
inline constexpr std::string_view kQMod4 = "q_1_mod_4";
inline constexpr std::string_view kKMod4 = "k_1_mod_4";
inline constexpr std::string_view kCoprime = "gcd_q_n_1";
inline constexpr std::string_view kNOdd = "n_odd";
inline constexpr std::string_view kSize = "N_gt_10^1500";
inline constexpr std::string_view kOmega = "omega_N_ge_10";
inline constexpr std::string_view kEulerIndex = "I(q^k)_lt_5/4";
inline constexpr std::string_view kKShortcut = "k_gt_1_implies_q_lt_n";
inline constexpr std::string_view kAcquaahKonyagin = "q^2_lt_3n^2";
inline constexpr std::string_view kIndexBound = "I(n)_gt_(8/5)^(1/x(u))";
inline constexpr std::string_view kPerfection = "I(N)_eq_2";
} // namespace check

ConstraintReport validate_eulerian(const EulerianCandidate& c, const PrecisionConfig& cfg);

/// q^2 < 3 n^2, the squared form of q < n sqrt(3).
bool acquaah_konyagin_holds(const Natural& q, const Natural& n);

/// Thrown by lemma4_predicates when I(q^k)^3 < 2 < I(n)^3 fails.
class PremiseViolation : public DomainError {
public:
    using DomainError::DomainError;
};

struct Lemma4Outcome {
    bool p1; ///< q^k < n
    bool p2; ///< sigma(q^k) q^k < sigma(n) n
    bool p3; ///< sigma(q^k) < sigma(n)
    bool p1_implies_p3;
    bool p1_implies_p2;
    bool p2_implies_p3;
    /// Observed only; not a provable consequence of the premise.
    bool p3_implies_p1;

    [[nodiscard]] bool provable_implications_hold() const { return p1_implies_p3 && p1_implies_p2 && p2_implies_p3; }
};

/// Exact evaluation of the three predicates. Throws PremiseViolation unless
/// I(q^k)^3 < 2 < I(n)^3, and DomainError if q^k and n share a factor.
Lemma4Outcome lemma4_predicates(const EulerianCandidate& c);
/// The premise as exact rational comparisons.
bool lemma4_premise_holds(const EulerianCandidate& c);

/// f(q, u) = (q+1)/q + (2q/(q+1))^(1/x(u)) at a fixed precision.
IntervalReal theorem2_lower_bound(const Natural& q, const Natural& u, unsigned bits);
/// 1 + 2^(1/x(u)), the q -> infinity limit of f(q, u).
IntervalReal limit_lower_bound(const Natural& u, unsigned bits);
/// 1 + sqrt(3).
IntervalReal theorem2_ceiling(unsigned bits);

/// Required certified gap between f(q, 5) and the ceiling.
Ratio theorem2_margin();

struct Theorem2Point {
    std::uint64_t q;
    IntervalReal f;
    Ordering vs_ceiling;
    /// f - (1 + sqrt 3) > margin was certified.
    bool margin_certified;
    unsigned bits;
};

struct Theorem2Scan {
    std::uint64_t u;
    std::vector<Theorem2Point> points;
    std::size_t greater = 0;
    std::size_t less = 0;
    std::size_t undecided = 0;
    std::size_t margin_certified = 0;
    /// Index into points of the smallest f (by lower endpoint).
    std::optional<std::size_t> argmin;
    /// f certified strictly increasing between consecutive scanned q.
    bool increasing = true;
    IntervalReal limit;
    IntervalReal ceiling;
    /// One entry per scanned q: status Pass iff f(q,u) > 1 + sqrt(3) is certified.
    ConstraintReport report;
};

/// All primes q = 1 (mod 4) with 5 <= q <= q_limit.
Theorem2Scan theorem2_contradiction_scan(std::uint64_t q_limit, const Natural& u, const PrecisionConfig& cfg);

enum class ResidualCase { Q5, FiveMod12, OneMod12 };
const char* to_string(ResidualCase c);

struct ResidualClassification {
    ResidualCase kind;
    /// 3 | (q+1)/2, which forces 3 | n^2 when k = 1.
    bool three_divides_half_successor;
    std::vector<std::string> notes;
};

/// Requires q prime with q = 1 (mod 4).
ResidualClassification residual_case_classify(const Natural& q);

} // namespace opnkit
