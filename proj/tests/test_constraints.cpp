#include <gtest/gtest.h>

#include "opnkit/abundancy.hpp"
#include "opnkit/constraints.hpp"
#include "opnkit/error.hpp"

using namespace opnkit;

namespace {

EulerianCandidate cand(std::uint64_t q, unsigned k, std::uint64_t n)
{
    return {Natural(q), k, factorize(Natural(n))};
}

CheckStatus status_of(const ConstraintReport& r, std::string_view name)
{
    const CheckEntry* e = r.find(name);
    EXPECT_NE(e, nullptr) << name;
    return e == nullptr ? CheckStatus::Undecided : e->status;
}

const PrecisionConfig kCfg{};

} // namespace

TEST(ValidateEulerian, TinyCandidateFailsSizeAndPerfection)
{
    const ConstraintReport r = validate_eulerian(cand(5, 1, 3), kCfg);
    EXPECT_EQ(status_of(r, check::kSize), CheckStatus::Fail);
    EXPECT_EQ(status_of(r, check::kOmega), CheckStatus::Fail);
    EXPECT_EQ(status_of(r, check::kPerfection), CheckStatus::Fail);
    // sigma(45)/45 = 78/45, printed in lowest terms.
    EXPECT_NE(r.find(check::kPerfection)->witness.find("26/15"), std::string::npos);
    EXPECT_EQ(status_of(r, check::kQPrime), CheckStatus::Pass);
    EXPECT_EQ(status_of(r, check::kEulerIndex), CheckStatus::Pass);
    // I(3) = 4/3 sits below (8/5)^(1/x(3)) ~ 1.4444.
    EXPECT_EQ(status_of(r, check::kIndexBound), CheckStatus::Fail);
    EXPECT_EQ(r.count(CheckStatus::Undecided), 0U);
    EXPECT_EQ(r.checks.size(), 12U);
}

TEST(ValidateEulerian, FormChecksPassForThirteen)
{
    const ConstraintReport r = validate_eulerian(cand(13, 1, 9), kCfg);
    for (const auto name : {check::kQPrime, check::kQMod4, check::kKMod4, check::kCoprime, check::kNOdd,
                            check::kEulerIndex, check::kAcquaahKonyagin}) {
        EXPECT_EQ(status_of(r, name), CheckStatus::Pass) << name;
    }
    EXPECT_EQ(status_of(r, check::kSize), CheckStatus::Fail);
    EXPECT_EQ(status_of(r, check::kOmega), CheckStatus::Fail);
}

TEST(ValidateEulerian, WrongExponentResidue)
{
    const ConstraintReport r = validate_eulerian(cand(5, 2, 3), kCfg);
    EXPECT_EQ(status_of(r, check::kKMod4), CheckStatus::Fail);
    // k > 1 with q >= n contradicts the q < n estimate.
    EXPECT_EQ(status_of(r, check::kKShortcut), CheckStatus::Fail);
    EXPECT_EQ(status_of(validate_eulerian(cand(5, 5, 7), kCfg), check::kKShortcut), CheckStatus::Pass);
}

TEST(ValidateEulerian, StructuralFailuresAreEntriesNotErrors)
{
    const ConstraintReport shared = validate_eulerian(cand(5, 1, 15), kCfg);
    EXPECT_EQ(status_of(shared, check::kCoprime), CheckStatus::Fail);
    const ConstraintReport even = validate_eulerian(cand(7, 1, 6), kCfg);
    EXPECT_EQ(status_of(even, check::kNOdd), CheckStatus::Fail);
    EXPECT_EQ(status_of(even, check::kQMod4), CheckStatus::Fail);
    EXPECT_EQ(status_of(validate_eulerian(cand(21, 1, 1), kCfg), check::kQPrime), CheckStatus::Fail);
}

TEST(ValidateEulerian, HugeCandidatePassesSizeChecks)
{
    // n = product of the first 12 odd primes raised to 150: N > 10^1500, omega = 13.
    std::vector<PrimePower> fs;
    for (const std::uint64_t p : {3, 7, 11, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        fs.push_back({Natural(p), 150});
    }
    const EulerianCandidate c{Natural(13), 1, Factorization::from_factors(fs)};
    const ConstraintReport r = validate_eulerian(c, kCfg);
    EXPECT_EQ(status_of(r, check::kSize), CheckStatus::Pass);
    EXPECT_EQ(status_of(r, check::kOmega), CheckStatus::Pass);
    EXPECT_EQ(status_of(r, check::kIndexBound), CheckStatus::Pass);
    EXPECT_EQ(status_of(r, check::kPerfection), CheckStatus::Fail);
}

TEST(ParseCandidate, LineFormat)
{
    const EulerianCandidate c = parse_candidate("q=13 k=1 n=3^2*5");
    EXPECT_EQ(c.q, Natural(13));
    EXPECT_EQ(c.k, 1U);
    EXPECT_EQ(c.n.value(), Natural(45));
    EXPECT_EQ(c.N(), Natural(13 * 45 * 45));
    EXPECT_THROW(parse_candidate("q=13 n=9"), ParseError);
    EXPECT_THROW(parse_candidate("q=13 k=1 n=9 q=5"), ParseError);
    EXPECT_THROW(parse_candidate("q=13 k=one n=9"), ParseError);
    EXPECT_THROW(parse_candidate("q=13 k=1 n=9^0"), ParseError);
}

TEST(AcquaahKonyagin, KnownValues)
{
    EXPECT_TRUE(acquaah_konyagin_holds(Natural(5), Natural(3)));
    EXPECT_FALSE(acquaah_konyagin_holds(Natural(13), Natural(7)));
    EXPECT_TRUE(acquaah_konyagin_holds(Natural(13), Natural(8)));
}

TEST(SigmaComparison, KnownValues)
{
    const Lemma4Outcome a = lemma4_predicates(cand(5, 1, 9));
    EXPECT_TRUE(a.p1 && a.p2 && a.p3);
    const Lemma4Outcome b = lemma4_predicates(cand(13, 1, 9));
    EXPECT_FALSE(b.p1 || b.p2 || b.p3);
    const Lemma4Outcome c = lemma4_predicates(cand(5, 1, 3));
    EXPECT_FALSE(c.p1 || c.p2 || c.p3);
    for (const auto& o : {a, b, c}) {
        EXPECT_TRUE(o.provable_implications_hold());
        EXPECT_TRUE(o.p3_implies_p1);
    }
}

TEST(SigmaComparison, PremiseViolationsAreReported)
{
    // I(13) = 14/13 is fine but I(5)^3 = 216/125 < 2 fails the n side.
    EXPECT_FALSE(lemma4_premise_holds(cand(13, 1, 5)));
    EXPECT_THROW(lemma4_predicates(cand(13, 1, 5)), PremiseViolation);
    // I(3) = 4/3 on the q side: (4/3)^3 > 2.
    EXPECT_THROW(lemma4_predicates(cand(3, 1, 25)), PremiseViolation);
    EXPECT_THROW(lemma4_predicates(cand(5, 1, 15)), DomainError);
}

TEST(ContradictionBound, KnownValues)
{
    const IntervalReal f55 = theorem2_lower_bound(Natural(5), Natural(5), 256);
    EXPECT_EQ(compare(f55, Ratio::parse("2.741813830537291437573150631944")), Ordering::Greater);
    EXPECT_EQ(compare(f55, Ratio::parse("2.741813830537291437573150631945")), Ordering::Less);
    const IntervalReal f53 = theorem2_lower_bound(Natural(5), Natural(3), 256);
    EXPECT_EQ(compare(f53, Ratio::parse("2.691278989746372355801936944264")), Ordering::Greater);
    EXPECT_EQ(compare(f53, Ratio::parse("2.691278989746372355801936944265")), Ordering::Less);

    const IntervalReal l5 = limit_lower_bound(Natural(5), 256);
    EXPECT_EQ(compare(l5, Ratio::parse("2.799465150785959850867736805872")), Ordering::Greater);
    EXPECT_EQ(compare(l5, Ratio::parse("2.799465150785959850867736805873")), Ordering::Less);
    const IntervalReal l3 = limit_lower_bound(Natural(3), 256);
    EXPECT_EQ(compare(l3, Ratio::parse("2.719906158804456049474804945584")), Ordering::Greater);
    EXPECT_EQ(compare(l3, Ratio::parse("2.719906158804456049474804945585")), Ordering::Less);
    const IntervalReal ceil = theorem2_ceiling(256);
    EXPECT_EQ(compare(ceil, Ratio::parse("2.732050807568877293527446341505")), Ordering::Greater);
    EXPECT_EQ(compare(ceil, Ratio::parse("2.732050807568877293527446341506")), Ordering::Less);

    EXPECT_THROW(theorem2_lower_bound(Natural(7), Natural(5), 64), DomainError);
    EXPECT_THROW(theorem2_lower_bound(Natural(5), Natural(2), 64), DomainError);
    EXPECT_THROW(theorem2_lower_bound(Natural(25), Natural(5), 64), DomainError);
}

TEST(ContradictionBound, ExponentIsReciprocalOfX)
{
    for (const std::uint64_t u : {3ULL, 5ULL, 7ULL, 11ULL}) {
        const IntervalReal e = eval_ln(prime_power_index(Natural(u), 1), 300) /
                               eval_ln(prime_power_index(Natural(u), 2), 300);
        EXPECT_TRUE(overlaps(e, reciprocal_exponent_enclosure(Natural(u), 256))) << u;
    }
}

TEST(ContradictionScan, EmptyBelowFive)
{
    const Theorem2Scan s = theorem2_contradiction_scan(4, Natural(5), kCfg);
    EXPECT_TRUE(s.points.empty());
    EXPECT_FALSE(s.argmin.has_value());
    EXPECT_TRUE(s.report.checks.empty());
}

TEST(ContradictionScan, SmallGridBothExponents)
{
    const Theorem2Scan s5 = theorem2_contradiction_scan(500, Natural(5), kCfg);
    EXPECT_EQ(s5.points.size(), s5.greater);
    EXPECT_EQ(s5.margin_certified, s5.points.size());
    ASSERT_TRUE(s5.argmin.has_value());
    EXPECT_EQ(s5.points[*s5.argmin].q, 5U);
    EXPECT_TRUE(s5.increasing);
    EXPECT_EQ(s5.report.count(CheckStatus::Pass), s5.points.size());
    EXPECT_NE(s5.report.find("f(q,u)_gt_1+sqrt3 q=13"), nullptr);

    const Theorem2Scan s3 = theorem2_contradiction_scan(500, Natural(3), kCfg);
    EXPECT_EQ(s3.points.size(), s3.less);
    EXPECT_EQ(s3.greater, 0U);
    EXPECT_TRUE(s3.increasing);
    EXPECT_EQ(compare(s3.limit, s3.ceiling), Ordering::Less);
}

TEST(ResidualCase, KnownValues)
{
    EXPECT_EQ(residual_case_classify(Natural(5)).kind, ResidualCase::Q5);
    const ResidualClassification c17 = residual_case_classify(Natural(17));
    EXPECT_EQ(c17.kind, ResidualCase::FiveMod12);
    EXPECT_TRUE(c17.three_divides_half_successor);
    const ResidualClassification c13 = residual_case_classify(Natural(13));
    EXPECT_EQ(c13.kind, ResidualCase::OneMod12);
    EXPECT_FALSE(c13.three_divides_half_successor);
    EXPECT_THROW(residual_case_classify(Natural(7)), DomainError);
    EXPECT_THROW(residual_case_classify(Natural(21)), DomainError);
    EXPECT_STREQ(to_string(ResidualCase::FiveMod12), "CASE_5_MOD_12");
}

TEST(ResidualCase, PartitionBelowOneHundredThousand)
{
    std::size_t counts[3] = {0, 0, 0};
    for (const std::uint64_t q : primes_up_to(100'000)) {
        if (q % 4 != 1) {
            continue;
        }
        const ResidualClassification c = residual_case_classify(Natural(q));
        ++counts[static_cast<int>(c.kind)];
        // Exactly one case, chosen by the residue mod 12.
        const ResidualCase expected = q == 5 ? ResidualCase::Q5
                                    : q % 12 == 5 ? ResidualCase::FiveMod12
                                                  : ResidualCase::OneMod12;
        ASSERT_EQ(c.kind, expected) << q;
        ASSERT_EQ(c.three_divides_half_successor, q % 12 == 5) << q;
    }
    EXPECT_EQ(counts[0], 1U);
    EXPECT_GT(counts[1], 0U);
    EXPECT_GT(counts[2], 0U);
}
