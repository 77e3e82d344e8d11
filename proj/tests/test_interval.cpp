#include <gtest/gtest.h>

#include <cmath>

#include "opnkit/corpus.hpp"
#include "opnkit/error.hpp"
#include "opnkit/interval.hpp"

using namespace opnkit;

namespace {

// Independent oracle: ln(1 + x) for 0 < x < 1 by the alternating Mercator
// series in exact rationals. Consecutive partial sums bracket the value.
std::pair<Ratio, Ratio> mercator_bracket(const Ratio& x, unsigned terms)
{
    Ratio sum(0);
    Ratio power = x;
    Ratio prev(0);
    for (unsigned k = 1; k <= terms; ++k) {
        prev = sum;
        const Ratio term = power / Ratio(static_cast<std::int64_t>(k));
        sum = (k % 2 == 1) ? sum + term : sum - term;
        power = power * x;
    }
    return prev < sum ? std::pair{prev, sum} : std::pair{sum, prev};
}

// Second independent route: MPFR's own correctly rounded log.
std::pair<Ratio, Ratio> mpfr_log_bracket(const Ratio& r, mpfr_prec_t bits)
{
    Float x(bits);
    Float lo(bits);
    Float hi(bits);
    mpfr_set_q(x.get(), r.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_log(lo.get(), x.get(), MPFR_RNDD);
    mpfr_set_q(x.get(), r.mpq().get_mpq_t(), MPFR_RNDU);
    mpfr_log(hi.get(), x.get(), MPFR_RNDU);
    return {lo.to_ratio(), hi.to_ratio()};
}

bool brackets_meet(const IntervalReal& x, const std::pair<Ratio, Ratio>& b)
{
    return overlaps(x, IntervalReal(IntervalReal::exact(b.first, 600).lo(), IntervalReal::exact(b.second, 600).hi(), 600));
}

Ratio random_ratio(CorpusRng& rng, std::uint64_t max_num, std::uint64_t max_den)
{
    return Ratio(Natural(rng.between(1, max_num)), Natural(rng.between(1, max_den)));
}

} // namespace

TEST(EvalLn, LnOneIsExactZero)
{
    const IntervalReal z = eval_ln(Ratio(1), 256);
    EXPECT_TRUE(z.is_point());
    EXPECT_TRUE(z.contains(Ratio(0)));
}

TEST(EvalLn, MatchesMercatorOracle)
{
    // Frozen decimals from the same oracle at 40 digits.
    const IntervalReal l43 = eval_ln(Ratio::of(4, 3), 256);
    EXPECT_TRUE(brackets_meet(l43, mercator_bracket(Ratio::of(1, 3), 200)));
    EXPECT_EQ(compare(l43, Ratio::parse("0.2876820724517809274392190059938274315034")), Ordering::Greater);
    EXPECT_EQ(compare(l43, Ratio::parse("0.2876820724517809274392190059938274315036")), Ordering::Less);

    const IntervalReal l139 = eval_ln(Ratio::of(13, 9), 256);
    EXPECT_TRUE(brackets_meet(l139, mercator_bracket(Ratio::of(4, 9), 200)));
    EXPECT_EQ(compare(l139, Ratio::parse("0.3677247801253173532629969677202671955102")), Ordering::Greater);
    EXPECT_EQ(compare(l139, Ratio::parse("0.3677247801253173532629969677202671955104")), Ordering::Less);
}

TEST(EvalLn, WidthShrinksWithPrecision)
{
    for (const unsigned bits : {64U, 128U, 256U, 512U, 1024U}) {
        const IntervalReal x = eval_ln(Ratio::of(31, 25), bits);
        EXPECT_LT(x.width_upper(), std::ldexp(1.0, -static_cast<int>(bits) + 4)) << bits;
        EXPECT_EQ(x.precision(), bits);
    }
}

TEST(EvalLn, AgreesWithMpfrLogOnRandomRationals)
{
    CorpusRng rng(3);
    for (int i = 0; i < 500; ++i) {
        const Ratio r = random_ratio(rng, 1'000'000'000, 1'000'000);
        if (r == Ratio(1)) {
            continue;
        }
        const IntervalReal x = eval_ln(r, 200);
        ASSERT_TRUE(brackets_meet(x, mpfr_log_bracket(r, 400))) << r;
    }
}

TEST(EvalLn, RejectsNonPositive)
{
    EXPECT_THROW(eval_ln(Ratio(0), 64), DomainError);
    EXPECT_THROW(eval_ln(Ratio(-3), 64), DomainError);
}

TEST(EvalLn, TinyArgumentsKeepRelativePrecision)
{
    // ln(1 + 10^-60) ~ 10^-60; the enclosure must still separate it from 0.
    const Ratio r = Ratio(1) + Ratio(Natural(1), Natural::pow(Natural(10), 60));
    const IntervalReal x = eval_ln(r, 256);
    EXPECT_EQ(compare(x, Ratio(0)), Ordering::Greater);
    EXPECT_EQ(compare(x, Ratio(Natural(1), Natural::pow(Natural(10), 60))), Ordering::Less);
    EXPECT_LT(mpfr_get_d(x.width().get(), MPFR_RNDU), 1e-130);
}

TEST(EvalExp, ContainsLnInverse)
{
    // exp(ln r) contains r for random r in (0, 10].
    CorpusRng rng(5);
    for (int i = 0; i < 500; ++i) {
        const Ratio r = Ratio(Natural(rng.between(1, 10'000'000)), Natural(1'000'000));
        const IntervalReal back = eval_exp(eval_ln(r, 256), 256);
        ASSERT_TRUE(back.contains(r)) << r;
        ASSERT_LT(back.width_upper(), 1e-70);
    }
}

TEST(EvalExp, NegativeAndZeroArguments)
{
    const IntervalReal one = eval_exp(IntervalReal::exact(Ratio(0), 128), 128);
    EXPECT_TRUE(one.contains(Ratio(1)));
    EXPECT_TRUE(one.is_point());
    const IntervalReal half = eval_exp(-eval_ln(Ratio(2), 256), 256);
    EXPECT_TRUE(half.contains(Ratio::of(1, 2)));
    EXPECT_THROW(eval_exp(IntervalReal::exact(Ratio(1 << 26), 64), 64), DomainError);
}

TEST(EvalPow, KnownValues)
{
    const IntervalReal e = eval_ln(Ratio::of(4, 3), 300) / eval_ln(Ratio::of(13, 9), 300);
    const IntervalReal t1 = eval_pow(Ratio::of(8, 5), e, 256);
    EXPECT_EQ(compare(t1, Ratio::parse("1.44440557")), Ordering::Greater);
    EXPECT_EQ(compare(t1, Ratio::parse("1.44440558")), Ordering::Less);
    // 40-digit oracle value, bracketed by one unit in its last place.
    EXPECT_EQ(compare(t1, Ratio::parse("1.444405573698282071821667036058151956148")), Ordering::Greater);
    EXPECT_EQ(compare(t1, Ratio::parse("1.444405573698282071821667036058151956150")), Ordering::Less);

    const IntervalReal x = IntervalReal::exact(Ratio::of(7, 3), 256);
    const IntervalReal x1 = eval_pow(x, IntervalReal::exact(Ratio(1), 256), 256);
    EXPECT_TRUE(x1.contains(Ratio::of(7, 3)));

    // 2^(1/2): squaring both ends must straddle 2.
    const IntervalReal s = eval_pow(Ratio(2), IntervalReal::exact(Ratio::of(1, 2), 256), 256);
    const Ratio lo = s.lo().to_ratio();
    const Ratio hi = s.hi().to_ratio();
    EXPECT_LT(lo * lo, Ratio(2));
    EXPECT_GT(hi * hi, Ratio(2));
}

TEST(EvalPow, RejectsNonPositiveBase)
{
    const IntervalReal one = IntervalReal::exact(Ratio(1), 64);
    EXPECT_THROW(eval_pow(Ratio(0), one, 64), DomainError);
    const IntervalReal straddle(IntervalReal::exact(Ratio(-1), 64).lo(), IntervalReal::exact(Ratio(1), 64).hi(), 64);
    EXPECT_THROW(eval_pow(straddle, one, 64), DomainError);
}

TEST(EvalSqrt, IntegerRefinementBrackets)
{
    for (const unsigned bits : {32U, 256U, 2048U}) {
        const IntervalReal s = eval_sqrt(Ratio(3), bits);
        const Ratio lo = s.lo().to_ratio();
        const Ratio hi = s.hi().to_ratio();
        EXPECT_LT(lo * lo, Ratio(3));
        EXPECT_GT(hi * hi, Ratio(3));
    }
    EXPECT_TRUE(eval_sqrt(Ratio::of(9, 4), 64).contains(Ratio::of(3, 2)));
    EXPECT_TRUE(eval_sqrt(Ratio::of(1, 1000000007), 128).contains(Ratio::of(0, 1)) == false);
    EXPECT_THROW(eval_sqrt(Ratio(-1), 64), DomainError);
}

TEST(IntervalArithmetic, ContainsExactResults)
{
    CorpusRng rng(9);
    for (int i = 0; i < 1000; ++i) {
        Ratio a = random_ratio(rng, 1'000'000, 999);
        Ratio b = random_ratio(rng, 1'000'000, 997);
        if (rng.below(2) == 0) {
            a = -a;
        }
        if (rng.below(2) == 0) {
            b = -b;
        }
        const IntervalReal ia = IntervalReal::exact(a, 53);
        const IntervalReal ib = IntervalReal::exact(b, 53);
        ASSERT_TRUE((ia + ib).contains(a + b));
        ASSERT_TRUE((ia - ib).contains(a - b));
        ASSERT_TRUE((ia * ib).contains(a * b));
        ASSERT_TRUE((ia / ib).contains(a / b));
        ASSERT_TRUE((-ia).contains(-a));
    }
}

TEST(IntervalArithmetic, DivisionByIntervalContainingZeroThrows)
{
    const IntervalReal one = IntervalReal::exact(Ratio(1), 64);
    EXPECT_THROW(one / IntervalReal::exact(Ratio(0), 64), DomainError);
}

TEST(Refinement, DoublingPrecisionNeverWidens)
{
    CorpusRng rng(13);
    for (int i = 0; i < 100; ++i) {
        const Ratio r = random_ratio(rng, 100'000, 10'000);
        if (r == Ratio(1)) {
            continue;
        }
        double prev = 1.0;
        for (unsigned bits = 64; bits <= 1024; bits *= 2) {
            const double w = eval_ln(r, bits).width_upper();
            ASSERT_LE(w, prev) << r << " @" << bits;
            prev = w;
        }
    }
}

TEST(Compare, KnownValues)
{
    EXPECT_EQ(compare(eval_ln(Ratio::of(4, 3), 256), Ratio::of(1, 3)), Ordering::Less);
    EXPECT_EQ(compare(eval_ln(Ratio(1), 256), Ratio(0)), Ordering::Undecided);

    // The touching case stays undecided through every escalation step.
    int calls = 0;
    const Decision d = decide(
        [&](unsigned bits) {
            ++calls;
            return eval_ln(Ratio(1), bits);
        },
        Ratio(0), PrecisionConfig{256, 4096});
    EXPECT_EQ(d.order, Ordering::Undecided);
    EXPECT_EQ(d.bits, 4096U);
    EXPECT_EQ(calls, 5); // 256, 512, 1024, 2048, 4096
}

TEST(Compare, EscalatesUntilDecided)
{
    // 1 + 2^-600 vs 1: undecided at 256 and 512 bits, decided at 1024.
    const Ratio tiny = Ratio(1) + Ratio(Natural(1), Natural::pow(Natural(2), 600));
    const Decision d = decide([&](unsigned bits) { return IntervalReal::exact(tiny, bits); }, Ratio(1),
                              PrecisionConfig{256, 4096});
    EXPECT_EQ(d.order, Ordering::Greater);
    EXPECT_EQ(d.bits, 1024U);
}

TEST(Render, MidpointRadiusAndBits)
{
    const IntervalReal x = eval_ln(Ratio::of(4, 3), 256);
    const std::string s = x.str();
    EXPECT_EQ(s.rfind("0.28768207245178092744", 0), 0U) << s;
    EXPECT_NE(s.find(" ± "), std::string::npos);
    EXPECT_NE(s.find("@256b"), std::string::npos);
    EXPECT_EQ(eval_ln(Ratio(1), 64).str(), "0 ± 0 @64b");

    const IntervalReal wide(IntervalReal::exact(Ratio::parse("1.4444055703"), 64).lo(),
                            IntervalReal::exact(Ratio::parse("1.4444055705"), 64).hi(), 64);
    EXPECT_EQ(wide.str(), "1.44440557040 ± 2e-10 @64b");
}

TEST(PrecisionConfig, Validation)
{
    EXPECT_NO_THROW(PrecisionConfig{}.validate());
    EXPECT_THROW((PrecisionConfig{512, 256}.validate()), DomainError);
}
