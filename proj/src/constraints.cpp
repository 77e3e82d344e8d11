#include "opnkit/constraints.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "opnkit/abundancy.hpp"

namespace opnkit {

namespace {

constexpr unsigned kInnerGuard = 16;

IntervalReal narrow(const IntervalReal& x, unsigned bits)
{
    Float lo(bits);
    Float hi(bits);
    mpfr_set(lo.get(), x.lo().get(), MPFR_RNDD);
    mpfr_set(hi.get(), x.hi().get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), bits};
}

CheckStatus pass_if(bool ok)
{
    return ok ? CheckStatus::Pass : CheckStatus::Fail;
}

Factorization raise(const Factorization& f, unsigned k)
{
    std::vector<PrimePower> v(f.factors().begin(), f.factors().end());
    for (auto& pp : v) {
        pp.exponent *= k;
    }
    return Factorization::from_factors(std::move(v));
}

Factorization euler_part_factorization(const EulerianCandidate& c)
{
    if (c.q.is_zero()) {
        throw DomainError("candidate: q must be positive");
    }
    return raise(factorize(c.q), c.k);
}

void require_euler_prime(const Natural& q, const char* what)
{
    if (!is_prime(q) || (q % Natural(4)) != Natural(1)) {
        throw DomainError(std::string(what) + ": q = " + q.str() + " must be a prime = 1 (mod 4)");
    }
}

void require_odd_prime(const Natural& u, const char* what)
{
    if (!u.is_odd() || !is_prime(u)) {
        throw DomainError(std::string(what) + ": u = " + u.str() + " must be an odd prime");
    }
}

} // namespace

Natural EulerianCandidate::N() const
{
    const Natural nv = n.value();
    return euler_part() * nv * nv;
}

std::string EulerianCandidate::str() const
{
    return "q=" + q.str() + " k=" + std::to_string(k) + " n=" + n.str();
}

EulerianCandidate parse_candidate(std::string_view line, const FactorizeOptions& opts)
{
    EulerianCandidate c;
    bool seen_q = false;
    bool seen_k = false;
    bool seen_n = false;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw ParseError("candidate: expected key=value, got '" + token + "'");
        }
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "q" && !seen_q) {
            c.q = Natural::parse(value);
            seen_q = true;
        } else if (key == "k" && !seen_k) {
            const Natural k = Natural::parse(value);
            if (k.is_zero() || !k.fits_u64() || k.to_u64() > 0xffffULL) {
                throw ParseError("candidate: k must be a positive integer below 65536");
            }
            c.k = static_cast<unsigned>(k.to_u64());
            seen_k = true;
        } else if (key == "n" && !seen_n) {
            c.n = parse_factored(value, opts);
            seen_n = true;
        } else {
            throw ParseError("candidate: unexpected or repeated key '" + key + "'");
        }
    }
    if (!seen_q || !seen_k || !seen_n) {
        throw ParseError("candidate: expected `q=<int> k=<int> n=<factored-integer>`");
    }
    if (c.q.is_zero()) {
        throw ParseError("candidate: q must be positive");
    }
    return c;
}

const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "PASS";
    case CheckStatus::Fail:
        return "FAIL";
    case CheckStatus::Undecided:
        break;
    }
    return "UNDECIDED";
}

void ConstraintReport::add(std::string name, CheckStatus status, std::string witness, unsigned bits)
{
    checks.push_back({std::move(name), status, std::move(witness), bits});
}

const CheckEntry* ConstraintReport::find(std::string_view name) const
{
    const auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckEntry& e) { return e.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

std::size_t ConstraintReport::count(CheckStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const CheckEntry& e) { return e.status == s; }));
}

ConstraintReport validate_eulerian(const EulerianCandidate& c, const PrecisionConfig& cfg)
{
    cfg.validate();
    ConstraintReport r;
    const Natural& q = c.q;
    const Natural nv = c.n.value();
    const Factorization fq = euler_part_factorization(c);
    const Factorization fN = fq * c.n.squared();

    const bool q_prime = is_prime(q);
    r.add(std::string(check::kQPrime), pass_if(q_prime), "q = " + q.str());
    const Natural q4 = q % Natural(4);
    r.add(std::string(check::kQMod4), pass_if(q4 == Natural(1)), "q mod 4 = " + q4.str());
    r.add(std::string(check::kKMod4), pass_if(c.k % 4 == 1), "k mod 4 = " + std::to_string(c.k % 4));
    const Natural g = gcd(q, nv);
    r.add(std::string(check::kCoprime), pass_if(g.is_one()), "gcd(q, n) = " + g.str());
    r.add(std::string(check::kNOdd), pass_if(nv.is_odd()), "n = " + nv.str());

    const Natural N = c.N();
    const std::string digits = N.str();
    r.add(std::string(check::kSize), pass_if(N > Natural::pow(Natural(10), 1500)),
          "N has " + std::to_string(digits.size()) + " decimal digits");
    const std::size_t w = omega(fN);
    r.add(std::string(check::kOmega), pass_if(w >= 10), "omega(N) = " + std::to_string(w));

    const Ratio iq = abundancy_index(fq);
    r.add(std::string(check::kEulerIndex), pass_if(iq < Ratio::of(5, 4)), "I(q^k) = " + iq.str());

    if (c.k == 1) {
        r.add(std::string(check::kKShortcut), CheckStatus::Pass, "k = 1, not applicable");
    } else {
        r.add(std::string(check::kKShortcut), pass_if(q < nv), "k = " + std::to_string(c.k) + ", q = " + q.str() +
                                                                  ", n = " + nv.str());
    }

    r.add(std::string(check::kAcquaahKonyagin), pass_if(acquaah_konyagin_holds(q, nv)),
          "q^2 = " + (q * q).str() + ", 3n^2 = " + (Natural(3) * nv * nv).str());

    const Ratio in = abundancy_index(c.n);
    const auto odd = std::find_if(fN.factors().begin(), fN.factors().end(),
                                  [](const PrimePower& pp) { return pp.prime.is_odd(); });
    if (odd == fN.factors().end()) {
        r.add(std::string(check::kIndexBound), CheckStatus::Undecided, "N has no odd prime factor");
    } else {
        const Natural u = odd->prime;
        const Decision d = decide([&](unsigned bits) { return index_lower_bound_enclosure(Ratio::of(8, 5), u, bits); },
                                  in, cfg);
        const CheckStatus st = d.order == Ordering::Less      ? CheckStatus::Pass
                             : d.order == Ordering::Greater   ? CheckStatus::Fail
                                                              : CheckStatus::Undecided;
        r.add(std::string(check::kIndexBound), st,
              "u = " + u.str() + ", I(n) = " + in.str() + ", bound = " + d.value.str(), d.bits);
    }

    const Ratio iN = abundancy_index(fN);
    r.add(std::string(check::kPerfection), pass_if(iN == Ratio(2)),
          "I(N) = " + iN.str() + ", I(N) - 2 = " + (iN - Ratio(2)).str());
    return r;
}

bool acquaah_konyagin_holds(const Natural& q, const Natural& n)
{
    return q * q < Natural(3) * n * n;
}

bool lemma4_premise_holds(const EulerianCandidate& c)
{
    const Ratio iq = abundancy_index(euler_part_factorization(c));
    const Ratio in = abundancy_index(c.n);
    return pow(iq, 3) < Ratio(2) && pow(in, 3) > Ratio(2);
}

Lemma4Outcome lemma4_predicates(const EulerianCandidate& c)
{
    const Factorization fq = euler_part_factorization(c);
    if (!fq.coprime_to(c.n)) {
        throw DomainError("lemma4: q^k and n are not coprime");
    }
    const Ratio iq = abundancy_index(fq);
    const Ratio in = abundancy_index(c.n);
    if (!(pow(iq, 3) < Ratio(2))) {
        throw PremiseViolation("lemma4 premise: I(q^k)^3 = " + pow(iq, 3).str() + " is not below 2");
    }
    if (!(pow(in, 3) > Ratio(2))) {
        throw PremiseViolation("lemma4 premise: I(n)^3 = " + pow(in, 3).str() + " is not above 2");
    }
    const Natural qk = fq.value();
    const Natural nv = c.n.value();
    const Natural sq = sigma(fq);
    const Natural sn = sigma(c.n);

    Lemma4Outcome o{};
    o.p1 = qk < nv;
    o.p2 = sq * qk < sn * nv;
    o.p3 = sq < sn;
    o.p1_implies_p3 = !o.p1 || o.p3;
    o.p1_implies_p2 = !o.p1 || o.p2;
    o.p2_implies_p3 = !o.p2 || o.p3;
    o.p3_implies_p1 = !o.p3 || o.p1;
    return o;
}

IntervalReal theorem2_lower_bound(const Natural& q, const Natural& u, unsigned bits)
{
    require_euler_prime(q, "f(q,u)");
    require_odd_prime(u, "f(q,u)");
    const unsigned w = bits + kInnerGuard;
    const Natural q1 = q + Natural(1);
    const IntervalReal head = IntervalReal::exact(Ratio(q1, q), w);
    const IntervalReal tail = eval_pow(Ratio(Natural(2) * q, q1), reciprocal_exponent_enclosure(u, w), w);
    return narrow(head + tail, bits);
}

IntervalReal limit_lower_bound(const Natural& u, unsigned bits)
{
    require_odd_prime(u, "limit f(q,u)");
    const unsigned w = bits + kInnerGuard;
    const IntervalReal tail = eval_pow(Ratio(2), reciprocal_exponent_enclosure(u, w), w);
    return narrow(IntervalReal::exact(Ratio(1), w) + tail, bits);
}

IntervalReal theorem2_ceiling(unsigned bits)
{
    const unsigned w = bits + kInnerGuard;
    return narrow(IntervalReal::exact(Ratio(1), w) + eval_sqrt(Ratio(3), w), bits);
}

Ratio theorem2_margin()
{
    return Ratio::of(1, 1000);
}

Theorem2Scan theorem2_contradiction_scan(std::uint64_t q_limit, const Natural& u, const PrecisionConfig& cfg)
{
    cfg.validate();
    require_odd_prime(u, "theorem2 scan");
    Theorem2Scan scan{u.to_u64(),
                      {},
                      0,
                      0,
                      0,
                      0,
                      std::nullopt,
                      true,
                      limit_lower_bound(u, cfg.initial_bits),
                      theorem2_ceiling(cfg.initial_bits),
                      {}};

    const Ratio margin = theorem2_margin();
    const auto ceiling = [](unsigned bits) { return theorem2_ceiling(bits); };
    for (const std::uint64_t q : primes_up_to(q_limit)) {
        if (q < 5 || q % 4 != 1) {
            continue;
        }
        const Natural qn(q);
        const auto f = [&](unsigned bits) { return theorem2_lower_bound(qn, u, bits); };
        PairDecision d = decide_pair(f, ceiling, cfg);
        bool margin_ok = false;
        if (d.order == Ordering::Greater) {
            margin_ok = compare(d.lhs - d.rhs, margin) == Ordering::Greater;
            if (!margin_ok) {
                margin_ok = decide([&](unsigned bits) { return f(bits) - ceiling(bits); }, margin, cfg).order ==
                            Ordering::Greater;
            }
        }
        switch (d.order) {
        case Ordering::Greater:
            ++scan.greater;
            break;
        case Ordering::Less:
            ++scan.less;
            break;
        case Ordering::Undecided:
            ++scan.undecided;
            break;
        }
        scan.margin_certified += margin_ok ? 1 : 0;

        const CheckStatus st = d.order == Ordering::Greater ? CheckStatus::Pass
                             : d.order == Ordering::Less    ? CheckStatus::Fail
                                                            : CheckStatus::Undecided;
        scan.report.add("f(q,u)_gt_1+sqrt3 q=" + std::to_string(q), st,
                        "f = " + d.lhs.str() + (margin_ok ? ", margin > 1/1000" : ""), d.bits);

        if (!scan.points.empty()) {
            const Theorem2Point& prev = scan.points.back();
            if (compare(prev.f, d.lhs) != Ordering::Less) {
                const Natural pq(prev.q);
                const auto fp = [&](unsigned bits) { return theorem2_lower_bound(pq, u, bits); };
                if (decide_pair(fp, f, cfg).order != Ordering::Less) {
                    scan.increasing = false;
                }
            }
        }
        scan.points.push_back({q, std::move(d.lhs), d.order, margin_ok, d.bits});
        const std::size_t idx = scan.points.size() - 1;
        if (!scan.argmin ||
            mpfr_less_p(scan.points[idx].f.lo().get(), scan.points[*scan.argmin].f.lo().get()) != 0) {
            scan.argmin = idx;
        }
    }
    return scan;
}

const char* to_string(ResidualCase c)
{
    switch (c) {
    case ResidualCase::Q5:
        return "CASE_Q5";
    case ResidualCase::FiveMod12:
        return "CASE_5_MOD_12";
    case ResidualCase::OneMod12:
        break;
    }
    return "CASE_1_MOD_12";
}

ResidualClassification residual_case_classify(const Natural& q)
{
    require_euler_prime(q, "classify");
    const Natural half = (q + Natural(1)) / Natural(2);
    const bool three = (half % Natural(3)).is_zero();
    const std::string half_note =
        "(q+1)/2 = " + half.str() + (three ? " is divisible by 3" : " is not divisible by 3");
    if (q == Natural(5)) {
        return {ResidualCase::Q5,
                three,
                {"q = 5 requires k = 1 (Iannucci), hence 5 = q < n", half_note,
                 "3 | (q+1)/2 | n^2"}};
    }
    if (q % Natural(12) == Natural(5)) {
        return {ResidualCase::FiveMod12,
                three,
                {half_note, "q = 2 (mod 3): 3 | (q+1)/2 | n^2 when k = 1",
                 "residual case 5 != q = 5 (mod 12)"}};
    }
    return {ResidualCase::OneMod12, three, {half_note, "no divisibility by 3 is forced"}};
}

} // namespace opnkit
