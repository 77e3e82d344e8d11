#include "opnkit/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "opnkit/abundancy.hpp"
#include "opnkit/constraints.hpp"

namespace opnkit {

namespace {

// Seeds for the individual corpora are derived from the report seed so that
// the corpora differ from one another.
constexpr std::uint64_t kLemma4Salt = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kAcquaahSalt = 0xbf58476d1ce4e5b9ULL;

nlohmann::ordered_json enclosure_json(const IntervalReal& x)
{
    return {{"text", x.str()},
            {"lo", x.lo_str()},
            {"hi", x.hi_str()},
            {"width", [&] {
                 char* raw = nullptr;
                 mpfr_asprintf(&raw, "%.3RUe", x.width().get());
                 std::string s(raw);
                 mpfr_free_str(raw);
                 return s;
             }()},
            {"bits", x.precision()}};
}

} // namespace

bool printed_value_matches(const IntervalReal& enclosure, std::string_view printed)
{
    const Ratio v = Ratio::parse(printed);
    const auto dot = printed.find('.');
    const std::size_t decimals = dot == std::string_view::npos ? 0 : printed.size() - dot - 1;
    const Ratio ulp = Ratio(1) / pow(Ratio(10), static_cast<unsigned>(decimals));
    const IntervalReal band = [&] {
        const unsigned bits = enclosure.precision() + 16;
        const IntervalReal lo = IntervalReal::exact(v - ulp, bits);
        const IntervalReal hi = IntervalReal::exact(v + ulp, bits);
        return IntervalReal(lo.lo(), hi.hi(), bits);
    }();
    return overlaps(enclosure, band);
}

std::vector<ConstantEntry> reproduce_constants(unsigned bits)
{
    std::vector<ConstantEntry> out;
    const auto add = [&](std::string label, std::string expr, IntervalReal x, std::string printed) {
        const bool match = printed_value_matches(x, printed);
        out.push_back({std::move(label), std::move(expr), std::move(x), std::move(printed), match});
    };
    add("index_lower_bound_u3", "(8/5)^(ln(4/3)/ln(13/9))",
        index_lower_bound_enclosure(Ratio::of(8, 5), Natural(3), bits), "1.44440557");
    add("exponent_x3", "ln(13/9)/ln(4/3)", exponent_enclosure(Factorization::prime_power(Natural(3), 1), bits),
        "1.27823");
    add("limit_u5", "1+2^(ln(6/5)/ln(31/25))", limit_lower_bound(Natural(5), bits), "2.799");
    add("ceiling", "1+sqrt(3)", theorem2_ceiling(bits), "2.732");
    add("limit_u3", "1+2^(ln(4/3)/ln(13/9))", limit_lower_bound(Natural(3), bits), "2.7199");
    return out;
}

bool ReproductionReport::ok() const
{
    return std::all_of(constants.begin(), constants.end(), [](const ConstantEntry& c) { return c.match; }) &&
           std::all_of(suites.begin(), suites.end(), [](const SuiteSummary& s) { return s.clean(); });
}

const SuiteSummary* ReproductionReport::suite(std::string_view name) const
{
    const auto it = std::find_if(suites.begin(), suites.end(), [&](const SuiteSummary& s) { return s.name == name; });
    return it == suites.end() ? nullptr : &*it;
}

ReproductionReport run_report(const ReportOptions& o)
{
    o.precision.validate();
    ReproductionReport r;
    r.options = o;
    r.constants = reproduce_constants(o.precision.initial_bits);

    const auto pairs = sandwich_corpus(o.seed, o.sandwich_pairs, o.sandwich_max_value);
    r.suites.push_back(run_sigma_oracle_suite(o.sigma_oracle_max));
    r.suites.push_back(run_sandwich_suite(pairs, o.precision));
    r.suites.push_back(run_exponent_range_suite(pairs, o.precision));
    r.suites.push_back(run_index_square_suite(pairs));
    r.suites.push_back(run_monotonicity_s_suite(o.monotonicity_s_r_max, o.monotonicity_t_max, o.precision));
    r.suites.push_back(run_monotonicity_r_suite(o.monotonicity_r_max, o.precision));
    r.suites.push_back(run_lemma4_suite(lemma4_corpus(o.seed ^ kLemma4Salt, o.lemma4_candidates)));
    r.suites.push_back(
        run_theorem2_suite(o.theorem2_q_limit, 5, Theorem2Expectation::Contradiction, o.precision));
    r.suites.push_back(
        run_theorem2_suite(o.theorem2_q_limit, 3, Theorem2Expectation::NoContradiction, o.precision));
    r.suites.push_back(run_mersenne_suite(o.mersenne_limit));
    r.suites.push_back(run_acquaah_konyagin_suite(o.seed ^ kAcquaahSalt, o.acquaah_konyagin_pairs, o.precision));
    return r;
}

std::string render_text(const ReproductionReport& report)
{
    std::ostringstream os;
    const ReportOptions& o = report.options;
    os << "opnkit reproduction report\n";
    os << "seed " << o.seed << ", precision " << o.precision.initial_bits << ".." << o.precision.max_bits
       << " bits\n\n";
    os << "constants\n";
    for (const ConstantEntry& c : report.constants) {
        os << "  " << c.label << "  " << c.expression << "\n";
        os << "    " << c.enclosure.str() << "  printed " << c.printed << "  " << (c.match ? "MATCH" : "MISMATCH")
           << "\n";
    }
    os << "\nsuites\n";
    for (const SuiteSummary& s : report.suites) {
        os << "  " << s.name << ": cases " << s.cases << ", failures " << s.failures << ", undecided " << s.undecided
           << (s.clean() ? "  OK" : "  FAILED") << "\n";
        for (const auto& [k, v] : s.facts) {
            os << "    " << k << " = " << v << "\n";
        }
    }
    os << "\nstatus: " << (report.ok() ? "OK" : "FAILED") << "\n";
    return os.str();
}

std::string render_json(const ReproductionReport& report)
{
    nlohmann::ordered_json doc;
    auto& constants = doc["constants"] = nlohmann::ordered_json::array();
    for (const ConstantEntry& c : report.constants) {
        constants.push_back({{"label", c.label},
                             {"expression", c.expression},
                             {"enclosure", enclosure_json(c.enclosure)},
                             {"printed", c.printed},
                             {"match", c.match}});
    }
    auto& suites = doc["suites"] = nlohmann::ordered_json::array();
    for (const SuiteSummary& s : report.suites) {
        nlohmann::ordered_json facts = nlohmann::ordered_json::object();
        for (const auto& [k, v] : s.facts) {
            facts[k] = v;
        }
        suites.push_back({{"name", s.name},
                          {"cases", s.cases},
                          {"failures", s.failures},
                          {"undecided", s.undecided},
                          {"facts", std::move(facts)}});
    }
    const ReportOptions& o = report.options;
    doc["environment"] = {{"seed", o.seed},
                          {"initial_bits", o.precision.initial_bits},
                          {"max_bits", o.precision.max_bits},
                          {"sandwich_pairs", o.sandwich_pairs},
                          {"lemma4_candidates", o.lemma4_candidates},
                          {"sigma_oracle_max", o.sigma_oracle_max},
                          {"theorem2_q_limit", o.theorem2_q_limit},
                          {"mersenne_limit", o.mersenne_limit}};
    doc["ok"] = report.ok();
    return doc.dump(2) + "\n";
}

} // namespace opnkit
