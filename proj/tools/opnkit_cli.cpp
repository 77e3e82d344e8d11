// opnkit command-line entry point.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opnkit/abundancy.hpp"
#include "opnkit/arithmetic.hpp"
#include "opnkit/constraints.hpp"
#include "opnkit/error.hpp"
#include "opnkit/even_perfect.hpp"
#include "opnkit/interval.hpp"
#include "opnkit/report.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace opnkit;

json enclosure(const IntervalReal& x)
{
    return {{"text", x.str()}, {"lo", x.lo_str()}, {"hi", x.hi_str()}, {"bits", x.precision()}};
}

json report_json(const ConstraintReport& r)
{
    json checks = json::array();
    for (const CheckEntry& e : r.checks) {
        checks.push_back({{"name", e.name},
                          {"status", to_string(e.status)},
                          {"witness", e.witness},
                          {"precision_bits", e.precision_bits}});
    }
    return checks;
}

void print_report(const ConstraintReport& r)
{
    for (const CheckEntry& e : r.checks) {
        std::cout << to_string(e.status) << "  " << e.name << "  " << e.witness;
        if (e.precision_bits != 0) {
            std::cout << "  [" << e.precision_bits << "b]";
        }
        std::cout << "\n";
    }
}

void emit(bool as_json, const json& doc, const std::string& text)
{
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"opnkit: abundancy index and odd perfect number constraint toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    PrecisionConfig cfg;
    try {
        cfg = PrecisionConfig::from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    app.add_flag("--json", as_json, "Emit a machine-readable JSON document");
    app.add_option("--bits", cfg.initial_bits, "Initial working precision in bits (env OPNKIT_PRECISION_BITS)");
    app.add_option("--max-bits", cfg.max_bits, "Precision escalation ceiling in bits");

    int status = 0;

    std::string number;
    auto* sigma_cmd = app.add_subcommand("sigma", "Sum of divisors of n");
    sigma_cmd->add_option("n", number, "Integer or factored form such as 3^2*5")->required();
    sigma_cmd->callback([&] {
        const Factorization f = parse_factored(number);
        const Natural s = sigma(f);
        emit(as_json, {{"n", f.value().str()}, {"factored", f.str()}, {"sigma", s.str()}},
             "sigma(" + f.str() + ") = " + s.str() + "\n");
    });

    auto* abund_cmd = app.add_subcommand("abundancy", "Abundancy index I(n) = sigma(n)/n");
    abund_cmd->add_option("n", number, "Integer or factored form")->required();
    abund_cmd->callback([&] {
        const Factorization f = parse_factored(number);
        const Ratio i = abundancy_index(f);
        emit(as_json, {{"n", f.value().str()}, {"factored", f.str()}, {"abundancy", i.str()}},
             "I(" + f.str() + ") = " + i.str() + "\n");
    });

    auto* exp_cmd = app.add_subcommand("exponent", "x(n) = ln I(n^2) / ln I(n)");
    exp_cmd->add_option("n", number, "Integer or factored form, n > 1")->required();
    exp_cmd->callback([&] {
        const ExponentValue x = x_exponent(parse_factored(number), cfg);
        status = x.range_certified ? 0 : 1;
        emit(as_json,
             {{"n", x.of.str()}, {"x", enclosure(x.value)}, {"range_1_2_certified", x.range_certified}},
             "x(" + x.of.str() + ") = " + x.value.str() + (x.range_certified ? "" : "  (1 < x < 2 UNDECIDED)") +
                 "\n");
    });

    std::string a_text;
    std::string b_text;
    auto* sandwich_cmd = app.add_subcommand("sandwich", "Certify min(x(a),x(b)) < x(ab) < max(x(a),x(b))");
    sandwich_cmd->add_option("a", a_text)->required();
    sandwich_cmd->add_option("b", b_text)->required();
    sandwich_cmd->callback([&] {
        const Factorization fa = parse_factored(a_text);
        const Factorization fb = parse_factored(b_text);
        const SandwichResult r = sandwich_check(fa, fb, cfg);
        status = r.status == SandwichStatus::Holds ? 0 : 1;
        emit(as_json,
             {{"a", fa.str()},
              {"b", fb.str()},
              {"status", to_string(r.status)},
              {"x_a", enclosure(r.xa)},
              {"x_b", enclosure(r.xb)},
              {"x_ab", enclosure(r.xab)},
              {"bits", r.bits}},
             std::string(to_string(r.status)) + "\n  x(a)  = " + r.xa.str() + "\n  x(b)  = " + r.xb.str() +
                 "\n  x(ab) = " + r.xab.str() + "\n");
    });

    std::vector<std::string> candidate_words;
    auto* check_cmd = app.add_subcommand("check", "Validate an Eulerian candidate `q=<int> k=<int> n=<factored>`");
    check_cmd->add_option("candidate", candidate_words, "Candidate line (quoted or as separate words)")->required();
    check_cmd->callback([&] {
        std::string line;
        for (const auto& w : candidate_words) {
            line += w + " ";
        }
        const EulerianCandidate c = parse_candidate(line);
        const ConstraintReport r = validate_eulerian(c, cfg);
        status = (r.count(CheckStatus::Fail) == 0 && r.count(CheckStatus::Undecided) == 0) ? 0 : 1;
        if (as_json) {
            emit(true, {{"candidate", c.str()}, {"checks", report_json(r)}}, "");
        } else {
            std::cout << "candidate " << c.str() << "\n";
            print_report(r);
        }
    });

    std::string L_text;
    std::uint64_t u = 0;
    auto* bound_cmd = app.add_subcommand("bound", "Lower bound L^(1/x(u)) for I(n) given I(n^2) > L");
    bound_cmd->add_option("--L", L_text, "Ratio L > 1, e.g. 8/5")->required();
    bound_cmd->add_option("--u", u, "Odd prime u")->required();
    bound_cmd->callback([&] {
        const Ratio L = Ratio::parse(L_text);
        const IntervalReal b = index_lower_bound_from_square(L, Natural(u), cfg);
        emit(as_json, {{"L", L.str()}, {"u", u}, {"bound", enclosure(b)}},
             "(" + L.str() + ")^(1/x(" + std::to_string(u) + ")) = " + b.str() + "\n");
    });

    std::uint64_t q = 0;
    bool limit = false;
    auto* f_cmd = app.add_subcommand("f", "f(q,u) = (q+1)/q + (2q/(q+1))^(1/x(u))");
    f_cmd->add_option("--q", q, "Prime q = 1 (mod 4)");
    f_cmd->add_option("--u", u, "Odd prime u")->required();
    f_cmd->add_flag("--limit", limit, "Evaluate the q -> infinity limit 1 + 2^(1/x(u)) instead");
    f_cmd->callback([&] {
        const IntervalReal ceiling = theorem2_ceiling(cfg.initial_bits);
        const bool use_limit = limit || q == 0;
        const IntervalReal v = use_limit ? limit_lower_bound(Natural(u), cfg.initial_bits)
                                         : theorem2_lower_bound(Natural(q), Natural(u), cfg.initial_bits);
        const Ordering o = compare(v, ceiling);
        const std::string label = use_limit ? "lim f(q," + std::to_string(u) + ")"
                                            : "f(" + std::to_string(q) + "," + std::to_string(u) + ")";
        json doc{{"u", u}, {"f", enclosure(v)}, {"ceiling", enclosure(ceiling)}, {"vs_ceiling", to_string(o)}};
        if (!use_limit) {
            doc["q"] = q;
        }
        emit(as_json, doc,
             label + " = " + v.str() + "\n1+sqrt(3) = " + ceiling.str() + "\n" + to_string(o) + "\n");
    });

    std::uint64_t qmax = 0;
    auto* scan_cmd = app.add_subcommand("scan-theorem2", "Compare f(q,u) with 1+sqrt(3) for primes q = 1 (mod 4)");
    scan_cmd->add_option("--qmax", qmax, "Largest q scanned")->required();
    scan_cmd->add_option("--u", u, "Odd prime u")->required();
    scan_cmd->callback([&] {
        const Theorem2Scan s = theorem2_contradiction_scan(qmax, Natural(u), cfg);
        status = s.undecided == 0 ? 0 : 1;
        json doc{{"u", u},
                 {"qmax", qmax},
                 {"scanned", s.points.size()},
                 {"greater", s.greater},
                 {"less", s.less},
                 {"undecided", s.undecided},
                 {"margin_certified", s.margin_certified},
                 {"increasing", s.increasing},
                 {"limit", enclosure(s.limit)},
                 {"ceiling", enclosure(s.ceiling)}};
        std::string text = "scanned " + std::to_string(s.points.size()) + " primes q = 1 (mod 4), 5 <= q <= " +
                           std::to_string(qmax) + "\n" + "f > 1+sqrt(3): " + std::to_string(s.greater) +
                           ", f < 1+sqrt(3): " + std::to_string(s.less) +
                           ", undecided: " + std::to_string(s.undecided) + "\n" +
                           "margin > 1/1000 certified: " + std::to_string(s.margin_certified) + "\n";
        if (s.argmin) {
            const Theorem2Point& m = s.points[*s.argmin];
            doc["min"] = {{"q", m.q}, {"f", enclosure(m.f)}};
            text += "min f at q = " + std::to_string(m.q) + ": " + m.f.str() + "\n";
        }
        text += "limit q -> inf: " + s.limit.str() + "\n1+sqrt(3): " + s.ceiling.str() + "\n";
        doc["checks"] = report_json(s.report);
        emit(as_json, doc, text);
    });

    std::string q_text;
    auto* classify_cmd = app.add_subcommand("classify", "Residual case of an Euler prime q");
    classify_cmd->add_option("q", q_text)->required();
    classify_cmd->callback([&] {
        const ResidualClassification c = residual_case_classify(Natural::parse(q_text));
        std::string text = std::string(to_string(c.kind)) + "\n";
        for (const auto& n : c.notes) {
            text += "  " + n + "\n";
        }
        emit(as_json, {{"q", q_text}, {"case", to_string(c.kind)}, {"notes", c.notes}}, text);
    });

    std::uint64_t plimit = 0;
    bool beyond = false;
    auto* mersenne_cmd = app.add_subcommand("mersenne", "Mersenne prime exponents p <= limit (Lucas-Lehmer)");
    mersenne_cmd->add_option("--limit", plimit, "Largest exponent tested")->required();
    mersenne_cmd->add_flag("--allow-beyond-cap", beyond, "Permit limits above 2500");
    mersenne_cmd->callback([&] {
        const auto ps = mersenne_scan(plimit, beyond);
        std::string text;
        for (const auto p : ps) {
            text += (text.empty() ? "" : " ") + std::to_string(p);
        }
        emit(as_json, {{"limit", plimit}, {"exponents", ps}}, text + "\n");
    });

    ReportOptions ropts;
    auto* report_cmd = app.add_subcommand("report", "Re-derive every constant and re-run every certified suite");
    report_cmd->add_option("--seed", ropts.seed, "Corpus seed");
    report_cmd->callback([&] {
        ropts.precision = cfg;
        const ReproductionReport r = run_report(ropts);
        status = r.ok() ? 0 : 1;
        std::cout << (as_json ? render_json(r) : render_text(r));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
