#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "opnkit/interval.hpp"
#include "opnkit/suites.hpp"

namespace opnkit {

struct ConstantEntry {
    std::string label;
    std::string expression;
    IntervalReal enclosure;
    /// Decimal as printed in the source literature.
    std::string printed;
    bool match;
};

/// True iff [v - 10^-d, v + 10^-d] meets the enclosure, where v is the
/// printed decimal and d its number of fractional digits.
bool printed_value_matches(const IntervalReal& enclosure, std::string_view printed);

/// The five certified constants, evaluated at `bits`.
std::vector<ConstantEntry> reproduce_constants(unsigned bits);

/// Workload sizes. The defaults are the full acceptance workload.
struct ReportOptions {
    std::uint64_t seed = 42;
    PrecisionConfig precision;
    std::uint64_t sigma_oracle_max = 100'000;
    std::size_t sandwich_pairs = 10'000;
    std::uint64_t sandwich_max_value = 1'000'000;
    std::uint64_t monotonicity_s_r_max = 1000;
    unsigned monotonicity_t_max = 20;
    std::uint64_t monotonicity_r_max = 10'000;
    std::size_t lemma4_candidates = 10'000;
    std::uint64_t theorem2_q_limit = 10'000;
    std::uint64_t mersenne_limit = 2500;
    std::size_t acquaah_konyagin_pairs = 1000;
};

struct ReproductionReport {
    ReportOptions options;
    std::vector<ConstantEntry> constants;
    std::vector<SuiteSummary> suites;

    /// Every constant matches and every suite has no failures or undecided cases.
    [[nodiscard]] bool ok() const;
    [[nodiscard]] const SuiteSummary* suite(std::string_view name) const;
};

/// Deterministic in (options): suites run in a fixed order and nothing
/// time- or host-dependent is recorded.
ReproductionReport run_report(const ReportOptions& options);

std::string render_text(const ReproductionReport& report);
/// Fields: constants[], suites[], environment.
std::string render_json(const ReproductionReport& report);

} // namespace opnkit
