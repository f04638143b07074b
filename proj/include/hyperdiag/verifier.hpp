#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <hyperdiag/hyperseries.hpp>
#include <hyperdiag/linform.hpp>

namespace hyperdiag
{

enum class ReportStatus { verified, mismatch, builder_refused };

const char *to_string(ReportStatus s) noexcept;

struct NamedSeries {
    std::string method;
    Series series;
};

struct Check {
    std::string label;
    bool passed = false;
    std::string detail;
};

struct Mismatch {
    std::string label;
    std::size_t index = 0;
    std::vector<std::pair<std::string, rational>> values;
};

struct VerificationReport {
    std::string description;
    std::string builder;
    std::optional<PFQParams> raw_params;
    std::optional<PFQParams> reduced_params;
    std::vector<NamedSeries> sources;
    std::vector<Check> checks;
    ReportStatus status = ReportStatus::verified;
    std::string refusal_reason;
    std::optional<Mismatch> mismatch;

    // No check failed. A builder refusal still counts as success as long as
    // the remaining sources agree.
    bool ok() const noexcept
    {
        return status != ReportStatus::mismatch;
    }
};

enum class BuilderChoice { automatic, thm1, general1, general2 };

// Compares the pFq from the applicable builder against the closed-form
// diagonal (order K_closed) and, when K_oracle is given, the brute-force
// oracle (order K_oracle). Builder refusals are reported, not thrown.
VerificationReport verify_identity(const LinearFormProduct &p, unsigned K_closed,
                                   std::optional<unsigned> K_oracle = std::nullopt,
                                   BuilderChoice choice = BuilderChoice::automatic);

// hadamard(pfq(lhs), pfq(rhs)) == pfq(expect) up to order K.
VerificationReport hadamard_combination(const PFQParams &lhs, const PFQParams &rhs, const PFQParams &expect,
                                        unsigned K);

using ScenarioArgs = std::map<std::string, rational>;

const std::vector<std::string> &scenario_names();

// Runs a scripted identity check. Missing arguments fall back to the
// scenario's defaults (some default to a sweep over several values); a
// missing order falls back to the scenario's reference order.
// Throws unknown_scenario and parse_error (unknown argument).
VerificationReport scenario(std::string_view name, const ScenarioArgs &args = {},
                            std::optional<unsigned> order = std::nullopt);

} // namespace hyperdiag
