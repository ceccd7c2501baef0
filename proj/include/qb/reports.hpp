#ifndef QB_REPORTS_HPP
#define QB_REPORTS_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qb/p1.hpp"
#include "qb/problem.hpp"

namespace qb {

// Invariant battery run on one genus-0 instance pair.
struct OracleChecks {
    HypercohProfile profile;
    bool chi_agrees = false;
    bool alternating_sum = false;
    bool hom_agrees = false;
    bool serre_duality = false;
    bool vanishing_applicable = false;  // every arrow certified inj-or-gensurj
    bool vanishing_holds = true;
    bool ext1_applicable = false;  // H2 == 0
    bool ext1_holds = true;
    bool pass = false;
};

OracleChecks run_oracle_battery(const QuiverBundleP1& E, const QuiverBundleP1& Ep);

// Per-subcommand machine-readable reports; the text output is rendered from
// these so the two views agree field by field.
nlohmann::json report_euler(const Problem& p);
nlohmann::json report_dim(const Problem& p);
nlohmann::json report_smooth(const Problem& p);
nlohmann::json report_walls(const Problem& p, long long lo, long long hi);
nlohmann::json report_stability(const Problem& p);
nlohmann::json report_oracle_verify(const Problem& p);
nlohmann::json report_oracle_random(std::uint64_t seed, int count, const InstanceLimits& limits);

std::string render_text(const std::string& command, const nlohmann::json& report);

}  // namespace qb

#endif
