#pragma once

#include <string>

#include <json.hpp>

#include "prefkernel/domains.hpp"
#include "prefkernel/preference.hpp"
#include "prefkernel/scenarios.hpp"
#include "prefkernel/sequences.hpp"
#include "prefkernel/space.hpp"

namespace prefkernel {
namespace io {

using json = nlohmann::ordered_json;

// points: {dim, metric, connect_radius, points: [[..], ..]} (+ optional grid block)
json space_to_json(const GroundSpace& sp);
SpacePtr space_from_json(const json& j);

// {space_id, members: [indices]}
json feasible_to_json(const FeasibleSet& f, const std::string& space_id = "s0");
FeasibleSet feasible_from_json(const json& j, const SpacePtr& sp);

// {space_id, pairs: per-row run lengths alternating absent/present, starting absent}
json preference_to_json(const Preference& p, const std::string& space_id = "s0");
Preference preference_from_json(const json& j, const SpacePtr& sp);

// {space_id, utilities: [{values, lipschitz?, flags}]}
json multi_utility_to_json(const MultiUtility& mu, const std::string& space_id = "s0");
MultiUtility multi_utility_from_json(const json& j, const SpacePtr& sp);

// {base, domains: [[indices]...]} in canonical order
json domain_collection_to_json(const DomainCollection& d);

// {space, policy, horizon, preferences, terms, limit, witness?}
json sequence_to_json(const ProblemSequence& seq);
ProblemSequence sequence_from_json(const json& j);

json scenario_spec_to_json(const ScenarioSpec& spec);
ScenarioSpec scenario_spec_from_json(const json& j);

json convergence_to_json(const ConvergenceReport& r);
json condition3_to_json(const Condition3Report& r);
json theorem_report_to_json(const TheoremReport& r);
json equivalence_report_to_json(const EquivalenceReport& r);
json floor_report_to_json(const FloorReport& r);
json term_stats_to_json(const std::vector<TermStats>& stats);
std::string term_stats_to_csv(const std::vector<TermStats>& stats);

/// FNV-1a over a canonical serialization; stable across platforms and runs.
std::string digest(const std::string& payload);

/// One JSON line per differential comparison.
json oracle_report(const std::string& operation, const std::string& instance_digest,
                   const json& kernel, const json& oracle, bool agree);

/// Temp file in the target directory plus rename.
void atomic_write(const std::string& path, const std::string& content);

struct RunResult {
    json report;
    std::string verdict;
    std::string expected;  // empty when the catalog declares none
    bool matches_expected = false;
};

/// Builds the scenario, runs the named verifier, and assembles the full
/// report (verdict, premises, per-term stats).
RunResult run_scenario(const ScenarioSpec& spec, const std::string& verifier,
                       std::size_t clique_cap = kDefaultCliqueCap);

struct SuiteResult {
    json summary;
    std::string table;  // printable per-row summary
    bool all_ok = false;
};

/// Runs every catalog entry with its canonical verifier plus the
/// kernel-vs-reference differential campaigns. A positive horizon override
/// shortens every scenario (tolerances are scenario-relative, so the catalog
/// expectations still hold). The summary embeds the differential comparisons
/// as a JSON-lines stream.
SuiteResult run_suite(std::size_t clique_cap = kDefaultCliqueCap,
                      int horizon_override = 0);

}  // namespace io
}  // namespace prefkernel
