#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prefkernel/sequences.hpp"

namespace prefkernel {

/// Declarative description of a scenario instance: grid, horizon, tolerance
/// policy, seed, and scenario-specific numeric parameters. Fields left at
/// their zero values fall back to the scenario's defaults.
struct ScenarioSpec {
    std::string name;
    std::vector<double> grid_lo, grid_hi;
    double grid_h = 0.0;
    int horizon = 0;
    std::optional<LimitPolicy> policy;
    std::uint64_t seed = 1;
    std::map<std::string, double> params;

    double param_or(const std::string& key, double fallback) const {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    }
};

struct ScenarioBundle {
    std::string name;
    ProblemSequence seq;
    std::optional<MultiUtility> mu;  // multi-utility behind the (limit) preference
    std::vector<std::string> notes;  // discrete caveats worth surfacing in reports
};

/// Two-good consumer with two linear utilities and a price family whose
/// banana price falls to parity; the corner bundle stays optimal along the
/// family but not in the limit.
ScenarioBundle gen_linear_consumer(const ScenarioSpec& spec);

/// Two-agent, two-good exchange economy under the Pareto relation of
/// strictly concave per-agent utilities; endowments grow onto the grid.
ScenarioBundle gen_exchange_pareto(const ScenarioSpec& spec);

/// Varying preference from a quadratic utility whose vertex slides toward
/// the midpoint; zero stays maximal along the family but not in the limit.
ScenarioBundle gen_shifting_vertex(const ScenarioSpec& spec);

/// Preferences complete within the blocks of a fixed partition and silent
/// across blocks; block orders perturb early and stabilize.
ScenarioBundle gen_fixed_partition(const ScenarioSpec& spec);

/// Identity relation below one half, full indifference block above; feasible
/// intervals creep up to the block's edge, dragging singleton domains toward
/// a point that is no longer a maximal domain.
ScenarioBundle gen_diagonal_block(const ScenarioSpec& spec);

/// Vector order on the unit square with feasible sets growing to the full
/// square; the bottom-right corner stays maximal along the family but not in
/// the limit. Ships a bottom-edge witness domain sequence.
ScenarioBundle gen_shrinking_triangle(const ScenarioSpec& spec);

/// Budget sets with a common floor at the origin under a strictly
/// quasiconcave two-utility partial order; wealth grows onto the grid.
ScenarioBundle gen_budget_floor(const ScenarioSpec& spec);

/// Finite-support lotteries on a simplex grid with converging expected
/// (linear) utilities; the limit is a partial order by construction.
ScenarioBundle gen_lottery_emu(const ScenarioSpec& spec);

/// Seeded random multi-utility families with 1/n perturbation decay and
/// feasible windows shrinking onto a limit window.
ScenarioBundle gen_random(const ScenarioSpec& spec);

struct CatalogEntry {
    std::string name;
    std::string verifier;          // canonical verifier for cmd run
    std::string expected_verdict;  // catalog expectation for that verifier
    std::size_t clique_cap = kDefaultCliqueCap;
    bool ls_differential = false;  // feasible for selection-sweep comparison
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);

/// Defaults for a named scenario (grid, horizon, policy, parameters).
ScenarioSpec default_spec(const std::string& name);

/// Fills unset fields from the defaults and dispatches to the generator.
ScenarioBundle build_scenario(const ScenarioSpec& spec);

/// Names of the verifiers understood by the CLI and the C API.
const std::vector<std::string>& verifier_names();

}  // namespace prefkernel
