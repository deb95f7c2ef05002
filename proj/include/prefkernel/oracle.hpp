#pragma once

#include <cstddef>
#include <vector>

#include "prefkernel/preference.hpp"
#include "prefkernel/space.hpp"

namespace prefkernel {
/// Brute-force reference implementations kept deliberately separate from the
/// kernel algorithms; used for differential testing and for computing
/// expected values. Definitional style, no shared algorithm code.
namespace oracle {

/// All maximal comparability domains by full subset sweep (2^|B|).
/// Guarded: |B| must be <= 15.
std::vector<FeasibleSet> maximal_domains(const Preference& p, const FeasibleSet& b);

/// Definitional double loop over the maximality condition.
FeasibleSet max_elements(const Preference& p, const FeasibleSet& a);
FeasibleSet min_elements(const Preference& p, const FeasibleSet& a);

/// Accumulation sets over a tail window of domain collections, by explicit
/// enumeration of all selection sequences. `tail` holds one collection per
/// tail index; `pool` is the candidate universe. A candidate accumulates iff
/// some selection sequence stays within epsilon of it at >= min_matches
/// indices. Guarded by `max_selections`.
std::vector<FeasibleSet> ls_accumulation(
    const std::vector<std::vector<FeasibleSet>>& tail,
    const std::vector<FeasibleSet>& pool, double epsilon, int min_matches,
    std::size_t max_selections = 1'000'000);

}  // namespace oracle
}  // namespace prefkernel
