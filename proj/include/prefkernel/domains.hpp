#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "prefkernel/preference.hpp"
#include "prefkernel/space.hpp"

namespace prefkernel {

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

/// Raised when maximal-domain enumeration exceeds the configured cap.
class CliqueCapError : public std::runtime_error {
public:
    explicit CliqueCapError(std::size_t cap)
        : std::runtime_error("maximal-domain enumeration exceeded the cap of " +
                             std::to_string(cap)),
          cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

/// The maximal comparability domains of a preference relative to a base set.
/// Domains are sorted index lists; the collection is in lexicographic order.
struct DomainCollection {
    FeasibleSet base;
    std::vector<FeasibleSet> domains;

    bool contains(const FeasibleSet& d) const;
};

/// Undirected graph over positions of `b.members()`: edge iff the two points
/// are comparable. Self-loops are implicit and not stored.
BitMatrix comparability_graph(const Preference& p, const FeasibleSet& b);

/// Maximal comparability domains = maximal cliques of the comparability
/// graph, enumerated by pivoted depth-first search over bitset neighborhoods
/// with deterministic (ascending index) ordering.
DomainCollection maximal_domains(const Preference& p, const FeasibleSet& b,
                                 std::size_t clique_cap = kDefaultCliqueCap);

/// Elements of a comparability domain weakly above everything in it. Throws
/// if `d` is not complete under `p`.
FeasibleSet best_elements(const Preference& p, const FeasibleSet& d);

/// Union of best elements over all maximal domains; agrees with
/// max_elements(p, k) by the best-element characterization of maximality.
FeasibleSet max_via_domains(const Preference& p, const FeasibleSet& k,
                            std::size_t clique_cap = kDefaultCliqueCap);

struct DomainReport {
    bool is_domain = false;         // complete under p
    bool is_connected = false;      // in the connect_radius adjacency graph
    bool exterior_bound = false;
    std::optional<int> bound_witness;
    // Hypotheses of the connected-domain characterization, reported not
    // assumed: ambient density and connected indifference classes.
    bool ambient_dense = false;
    bool classes_connected = false;
    bool hypotheses_hold = false;
    bool verdict_maximal = false;   // complete, connected, no exterior bound
    std::optional<bool> enumeration_member;  // cross-check when under the cap
};

/// Diagnostic characterization of a candidate domain inside `k`.
DomainReport characterize_domain(const Preference& p, const FeasibleSet& k,
                                 const FeasibleSet& d,
                                 std::size_t clique_cap = kDefaultCliqueCap);

}  // namespace prefkernel
