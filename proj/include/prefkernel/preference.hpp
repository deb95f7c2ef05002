#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prefkernel/space.hpp"

namespace prefkernel {

class BitMatrix;

struct UtilityFlags {
    bool strictly_quasiconcave = false;
    bool linear = false;
};

struct TabulatedUtility {
    std::vector<double> values;  // one value per ground-space point
    std::optional<double> lipschitz;
    UtilityFlags flags;
};

/// Finite family of tabulated utilities over one ground space.
class MultiUtility {
public:
    MultiUtility(SpacePtr space, std::vector<TabulatedUtility> utilities);

    const SpacePtr& space() const { return space_; }
    const std::vector<TabulatedUtility>& utilities() const { return utilities_; }
    int count() const { return int(utilities_.size()); }
    double value(int u, int point) const { return utilities_[u].values[point]; }

    /// Largest declared Lipschitz constant; throws if any is missing.
    double max_lipschitz() const;
    /// Checks each declared constant against the grid quotient
    /// |u(p)-u(q)|/d(p,q); returns indices of utilities whose declaration
    /// fails.
    std::vector<int> lipschitz_violations() const;
    /// Exact discrete Lipschitz constant of utility u over all grid pairs.
    double grid_lipschitz(int u) const;

private:
    SpacePtr space_;
    std::vector<TabulatedUtility> utilities_;
};

/// Arbitrary set of ordered point pairs over a space (not necessarily a
/// preorder); symmetric/asymmetric parts live here.
class Relation {
public:
    Relation(SpacePtr space, BitMatrix matrix);
    Relation(const Relation&);
    Relation(Relation&&) noexcept;
    Relation& operator=(const Relation&);
    Relation& operator=(Relation&&) noexcept;
    ~Relation();

    const SpacePtr& space() const { return space_; }
    const BitMatrix& matrix() const { return *matrix_; }
    bool holds(int i, int j) const;
    std::size_t pair_count() const;

    bool same_pairs(const Relation& o) const;

protected:
    SpacePtr space_;
    std::shared_ptr<const BitMatrix> matrix_;  // shared: relations are immutable
};

struct Violation {
    enum class Kind { Reflexivity, Transitivity };
    Kind kind;
    int i = -1, j = -1, k = -1;
    std::string describe() const;
};

/// Reflexive and transitive relation (a preorder). Completeness is not
/// assumed anywhere.
class Preference : public Relation {
public:
    /// Validates reflexivity and transitivity; throws listing the first
    /// violation otherwise.
    static Preference from_matrix(SpacePtr space, BitMatrix matrix);
    /// Caller guarantees the preorder axioms (e.g. transposes of valid
    /// preferences).
    static Preference from_matrix_unchecked(SpacePtr space, BitMatrix matrix);

    /// x >= y under every utility. A positive tie tolerance loosens the >=
    /// comparisons and may break transitivity, in which case this throws.
    friend Preference from_multi_utility(const MultiUtility& mu, double tie_tolerance);

    Preference reversed() const;  // transposed matrix; swaps Max and Min

private:
    using Relation::Relation;
};

Preference from_multi_utility(const MultiUtility& mu, double tie_tolerance = 0.0);

/// Diagnostic check of the preorder axioms; empty result means valid.
std::vector<Violation> validate(const Relation& r);

Relation symmetric_part(const Preference& p);
Relation asymmetric_part(const Preference& p);

bool is_complete_on(const Preference& p, const FeasibleSet& a);

/// Elements of `a` with no strict dominator inside `a`. Nonempty for any
/// valid preference and nonempty `a`.
FeasibleSet max_elements(const Preference& p, const FeasibleSet& a);
/// Elements of `a` that strictly dominate nothing inside `a`.
FeasibleSet min_elements(const Preference& p, const FeasibleSet& a);

/// Hausdorff distance between the two pair sets under the max product
/// metric. Zero iff the matrices are identical.
double relation_hausdorff_distance(const Preference& p, const Preference& q);
bool relation_hausdorff_within(const Preference& p, const Preference& q, double eps);

/// Same metric on raw pair sets; exposed for metric-axiom checks.
double pair_set_hausdorff(const GroundSpace& space, const BitMatrix& p, const BitMatrix& q);

struct IndifferencePartition {
    std::vector<FeasibleSet> classes;  // ordered by smallest member
};
IndifferencePartition indifference_partition(const Preference& p, const FeasibleSet& a);

struct DensityCheck {
    bool dense;
    std::optional<std::pair<int, int>> witness;  // strict pair with no strict intermediate
};
/// Every strict pair in `a` admits a strict intermediate in `a`?
DensityCheck is_dense(const Preference& p, const FeasibleSet& a);

bool is_partial_order(const Preference& p);

struct ExteriorBoundCheck {
    bool exists;
    std::optional<int> witness;
    bool above = false;  // witness weakly dominates all of D (vs. dominated by all)
};
/// Some x in K \ D weakly above (or below) every element of D?
ExteriorBoundCheck has_exterior_bound(const Preference& p, const FeasibleSet& d,
                                      const FeasibleSet& k);

}  // namespace prefkernel
