#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prefkernel/domains.hpp"
#include "prefkernel/preference.hpp"
#include "prefkernel/space.hpp"

namespace prefkernel {

/// One decision problem in a sequence: a preference, a feasible set, and an
/// optional candidate point (index into the shared ground space).
struct SequenceTerm {
    Preference pref;
    FeasibleSet feasible;
    std::optional<std::int32_t> x;
};

/// Indexed family n -> (pref_n, K_n, x_n) with a declared limit, a horizon
/// and a tail-window tolerance policy. Finite horizons cannot certify true
/// limits; every convergence statement below is an approximation contract
/// relative to the policy.
class ProblemSequence {
public:
    ProblemSequence(SpacePtr space, std::vector<SequenceTerm> terms,
                    SequenceTerm limit, LimitPolicy policy,
                    std::optional<std::vector<FeasibleSet>> witness_domains = std::nullopt,
                    std::optional<FeasibleSet> witness_limit = std::nullopt);

    const SpacePtr& space() const { return space_; }
    int horizon() const { return int(terms_.size()); }
    /// 1-based index n.
    const SequenceTerm& term(int n) const { return terms_.at(n - 1); }
    const std::vector<SequenceTerm>& terms() const { return terms_; }
    const SequenceTerm& limit() const { return limit_; }
    const LimitPolicy& policy() const { return policy_; }
    /// First n of the tail window.
    int tail_start() const { return horizon() - policy_.tail_window + 1; }

    /// Distinguished per-term domain sequence, when the builder supplies one
    /// (used to refute domain continuity without full enumeration).
    const std::optional<std::vector<FeasibleSet>>& witness_domains() const {
        return witness_domains_;
    }
    const std::optional<FeasibleSet>& witness_limit() const { return witness_limit_; }

private:
    SpacePtr space_;
    std::vector<SequenceTerm> terms_;
    SequenceTerm limit_;
    LimitPolicy policy_;
    std::optional<std::vector<FeasibleSet>> witness_domains_;
    std::optional<FeasibleSet> witness_limit_;
};

struct ConvergenceReport {
    bool pref_converges = false;
    bool sets_converge = false;
    std::optional<bool> points_converge;  // absent when candidates are missing
    double max_tail_pref_dist = 0.0;
    double max_tail_set_dist = 0.0;
    double max_tail_point_dist = 0.0;
    bool all() const {
        return pref_converges && sets_converge && points_converge.value_or(true);
    }
};

/// Tests each coordinate against the declared limit by its metric (relation
/// Hausdorff, set Hausdorff, point distance) over the tail window.
ConvergenceReport detect_limits(const ProblemSequence& seq);

/// Finite-horizon approximation of the accumulation sets of the maximal
/// domain collections. A candidate (drawn from tail-term domains plus the
/// limit collection) accumulates when it is matched within epsilon at >=
/// min_matches tail indices.
struct LsApproximation {
    struct Provenance {
        std::vector<int> matched_terms;    // n values
        std::vector<int> matched_domains;  // index into that term's collection
    };
    std::vector<FeasibleSet> accumulation_sets;
    std::vector<Provenance> provenance;
    std::vector<FeasibleSet> limit_domains;
};

LsApproximation ls_domains(const ProblemSequence& seq,
                           std::size_t clique_cap = kDefaultCliqueCap);

/// Domain-continuity check: every accumulation set must lie within epsilon
/// of an exact maximal domain of the limit problem.
struct Condition3Report {
    enum class Source { Enumerated, Witness };
    bool holds = false;
    std::optional<FeasibleSet> violator;
    Source source = Source::Enumerated;
};

Condition3Report condition3_holds(const ProblemSequence& seq,
                                  std::size_t clique_cap = kDefaultCliqueCap);

class CertificateError : public std::runtime_error {
public:
    enum class Kind {
        NotStrictPair,
        NonpositiveGap,
        NotQuasiconcaveFlagged,
        MissingLipschitz,
        VerificationFailed,
    };
    CertificateError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Witness that a midpoint toward the better point strictly dominates a
/// neighborhood of the worse point, robustly in both arguments. Verified
/// exhaustively over the grid points of the two balls at construction and
/// re-verifiable from the fields alone.
struct MidpointCertificate {
    double alpha = 0.5;
    std::vector<double> center;  // exact combination, before snapping
    int center_index = -1;       // nearest grid point (utility lookups)
    double center_snap_error = 0.0;
    int better_index = -1;
    int dominated_index = -1;
    double radius = 0.0;
    double gap = 0.0;  // minimum utility margin at the center
};

MidpointCertificate midpoint_certificate(const MultiUtility& mu, int better, int worse);
bool reverify_certificate(const MultiUtility& mu, const MidpointCertificate& cert);

enum class Verdict { Pass, PremiseViolation, Counterexample, Inconclusive };
const char* verdict_name(Verdict v);

struct PremiseCheck {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct MidpointEvidence {
    bool all_flagged = false;     // every utility declared strictly quasiconcave
    bool lipschitz_present = false;
    int sampled = 0;
    int certified = 0;
    int degenerate_gap_zero = 0;  // zero-gap pairs: a flag violated on a flat segment
    int failed = 0;               // verification failures
    std::optional<std::pair<int, int>> failure_pair;
    bool holds() const {
        return all_flagged && lipschitz_present && failed == 0 &&
               (certified > 0 || sampled == 0);
    }
};

struct TheoremReport {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<PremiseCheck> premises;
    bool premises_hold = false;
    bool conclusion_holds = false;
    ConvergenceReport convergence;
    std::optional<Condition3Report> condition3;
    std::optional<MidpointEvidence> midpoint;
};

struct VerifyOptions {
    std::size_t clique_cap = kDefaultCliqueCap;
    int certificate_samples = 200;
    bool certificate_full_sweep = false;
    std::uint64_t sample_seed = 17;
};

/// Fixed-preference Maximum Theorem: convergence + per-term maximality +
/// discrete convexity + midpoint-continuity evidence imply the limit
/// candidate is maximal. PASS when premises imply the conclusion,
/// COUNTEREXAMPLE when premises hold and the conclusion fails.
TheoremReport verify_simple_max_theorem(const ProblemSequence& seq,
                                        const MultiUtility& mu,
                                        const VerifyOptions& opts = {});

/// Varying-preference Maximum Theorem: convergence + per-term maximality +
/// domain continuity imply the limit candidate is maximal.
TheoremReport verify_general_max_theorem(const ProblemSequence& seq,
                                         const VerifyOptions& opts = {});

enum class EquivalenceVerdict { Holds, Fails, NotApplicable, Inconclusive };
const char* equivalence_verdict_name(EquivalenceVerdict v);

struct PointLsCheck {
    bool inclusion_holds = false;
    std::vector<std::int32_t> accumulation_points;
    std::vector<std::int32_t> violators;
};

struct EquivalenceReport {
    EquivalenceVerdict verdict = EquivalenceVerdict::Inconclusive;
    bool limit_partial_order = false;
    bool terms_dense = false;
    std::optional<int> first_nondense_term;
    std::optional<std::pair<int, int>> density_witness;
    bool classes_connected = false;
    std::optional<int> first_disconnected_term;
    bool hypotheses_hold = false;
    std::optional<Condition3Report> condition3;
    PointLsCheck max_inclusion;
    PointLsCheck min_inclusion;
    bool dir_1_to_2 = false;  // domain continuity => both point inclusions
    bool dir_2_to_1 = false;  // both point inclusions => domain continuity
    bool biconditional_holds = false;
};

/// Checks the equivalence between domain continuity and preservation of
/// maximal/minimal elements in the limit, under the partial-order /
/// density / connected-classes hypotheses (reported, not assumed; raw data
/// are recorded either way). Hypothesis failures demote a failing
/// biconditional to NOT-APPLICABLE.
EquivalenceReport verify_equivalence(const ProblemSequence& seq,
                                     const VerifyOptions& opts = {});

enum class FloorVerdict { Agrees, Disagrees, NotApplicable };
const char* floor_verdict_name(FloorVerdict v);

struct FloorReport {
    FloorVerdict verdict = FloorVerdict::NotApplicable;
    bool fixed_preference = false;
    bool terms_convex = false;
    bool limit_partial_order = false;
    bool midpoint_evidence = false;
    std::optional<std::int32_t> floor;  // common weak lower bound, if found
    std::optional<Condition3Report> condition3;
};

/// Fixed preference, convex terms, a partial order limit and a common floor
/// point imply domain continuity; this searches for the floor and reports
/// whether the enumerated check agrees.
FloorReport corollary_floor_check(const ProblemSequence& seq,
                                  const std::optional<MultiUtility>& mu,
                                  const VerifyOptions& opts = {});

/// Per-term summary row (feeds the CSV report).
struct TermStats {
    int n = 0;
    double set_dist = 0.0;
    double rel_dist = 0.0;
    long long domain_count = -1;            // -1: enumeration capped
    std::optional<bool> x_maximal;
    double matched_domain_distance = -1.0;  // -1: not computed
};

std::vector<TermStats> per_term_stats(const ProblemSequence& seq,
                                      std::size_t clique_cap = kDefaultCliqueCap);

/// True iff no element of k strictly dominates x.
bool point_is_maximal(const Preference& p, const FeasibleSet& k, std::int32_t x);

/// Closure of k under snapped pairwise midpoints (the discrete stand-in for
/// convexity of the underlying region).
bool is_discretely_convex(const FeasibleSet& k);

/// Maximality of a comparability domain by the one-point extension test.
bool is_maximal_domain(const Preference& p, const FeasibleSet& base, const FeasibleSet& d);

}  // namespace prefkernel
