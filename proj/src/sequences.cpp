#include "prefkernel/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "rng.hpp"

namespace prefkernel {

ProblemSequence::ProblemSequence(SpacePtr space, std::vector<SequenceTerm> terms,
                                 SequenceTerm limit, LimitPolicy policy,
                                 std::optional<std::vector<FeasibleSet>> witness_domains,
                                 std::optional<FeasibleSet> witness_limit)
    : space_(std::move(space)), terms_(std::move(terms)), limit_(std::move(limit)),
      policy_(policy), witness_domains_(std::move(witness_domains)),
      witness_limit_(std::move(witness_limit)) {
    if (!space_) throw std::invalid_argument("problem sequence requires a ground space");
    if (terms_.empty()) throw std::invalid_argument("problem sequence must have terms");
    if (policy_.tail_window <= 0 || policy_.tail_window > horizon())
        throw std::invalid_argument("tail window must lie in [1, horizon]");
    if (policy_.min_matches <= 0)
        throw std::invalid_argument("min_matches must be positive");
    auto check_term = [&](const SequenceTerm& t, const char* what) {
        if (t.pref.space().get() != space_.get() || t.feasible.space().get() != space_.get())
            throw std::invalid_argument(std::string(what) + " must live on the shared space");
        if (t.x && (*t.x < 0 || *t.x >= space_->size()))
            throw std::invalid_argument(std::string(what) + " candidate index out of range");
    };
    for (const auto& t : terms_) check_term(t, "sequence term");
    check_term(limit_, "declared limit");
    if (witness_domains_) {
        if (int(witness_domains_->size()) != horizon())
            throw std::invalid_argument("witness domains must cover every term");
        for (const auto& w : *witness_domains_)
            if (w.space().get() != space_.get())
                throw std::invalid_argument("witness domains must live on the shared space");
    }
}

ConvergenceReport detect_limits(const ProblemSequence& seq) {
    ConvergenceReport r;
    const LimitPolicy& pol = seq.policy();
    const GroundSpace& sp = *seq.space();

    bool have_points = seq.limit().x.has_value();
    for (const auto& t : seq.terms())
        if (!t.x) have_points = false;

    r.pref_converges = true;
    r.sets_converge = true;
    if (have_points) r.points_converge = true;

    for (int n = seq.tail_start(); n <= seq.horizon(); ++n) {
        const SequenceTerm& t = seq.term(n);
        double dp = t.pref.same_pairs(seq.limit().pref)
                        ? 0.0
                        : relation_hausdorff_distance(t.pref, seq.limit().pref);
        double ds = hausdorff_distance(t.feasible, seq.limit().feasible);
        r.max_tail_pref_dist = std::max(r.max_tail_pref_dist, dp);
        r.max_tail_set_dist = std::max(r.max_tail_set_dist, ds);
        if (!leq_tol(dp, pol.epsilon)) r.pref_converges = false;
        if (!leq_tol(ds, pol.epsilon)) r.sets_converge = false;
        if (have_points) {
            double dx = sp.distance(*t.x, *seq.limit().x);
            r.max_tail_point_dist = std::max(r.max_tail_point_dist, dx);
            if (!leq_tol(dx, pol.epsilon)) r.points_converge = false;
        }
    }
    return r;
}

namespace {

std::string members_key(const FeasibleSet& f) {
    std::string key;
    for (auto m : f.members()) {
        key += std::to_string(m);
        key += ',';
    }
    return key;
}

}  // namespace

LsApproximation ls_domains(const ProblemSequence& seq, std::size_t clique_cap) {
    const LimitPolicy& pol = seq.policy();

    std::vector<std::vector<FeasibleSet>> tail_collections;
    for (int n = seq.tail_start(); n <= seq.horizon(); ++n) {
        const SequenceTerm& t = seq.term(n);
        tail_collections.push_back(maximal_domains(t.pref, t.feasible, clique_cap).domains);
    }
    auto limit_domains =
        maximal_domains(seq.limit().pref, seq.limit().feasible, clique_cap).domains;

    // candidate pool: tail-term domains plus limit domains, deduplicated
    std::vector<FeasibleSet> pool;
    std::set<std::string> seen;
    auto add = [&](const FeasibleSet& d) {
        auto key = members_key(d);
        if (seen.insert(key).second) pool.push_back(d);
    };
    for (const auto& coll : tail_collections)
        for (const auto& d : coll) add(d);
    for (const auto& d : limit_domains) add(d);

    LsApproximation out;
    out.limit_domains = limit_domains;
    for (const auto& cand : pool) {
        std::vector<int> matched, which;
        for (std::size_t t = 0; t < tail_collections.size(); ++t) {
            for (std::size_t d = 0; d < tail_collections[t].size(); ++d) {
                if (hausdorff_within(tail_collections[t][d], cand, pol.epsilon)) {
                    matched.push_back(seq.tail_start() + int(t));
                    which.push_back(int(d));
                    break;
                }
            }
        }
        if (int(matched.size()) >= pol.min_matches) {
            out.accumulation_sets.push_back(cand);
            out.provenance.push_back({std::move(matched), std::move(which)});
        }
    }
    return out;
}

bool is_maximal_domain(const Preference& p, const FeasibleSet& base, const FeasibleSet& d) {
    if (!is_complete_on(p, d)) return false;
    for (auto v : base.members()) {
        if (d.contains(v)) continue;
        bool comparable_to_all = true;
        for (auto y : d.members()) {
            if (!p.holds(v, y) && !p.holds(y, v)) {
                comparable_to_all = false;
                break;
            }
        }
        if (comparable_to_all) return false;  // one-point extension exists
    }
    return true;
}

namespace {

/// Domain-continuity refutation through the builder-supplied witness
/// sequence, for instances whose full enumeration exceeds the cap.
std::optional<Condition3Report> witness_condition3(const ProblemSequence& seq) {
    if (!seq.witness_domains() || !seq.witness_limit()) return std::nullopt;
    const LimitPolicy& pol = seq.policy();
    const auto& witnesses = *seq.witness_domains();
    const FeasibleSet& wlimit = *seq.witness_limit();

    int matches = 0;
    for (int n = seq.tail_start(); n <= seq.horizon(); ++n) {
        const SequenceTerm& t = seq.term(n);
        const FeasibleSet& w = witnesses[n - 1];
        if (!is_maximal_domain(t.pref, t.feasible, w)) return std::nullopt;
        if (hausdorff_within(w, wlimit, pol.epsilon)) ++matches;
    }
    if (matches < pol.min_matches) return std::nullopt;
    if (is_maximal_domain(seq.limit().pref, seq.limit().feasible, wlimit))
        return std::nullopt;  // witness limit is maximal; nothing refuted

    Condition3Report r;
    r.holds = false;
    r.violator = wlimit;
    r.source = Condition3Report::Source::Witness;
    return r;
}

}  // namespace

Condition3Report condition3_holds(const ProblemSequence& seq, std::size_t clique_cap) {
    const LimitPolicy& pol = seq.policy();
    LsApproximation ls;
    try {
        ls = ls_domains(seq, clique_cap);
    } catch (const CliqueCapError&) {
        if (auto r = witness_condition3(seq)) return *r;
        throw;
    }
    Condition3Report r;
    r.holds = true;
    for (const auto& acc : ls.accumulation_sets) {
        bool near = false;
        for (const auto& lim : ls.limit_domains) {
            if (hausdorff_within(acc, lim, pol.epsilon)) {
                near = true;
                break;
            }
        }
        if (!near) {
            r.holds = false;
            r.violator = acc;
            break;
        }
    }
    return r;
}

namespace {

bool table_weak(const MultiUtility& mu, int a, int b) {
    for (int u = 0; u < mu.count(); ++u)
        if (!(mu.value(u, a) >= mu.value(u, b))) return false;
    return true;
}

bool table_strict(const MultiUtility& mu, int a, int b) {
    if (!table_weak(mu, a, b)) return false;
    for (int u = 0; u < mu.count(); ++u)
        if (mu.value(u, a) > mu.value(u, b)) return true;
    return false;
}

std::vector<int> ball_members(const GroundSpace& sp, int center, double radius) {
    std::vector<int> out;
    for (int i = 0; i < sp.size(); ++i)
        if (leq_tol(sp.distance(i, center), radius)) out.push_back(i);
    return out;
}

// The balls anchor at the grid realization of the combination, so both always
// contain their centers.
bool balls_strictly_dominate(const MultiUtility& mu, int center, int worse,
                             double radius) {
    const GroundSpace& sp = *mu.space();
    auto near_center = ball_members(sp, center, radius);
    auto near_worse = ball_members(sp, worse, radius);
    for (int z : near_center)
        for (int x : near_worse)
            if (!table_strict(mu, z, x)) return false;
    return true;
}

}  // namespace

MidpointCertificate midpoint_certificate(const MultiUtility& mu, int better, int worse) {
    const GroundSpace& sp = *mu.space();
    if (!table_strict(mu, better, worse))
        throw CertificateError(CertificateError::Kind::NotStrictPair,
                               "certificate requires a strictly dominated pair");

    MidpointCertificate cert;
    cert.alpha = 0.5;
    cert.better_index = better;
    cert.dominated_index = worse;
    auto combo = convex_combination(sp, better, worse, 0.5);
    cert.center = combo.exact;
    cert.center_index = combo.index;
    cert.center_snap_error = combo.snap_error;

    double gap = std::numeric_limits<double>::infinity();
    for (int u = 0; u < mu.count(); ++u)
        gap = std::min(gap, mu.value(u, cert.center_index) - mu.value(u, worse));
    cert.gap = gap;
    if (!(gap > 0.0))
        throw CertificateError(CertificateError::Kind::NonpositiveGap,
                               "midpoint utility gap is not positive; a strict "
                               "quasiconcavity declaration is violated on this segment");

    for (const auto& u : mu.utilities())
        if (!u.flags.strictly_quasiconcave)
            throw CertificateError(CertificateError::Kind::NotQuasiconcaveFlagged,
                                   "every utility must be declared strictly quasiconcave");
    double lmax = 0.0;
    try {
        lmax = mu.max_lipschitz();
    } catch (const std::invalid_argument& e) {
        throw CertificateError(CertificateError::Kind::MissingLipschitz, e.what());
    }
    if (lmax <= 0.0)
        throw CertificateError(CertificateError::Kind::MissingLipschitz,
                               "positive lipschitz constants are required");

    cert.radius = gap / (2.0 * lmax);
    if (!balls_strictly_dominate(mu, cert.center_index, worse, cert.radius))
        throw CertificateError(CertificateError::Kind::VerificationFailed,
                               "exhaustive ball check failed; a declared lipschitz "
                               "constant is too small for this pair");
    return cert;
}

bool reverify_certificate(const MultiUtility& mu, const MidpointCertificate& cert) {
    if (cert.radius <= 0.0 || cert.gap <= 0.0) return false;
    return balls_strictly_dominate(mu, cert.center_index, cert.dominated_index, cert.radius);
}

bool point_is_maximal(const Preference& p, const FeasibleSet& k, std::int32_t x) {
    if (!k.contains(x)) return false;
    for (auto y : k.members())
        if (p.holds(y, x) && !p.holds(x, y)) return false;
    return true;
}

bool is_discretely_convex(const FeasibleSet& k) {
    const GroundSpace& sp = *k.space();
    const auto& m = k.members();
    for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = a + 1; b < m.size(); ++b) {
            auto combo = convex_combination(sp, m[a], m[b], 0.5);
            if (!k.contains(combo.index)) return false;
        }
    }
    return true;
}

namespace {

MidpointEvidence midpoint_evidence(const MultiUtility& mu, const VerifyOptions& opts) {
    MidpointEvidence ev;
    ev.all_flagged = true;
    ev.lipschitz_present = true;
    for (const auto& u : mu.utilities()) {
        if (!u.flags.strictly_quasiconcave) ev.all_flagged = false;
        if (!u.lipschitz) ev.lipschitz_present = false;
    }
    if (!ev.all_flagged || !ev.lipschitz_present) return ev;

    const GroundSpace& sp = *mu.space();
    int n = sp.size();
    auto try_pair = [&](int a, int b) {
        if (!table_strict(mu, a, b)) return;
        ++ev.sampled;
        try {
            midpoint_certificate(mu, a, b);
            ++ev.certified;
        } catch (const CertificateError& e) {
            if (e.kind() == CertificateError::Kind::NonpositiveGap) {
                ++ev.degenerate_gap_zero;
            } else {
                ++ev.failed;
                if (!ev.failure_pair) ev.failure_pair = std::make_pair(a, b);
            }
        }
    };

    if (opts.certificate_full_sweep) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b) try_pair(a, b);
    } else {
        Rng rng(opts.sample_seed);
        int attempts = 0;
        int budget = opts.certificate_samples * 60;
        while (ev.sampled < opts.certificate_samples && attempts < budget) {
            ++attempts;
            int a = rng.uniform_int(0, n - 1);
            int b = rng.uniform_int(0, n - 1);
            if (a == b) continue;
            try_pair(a, b);
        }
    }
    return ev;
}

Verdict combine_verdict(bool premises_hold, bool conclusion_holds) {
    if (!premises_hold) return Verdict::PremiseViolation;
    return conclusion_holds ? Verdict::Pass : Verdict::Counterexample;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::PremiseViolation: return "PREMISE-VIOLATION";
        case Verdict::Counterexample: return "COUNTEREXAMPLE";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

TheoremReport verify_simple_max_theorem(const ProblemSequence& seq,
                                        const MultiUtility& mu,
                                        const VerifyOptions& opts) {
    for (const auto& t : seq.terms())
        if (!t.pref.same_pairs(seq.term(1).pref))
            throw std::invalid_argument(
                "preference varies across terms; use verify_general_max_theorem");
    for (const auto& t : seq.terms())
        if (!t.x) throw std::invalid_argument("every term needs a candidate point");
    if (!seq.limit().x) throw std::invalid_argument("the limit needs a candidate point");
    if (!from_multi_utility(mu).same_pairs(seq.term(1).pref))
        throw std::invalid_argument("multi-utility does not represent the sequence preference");

    TheoremReport r;
    r.convergence = detect_limits(seq);
    r.premises.push_back({"convergence", r.convergence.all(), ""});

    bool per_term = true;
    std::string detail;
    for (int n = 1; n <= seq.horizon(); ++n) {
        const SequenceTerm& t = seq.term(n);
        if (!point_is_maximal(t.pref, t.feasible, *t.x)) {
            per_term = false;
            detail = "candidate not maximal at n=" + std::to_string(n);
            break;
        }
    }
    r.premises.push_back({"per_term_maximality", per_term, detail});

    bool convex = true;
    std::string cdetail;
    for (int n = 1; n <= seq.horizon(); ++n) {
        if (!is_discretely_convex(seq.term(n).feasible)) {
            convex = false;
            cdetail = "feasible set not midpoint-closed at n=" + std::to_string(n);
            break;
        }
    }
    r.premises.push_back({"term_convexity", convex, cdetail});

    r.midpoint = midpoint_evidence(mu, opts);
    std::string mdetail;
    if (!r.midpoint->all_flagged)
        mdetail = "utilities not declared strictly quasiconcave";
    else if (!r.midpoint->lipschitz_present)
        mdetail = "lipschitz constants missing";
    else if (r.midpoint->failed > 0)
        mdetail = "certificate verification failed on a sampled pair";
    r.premises.push_back({"midpoint_continuity", r.midpoint->holds(), mdetail});

    r.premises_hold = true;
    for (const auto& p : r.premises) r.premises_hold = r.premises_hold && p.holds;
    r.conclusion_holds =
        point_is_maximal(seq.limit().pref, seq.limit().feasible, *seq.limit().x);
    r.verdict = combine_verdict(r.premises_hold, r.conclusion_holds);
    return r;
}

TheoremReport verify_general_max_theorem(const ProblemSequence& seq,
                                         const VerifyOptions& opts) {
    for (const auto& t : seq.terms())
        if (!t.x) throw std::invalid_argument("every term needs a candidate point");
    if (!seq.limit().x) throw std::invalid_argument("the limit needs a candidate point");

    TheoremReport r;
    r.convergence = detect_limits(seq);
    r.premises.push_back({"convergence", r.convergence.all(), ""});

    bool per_term = true;
    std::string detail;
    for (int n = 1; n <= seq.horizon(); ++n) {
        const SequenceTerm& t = seq.term(n);
        if (!point_is_maximal(t.pref, t.feasible, *t.x)) {
            per_term = false;
            detail = "candidate not maximal at n=" + std::to_string(n);
            break;
        }
    }
    r.premises.push_back({"per_term_maximality", per_term, detail});

    bool condition3_known = true;
    try {
        r.condition3 = condition3_holds(seq, opts.clique_cap);
    } catch (const CliqueCapError& e) {
        condition3_known = false;
        r.premises.push_back({"domain_continuity", false,
                              std::string("enumeration capped: ") + e.what()});
    }
    if (condition3_known)
        r.premises.push_back({"domain_continuity", r.condition3->holds, ""});

    r.premises_hold = true;
    for (const auto& p : r.premises) r.premises_hold = r.premises_hold && p.holds;
    r.conclusion_holds =
        point_is_maximal(seq.limit().pref, seq.limit().feasible, *seq.limit().x);

    if (!condition3_known) {
        bool others = r.premises[0].holds && r.premises[1].holds;
        r.verdict = others ? Verdict::Inconclusive : Verdict::PremiseViolation;
    } else {
        r.verdict = combine_verdict(r.premises_hold, r.conclusion_holds);
    }
    return r;
}

namespace {

PointLsCheck point_ls_inclusion(const ProblemSequence& seq,
                                const std::vector<FeasibleSet>& tail_sets,
                                const FeasibleSet& limit_set) {
    const LimitPolicy& pol = seq.policy();
    const GroundSpace& sp = *seq.space();

    std::set<std::int32_t> pool;
    for (const auto& s : tail_sets)
        for (auto m : s.members()) pool.insert(m);
    for (auto m : limit_set.members()) pool.insert(m);

    PointLsCheck out;
    out.inclusion_holds = true;
    for (auto cand : pool) {
        int matches = 0;
        for (const auto& s : tail_sets) {
            for (auto y : s.members()) {
                if (leq_tol(sp.distance(cand, y), pol.epsilon)) {
                    ++matches;
                    break;
                }
            }
        }
        if (matches < pol.min_matches) continue;
        out.accumulation_points.push_back(cand);
        bool near = false;
        for (auto y : limit_set.members()) {
            if (leq_tol(sp.distance(cand, y), pol.epsilon)) {
                near = true;
                break;
            }
        }
        if (!near) {
            out.inclusion_holds = false;
            out.violators.push_back(cand);
        }
    }
    return out;
}

}  // namespace

const char* equivalence_verdict_name(EquivalenceVerdict v) {
    switch (v) {
        case EquivalenceVerdict::Holds: return "HOLDS";
        case EquivalenceVerdict::Fails: return "FAILS";
        case EquivalenceVerdict::NotApplicable: return "NOT-APPLICABLE";
        case EquivalenceVerdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

EquivalenceReport verify_equivalence(const ProblemSequence& seq, const VerifyOptions& opts) {
    EquivalenceReport r;
    r.limit_partial_order = is_partial_order(seq.limit().pref);

    r.terms_dense = true;
    r.classes_connected = true;
    for (int n = 1; n <= seq.horizon(); ++n) {
        const SequenceTerm& t = seq.term(n);
        if (r.terms_dense) {
            auto d = is_dense(t.pref, t.feasible);
            if (!d.dense) {
                r.terms_dense = false;
                r.first_nondense_term = n;
                r.density_witness = d.witness;
            }
        }
        if (r.classes_connected) {
            for (const auto& cls : indifference_partition(t.pref, t.feasible).classes) {
                if (!is_connected(cls)) {
                    r.classes_connected = false;
                    r.first_disconnected_term = n;
                    break;
                }
            }
        }
        if (!r.terms_dense && !r.classes_connected) break;
    }
    r.hypotheses_hold = r.limit_partial_order && r.terms_dense && r.classes_connected;

    bool condition3_known = true;
    try {
        r.condition3 = condition3_holds(seq, opts.clique_cap);
    } catch (const CliqueCapError&) {
        condition3_known = false;
    }

    std::vector<FeasibleSet> tail_max, tail_min;
    for (int n = seq.tail_start(); n <= seq.horizon(); ++n) {
        const SequenceTerm& t = seq.term(n);
        tail_max.push_back(max_elements(t.pref, t.feasible));
        tail_min.push_back(min_elements(t.pref, t.feasible));
    }
    auto limit_max = max_elements(seq.limit().pref, seq.limit().feasible);
    auto limit_min = min_elements(seq.limit().pref, seq.limit().feasible);
    r.max_inclusion = point_ls_inclusion(seq, tail_max, limit_max);
    r.min_inclusion = point_ls_inclusion(seq, tail_min, limit_min);

    if (!condition3_known) {
        r.verdict = EquivalenceVerdict::Inconclusive;
        return r;
    }
    bool both = r.max_inclusion.inclusion_holds && r.min_inclusion.inclusion_holds;
    r.dir_1_to_2 = !r.condition3->holds || both;
    r.dir_2_to_1 = !both || r.condition3->holds;
    r.biconditional_holds = r.dir_1_to_2 && r.dir_2_to_1;
    if (r.biconditional_holds)
        r.verdict = EquivalenceVerdict::Holds;
    else
        r.verdict = r.hypotheses_hold ? EquivalenceVerdict::Fails
                                      : EquivalenceVerdict::NotApplicable;
    return r;
}

const char* floor_verdict_name(FloorVerdict v) {
    switch (v) {
        case FloorVerdict::Agrees: return "AGREES";
        case FloorVerdict::Disagrees: return "DISAGREES";
        case FloorVerdict::NotApplicable: return "NOT-APPLICABLE";
    }
    return "?";
}

FloorReport corollary_floor_check(const ProblemSequence& seq,
                                  const std::optional<MultiUtility>& mu,
                                  const VerifyOptions& opts) {
    FloorReport r;
    r.fixed_preference = true;
    for (const auto& t : seq.terms())
        if (!t.pref.same_pairs(seq.term(1).pref)) r.fixed_preference = false;
    r.terms_convex = true;
    for (const auto& t : seq.terms())
        if (!is_discretely_convex(t.feasible)) {
            r.terms_convex = false;
            break;
        }
    r.limit_partial_order = is_partial_order(seq.limit().pref);
    r.midpoint_evidence = false;
    if (mu) {
        auto ev = midpoint_evidence(*mu, opts);
        r.midpoint_evidence = ev.holds();
    }

    // common weak lower bound across the whole family
    std::vector<std::int32_t> inter = seq.term(1).feasible.members();
    std::set<std::int32_t> uni(inter.begin(), inter.end());
    for (int n = 2; n <= seq.horizon(); ++n) {
        const auto& mem = seq.term(n).feasible;
        std::vector<std::int32_t> keep;
        for (auto m : inter)
            if (mem.contains(m)) keep.push_back(m);
        inter = std::move(keep);
        for (auto m : mem.members()) uni.insert(m);
    }
    const Preference& pref = seq.term(1).pref;
    for (auto cand : inter) {
        bool floor = true;
        for (auto x : uni) {
            if (!pref.holds(x, cand)) {
                floor = false;
                break;
            }
        }
        if (floor) {
            r.floor = cand;
            break;
        }
    }

    bool applicable = r.fixed_preference && r.terms_convex && r.limit_partial_order &&
                      r.midpoint_evidence && r.floor.has_value();
    if (!applicable) {
        r.verdict = FloorVerdict::NotApplicable;
        return r;
    }
    r.condition3 = condition3_holds(seq, opts.clique_cap);
    r.verdict = r.condition3->holds ? FloorVerdict::Agrees : FloorVerdict::Disagrees;
    return r;
}

std::vector<TermStats> per_term_stats(const ProblemSequence& seq, std::size_t clique_cap) {
    std::vector<TermStats> out;
    std::optional<std::vector<FeasibleSet>> limit_domains;
    try {
        limit_domains =
            maximal_domains(seq.limit().pref, seq.limit().feasible, clique_cap).domains;
    } catch (const CliqueCapError&) {
    }

    for (int n = 1; n <= seq.horizon(); ++n) {
        const SequenceTerm& t = seq.term(n);
        TermStats s;
        s.n = n;
        s.set_dist = hausdorff_distance(t.feasible, seq.limit().feasible);
        s.rel_dist = t.pref.same_pairs(seq.limit().pref)
                         ? 0.0
                         : relation_hausdorff_distance(t.pref, seq.limit().pref);
        if (t.x) s.x_maximal = point_is_maximal(t.pref, t.feasible, *t.x);
        try {
            auto coll = maximal_domains(t.pref, t.feasible, clique_cap);
            s.domain_count = (long long)coll.domains.size();
            if (limit_domains &&
                coll.domains.size() * limit_domains->size() <= 1000) {
                double worst = 0.0;
                for (const auto& d : coll.domains) {
                    double best = std::numeric_limits<double>::infinity();
                    for (const auto& l : *limit_domains)
                        best = std::min(best, hausdorff_distance(d, l));
                    worst = std::max(worst, best);
                }
                s.matched_domain_distance = worst;
            }
        } catch (const CliqueCapError&) {
            s.domain_count = -1;
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace prefkernel
