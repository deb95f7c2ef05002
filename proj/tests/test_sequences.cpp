#include <doctest.h>

#include <cmath>

#include "prefkernel/scenarios.hpp"
#include "prefkernel/sequences.hpp"
#include "helpers.hpp"

using namespace prefkernel;
using namespace testutil;

namespace {

ScenarioSpec small(const std::string& name, int horizon = 0) {
    ScenarioSpec s = default_spec(name);
    if (name == "shifting-vertex" || name == "diagonal-block") s.grid_h = 0.01;
    if (horizon > 0) s.horizon = horizon;
    return s;
}

ProblemSequence constant_sequence(const SpacePtr& sp, const Preference& p,
                                  const FeasibleSet& k, std::optional<std::int32_t> x,
                                  int horizon, LimitPolicy pol) {
    std::vector<SequenceTerm> terms(std::size_t(horizon), SequenceTerm{p, k, x});
    return ProblemSequence(sp, std::move(terms), SequenceTerm{p, k, x}, pol);
}

}  // namespace

TEST_CASE("limit detection per coordinate") {
    auto sp = line_space(5, 0.25);
    auto p = from_multi_utility(tabulated(sp, {[](std::span<const double> x) {
        return x[0];
    }}));
    auto seq = constant_sequence(sp, p, all_points(sp), 4, 10, {0.01, 4, 3});
    auto r = detect_limits(seq);
    CHECK(r.pref_converges);
    CHECK(r.sets_converge);
    REQUIRE(r.points_converge.has_value());
    CHECK(*r.points_converge);
    CHECK(r.all());

    // the sliding-vertex family converges in relation distance at 2h
    auto bundle = build_scenario([&] {
        ScenarioSpec s = small("shifting-vertex", 100);
        s.policy = LimitPolicy{0.02, 25, 5};
        return s;
    }());
    CHECK(detect_limits(bundle.seq).pref_converges);

    // alternating preferences never settle
    auto q = from_multi_utility(tabulated(sp, {[](std::span<const double> x) {
        return -x[0];
    }}));
    std::vector<SequenceTerm> terms;
    for (int n = 1; n <= 10; ++n)
        terms.push_back({n % 2 ? p : q, all_points(sp), std::nullopt});
    ProblemSequence alt(sp, std::move(terms), {p, all_points(sp), std::nullopt},
                        {0.1, 4, 3});
    CHECK(!detect_limits(alt).pref_converges);
}

TEST_CASE("accumulation sets of maximal-domain collections") {
    // constant problem: accumulation sets equal the exact collection
    auto sp = line_space(11, 0.1);
    Rng rng(3);
    Preference p = mixed_random_preference(sp, rng);
    auto seq = constant_sequence(sp, p, all_points(sp), std::nullopt, 12, {0.02, 4, 3});
    auto ls = ls_domains(seq);
    auto exact = maximal_domains(p, all_points(sp)).domains;
    REQUIRE(ls.accumulation_sets.size() == exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i)
        CHECK(ls.accumulation_sets[i].members() == exact[i].members());
    for (const auto& prov : ls.provenance) {
        CHECK(int(prov.matched_terms.size()) == 4);
        CHECK(prov.matched_domains.size() == prov.matched_terms.size());
    }

    // creeping block: a singleton accumulates near one half
    auto bundle = build_scenario(small("diagonal-block", 100));
    auto ls2 = ls_domains(bundle.seq);
    int half = index_of(*bundle.seq.space(), {0.5});
    bool near_half = false;
    for (const auto& acc : ls2.accumulation_sets)
        if (acc.size() == 1 &&
            bundle.seq.space()->distance(acc.members()[0], half) <= 0.02 + 1e-12)
            near_half = true;
    CHECK(near_half);
}

TEST_CASE("domain continuity holds for complete and partitioned families") {
    auto sp = line_space(9);
    auto complete = from_multi_utility(tabulated(sp, {[](std::span<const double> x) {
        return x[0];
    }}));
    auto seq = constant_sequence(sp, complete, all_points(sp), 8, 10, {0.05, 4, 3});
    CHECK(condition3_holds(seq).holds);

    auto fp = build_scenario(small("fixed-partition"));
    CHECK(condition3_holds(fp.seq).holds);

    auto block = build_scenario(small("diagonal-block", 100));
    auto c3 = condition3_holds(block.seq);
    CHECK(!c3.holds);
    REQUIRE(c3.violator.has_value());
    int half = index_of(*block.seq.space(), {0.5});
    CHECK(c3.violator->size() == 1);
    CHECK(block.seq.space()->distance(c3.violator->members()[0], half) <= 0.02 + 1e-12);
}

TEST_CASE("domain continuity is monotone in the tolerance on catalog families") {
    for (const char* name : {"diagonal-block", "fixed-partition"}) {
        auto spec = small(name, 80);
        bool prev = false;
        for (double mult : {1.0, 2.0, 8.0, 120.0}) {
            ScenarioSpec s = spec;
            ScenarioBundle probe = build_scenario(s);
            LimitPolicy pol = probe.seq.policy();
            pol.epsilon *= mult;
            s.policy = pol;
            auto bundle = build_scenario(s);
            bool holds = condition3_holds(bundle.seq).holds;
            if (prev) CHECK(holds);
            prev = holds;
        }
        CHECK(prev);  // generous tolerance accepts everything
    }
}

TEST_CASE("midpoint certificates") {
    auto sp = GroundSpace::make_grid({0.0, 0.0}, {1.0, 1.0}, 0.1, Metric::Linf, 0.15);
    auto make_mu = [&](bool flag_qc, bool with_lipschitz) {
        auto raw = tabulated(
            sp,
            {[](std::span<const double> q) { return std::sqrt(q[0]) + std::sqrt(q[1]); },
             [](std::span<const double> q) { return std::sqrt(q[0]) + 2 * std::sqrt(q[1]); }},
            {{flag_qc, false}, {flag_qc, false}});
        if (!with_lipschitz) return raw;
        std::vector<TabulatedUtility> utils;
        for (int u = 0; u < raw.count(); ++u) {
            TabulatedUtility t = raw.utilities()[u];
            t.lipschitz = raw.grid_lipschitz(u);
            utils.push_back(std::move(t));
        }
        return MultiUtility(sp, std::move(utils));
    };
    MultiUtility mu = make_mu(true, true);
    int better = index_of(*sp, {0.8, 0.8});
    int worse = index_of(*sp, {0.4, 0.4});

    auto cert = midpoint_certificate(mu, better, worse);
    CHECK(cert.alpha == 0.5);
    CHECK(cert.gap > 0.0);
    CHECK(cert.radius > 0.0);
    CHECK(cert.center_index == index_of(*sp, {0.6, 0.6}));
    CHECK(cert.center_snap_error <= 1e-12);
    CHECK(reverify_certificate(mu, cert));

    // non-strict pair
    CHECK_THROWS_AS(midpoint_certificate(mu, worse, worse), CertificateError);
    try {
        midpoint_certificate(mu, worse, better);
    } catch (const CertificateError& e) {
        CHECK(e.kind() == CertificateError::Kind::NotStrictPair);
    }

    // linear utilities: the flat direction forces a zero gap
    auto grid = GroundSpace::make_grid({0.0, 0.0}, {1.2, 1.2}, 0.05, Metric::Linf, 0.075);
    auto lin = tabulated(grid,
                         {[](std::span<const double> q) { return q[0] + q[1]; },
                          [](std::span<const double> q) { return q[0] + 2 * q[1]; }},
                         {{false, true}, {false, true}});
    int bananas = index_of(*grid, {0.0, 1.0});
    int apples = index_of(*grid, {1.0, 0.0});
    try {
        midpoint_certificate(lin, bananas, apples);
        FAIL("expected a zero-gap failure");
    } catch (const CertificateError& e) {
        CHECK(e.kind() == CertificateError::Kind::NonpositiveGap);
    }

    // declaration gating
    try {
        midpoint_certificate(make_mu(false, true), better, worse);
        FAIL("expected a flag failure");
    } catch (const CertificateError& e) {
        CHECK(e.kind() == CertificateError::Kind::NotQuasiconcaveFlagged);
    }
    try {
        midpoint_certificate(make_mu(true, false), better, worse);
        FAIL("expected a missing-lipschitz failure");
    } catch (const CertificateError& e) {
        CHECK(e.kind() == CertificateError::Kind::MissingLipschitz);
    }

    // every certificate on strictly dominated even pairs re-verifies
    Rng rng(9);
    int produced = 0;
    while (produced < 40) {
        int a = 2 * rng.uniform_int(0, 5), b = 2 * rng.uniform_int(0, 5);
        int c = 2 * rng.uniform_int(0, 5), d = 2 * rng.uniform_int(0, 5);
        if (a <= c || b <= d) continue;
        int hi = index_of(*sp, {a * 0.1, b * 0.1});
        int lo = index_of(*sp, {c * 0.1, d * 0.1});
        auto crt = midpoint_certificate(mu, hi, lo);
        CHECK(reverify_certificate(mu, crt));
        ++produced;
    }
}

TEST_CASE("midpoint evidence can sweep every strict pair") {
    auto sp = GroundSpace::make_grid({0.0, 0.0}, {1.0, 1.0}, 0.5, Metric::Linf, 0.75);
    auto raw = tabulated(
        sp,
        {[](std::span<const double> q) { return std::sqrt(q[0]) + std::sqrt(q[1]); },
         [](std::span<const double> q) { return std::sqrt(q[0]) + 2 * std::sqrt(q[1]); }},
        {{true, false}, {true, false}});
    std::vector<TabulatedUtility> utils;
    for (int u = 0; u < raw.count(); ++u) {
        TabulatedUtility t = raw.utilities()[u];
        t.lipschitz = raw.grid_lipschitz(u);
        utils.push_back(std::move(t));
    }
    MultiUtility mu(sp, std::move(utils));
    Preference pref = from_multi_utility(mu);

    int strict_pairs = 0;
    for (int i = 0; i < sp->size(); ++i)
        for (int j = 0; j < sp->size(); ++j)
            if (pref.holds(i, j) && !pref.holds(j, i)) ++strict_pairs;

    int top = index_of(*sp, {1.0, 1.0});
    auto seq = constant_sequence(sp, pref, all_points(sp), top, 8, {1.0, 4, 3});
    VerifyOptions opts;
    opts.certificate_full_sweep = true;
    auto r = verify_simple_max_theorem(seq, mu, opts);
    CHECK(r.verdict == Verdict::Pass);
    REQUIRE(r.midpoint.has_value());
    CHECK(r.midpoint->sampled == strict_pairs);
    CHECK(r.midpoint->failed == 0);
}

TEST_CASE("fixed-preference maximum theorem verifier") {
    // economy family passes every premise and the conclusion
    auto econ = build_scenario(small("exchange-pareto", 16));
    REQUIRE(econ.mu.has_value());
    auto r = verify_simple_max_theorem(econ.seq, *econ.mu);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.premises_hold);
    CHECK(r.conclusion_holds);
    REQUIRE(r.midpoint.has_value());
    CHECK(r.midpoint->certified > 0);
    CHECK(r.midpoint->failed == 0);

    // linear consumer: midpoint continuity fails, and so does the conclusion
    auto consumer = build_scenario(small("linear-consumer", 20));
    auto rc = verify_simple_max_theorem(consumer.seq, *consumer.mu);
    CHECK(rc.verdict == Verdict::PremiseViolation);
    CHECK(!rc.premises_hold);
    CHECK(!rc.conclusion_holds);
    bool midpoint_failed = false;
    for (const auto& p : rc.premises)
        if (p.name == "midpoint_continuity") midpoint_failed = !p.holds;
    CHECK(midpoint_failed);
    for (const auto& p : rc.premises)
        if (p.name != "midpoint_continuity") CHECK(p.holds);

    // constant problem with a maximal candidate
    auto sp = GroundSpace::make_grid({0.0, 0.0}, {1.0, 1.0}, 0.5, Metric::Linf, 0.75);
    auto mu = tabulated(
        sp,
        {[](std::span<const double> q) { return std::sqrt(q[0]) + std::sqrt(q[1]); }},
        {{true, false}});
    std::vector<TabulatedUtility> utils{mu.utilities()[0]};
    utils[0].lipschitz = mu.grid_lipschitz(0);
    MultiUtility mu2(sp, std::move(utils));
    auto pref = from_multi_utility(mu2);
    int top = index_of(*sp, {1.0, 1.0});
    auto seq = constant_sequence(sp, pref, all_points(sp), top, 8, {1.0, 4, 3});
    CHECK(verify_simple_max_theorem(seq, mu2).verdict == Verdict::Pass);

    // varying preferences are redirected
    auto varying = build_scenario(small("shifting-vertex", 12));
    REQUIRE(varying.mu.has_value());
    CHECK_THROWS_WITH_AS(verify_simple_max_theorem(varying.seq, *varying.mu),
                         doctest::Contains("general"), std::invalid_argument);
}

TEST_CASE("varying-preference maximum theorem verifier") {
    auto fp = build_scenario(small("fixed-partition"));
    auto r = verify_general_max_theorem(fp.seq);
    CHECK(r.verdict == Verdict::Pass);

    auto sv = build_scenario(small("shifting-vertex", 60));
    auto rv = verify_general_max_theorem(sv.seq);
    CHECK(rv.verdict == Verdict::PremiseViolation);
    CHECK(!rv.conclusion_holds);
    REQUIRE(rv.condition3.has_value());
    CHECK(!rv.condition3->holds);

    auto sp = line_space(7);
    auto chain = from_multi_utility(tabulated(sp, {[](std::span<const double> x) {
        return x[0];
    }}));
    auto constant = constant_sequence(sp, chain, all_points(sp), 6, 10, {0.05, 4, 3});
    CHECK(verify_general_max_theorem(constant).verdict == Verdict::Pass);
}

TEST_CASE("equivalence verifier and its duality") {
    auto block = build_scenario(small("diagonal-block", 100));
    auto r = verify_equivalence(block.seq);
    CHECK(r.verdict == EquivalenceVerdict::NotApplicable);
    CHECK(!r.limit_partial_order);
    REQUIRE(r.condition3.has_value());
    CHECK(!r.condition3->holds);
    CHECK(r.max_inclusion.inclusion_holds);
    CHECK(r.min_inclusion.inclusion_holds);
    CHECK(r.dir_1_to_2);
    CHECK(!r.dir_2_to_1);
    CHECK(!r.biconditional_holds);

    // witness-backed refutation on the growing-triangle family
    auto tri = build_scenario(small("shrinking-triangle", 24));
    VerifyOptions tight;
    tight.clique_cap = 5000;
    auto rt = verify_equivalence(tri.seq, tight);
    CHECK(rt.verdict == EquivalenceVerdict::Holds);
    REQUIRE(rt.condition3.has_value());
    CHECK(!rt.condition3->holds);
    CHECK(rt.condition3->source == Condition3Report::Source::Witness);
    CHECK(!rt.max_inclusion.inclusion_holds);
    int corner = index_of(*tri.seq.space(), {1.0, 0.0});
    REQUIRE(rt.max_inclusion.violators.size() == 1);
    CHECK(rt.max_inclusion.violators[0] == corner);

    // constant partial order: the equivalence holds trivially
    auto grid = GroundSpace::make_grid({0.0, 0.0}, {1.0, 1.0}, 0.5, Metric::Linf, 0.75);
    int n = grid->size();
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool dom = grid->point(i)[0] >= grid->point(j)[0] &&
                       grid->point(i)[1] >= grid->point(j)[1];
            if (dom) m.set(i, j);
        }
    auto vec = Preference::from_matrix(grid, std::move(m));
    auto cseq = constant_sequence(grid, vec, all_points(grid),
                                  index_of(*grid, {1.0, 1.0}), 10, {0.25, 4, 3});
    auto rc = verify_equivalence(cseq);
    CHECK(rc.verdict == EquivalenceVerdict::Holds);
    CHECK(rc.limit_partial_order);

    // min branch of the original equals the max branch of the reversal
    std::vector<SequenceTerm> rev_terms;
    for (int k = 1; k <= block.seq.horizon(); ++k) {
        const auto& t = block.seq.term(k);
        rev_terms.push_back({t.pref.reversed(), t.feasible, t.x});
    }
    ProblemSequence reversed(block.seq.space(), std::move(rev_terms),
                             {block.seq.limit().pref.reversed(),
                              block.seq.limit().feasible, block.seq.limit().x},
                             block.seq.policy());
    auto rr = verify_equivalence(reversed);
    CHECK(rr.max_inclusion.inclusion_holds == r.min_inclusion.inclusion_holds);
    CHECK(rr.max_inclusion.accumulation_points == r.min_inclusion.accumulation_points);
    CHECK(rr.min_inclusion.accumulation_points == r.max_inclusion.accumulation_points);
}

TEST_CASE("floor corollary checker") {
    auto bf = build_scenario(small("budget-floor"));
    auto r = corollary_floor_check(bf.seq, bf.mu);
    CHECK(r.verdict == FloorVerdict::Agrees);
    REQUIRE(r.floor.has_value());
    auto origin = bf.seq.space()->point(*r.floor);
    CHECK(origin[0] == 0.0);
    CHECK(origin[1] == 0.0);
    REQUIRE(r.condition3.has_value());
    CHECK(r.condition3->holds);

    // disjoint feasible sets leave no common floor
    auto sp = line_space(10);
    auto chain = from_multi_utility(tabulated(sp, {[](std::span<const double> x) {
        return x[0];
    }}));
    std::vector<SequenceTerm> terms;
    for (int n = 1; n <= 8; ++n)
        terms.push_back({chain, FeasibleSet(sp, {n % 2 ? 0 : 9}), std::nullopt});
    ProblemSequence disjoint(sp, std::move(terms),
                             {chain, FeasibleSet(sp, {9}), std::nullopt}, {0.2, 4, 3});
    auto rd = corollary_floor_check(disjoint, std::nullopt);
    CHECK(rd.verdict == FloorVerdict::NotApplicable);
    CHECK(!rd.floor.has_value());

    // block relation: the limit is not a partial order
    auto block = build_scenario(small("diagonal-block", 60));
    auto rb = corollary_floor_check(block.seq, std::nullopt);
    CHECK(rb.verdict == FloorVerdict::NotApplicable);
    CHECK(!rb.limit_partial_order);
}

TEST_CASE("witness fallback refutes domain continuity under the cap") {
    auto tri = build_scenario(small("shrinking-triangle", 24));
    CHECK_THROWS_AS(ls_domains(tri.seq, 2000), CliqueCapError);
    auto c3 = condition3_holds(tri.seq, 2000);
    CHECK(!c3.holds);
    CHECK(c3.source == Condition3Report::Source::Witness);
    REQUIRE(c3.violator.has_value());
    // the witness is the bottom edge of the square
    for (auto m : c3.violator->members())
        CHECK(tri.seq.space()->point(m)[1] == 0.0);

    // per-term witnesses truly are maximal domains
    for (int n : {1, 8, 24}) {
        const auto& t = tri.seq.term(n);
        CHECK(is_maximal_domain(t.pref, t.feasible, (*tri.seq.witness_domains())[n - 1]));
    }
    CHECK(!is_maximal_domain(tri.seq.limit().pref, tri.seq.limit().feasible,
                             *tri.seq.witness_limit()));
}

TEST_CASE("no catalog family ever refutes the varying-preference theorem") {
    // premise-violating families must read as premise violations (or stay
    // inconclusive under the cap), never as counterexamples
    VerifyOptions opts;
    opts.clique_cap = 5000;
    for (const auto& entry : catalog()) {
        CAPTURE(entry.name);
        ScenarioSpec spec = small(entry.name, 16);
        auto bundle = build_scenario(spec);
        auto r = verify_general_max_theorem(bundle.seq, opts);
        CHECK(r.verdict != Verdict::Counterexample);
    }
}

TEST_CASE("discrete convexity and per-term stats") {
    auto sp = GroundSpace::make_grid({0.0, 0.0}, {1.0, 1.0}, 0.1, Metric::Linf, 0.15);
    std::vector<std::int32_t> budget;
    for (int i = 0; i < sp->size(); ++i)
        if (sp->point(i)[0] + sp->point(i)[1] <= 0.7 + 1e-9) budget.push_back(i);
    CHECK(is_discretely_convex(FeasibleSet(sp, budget)));
    CHECK(!is_discretely_convex(
        FeasibleSet(sp, {index_of(*sp, {0.0, 0.0}), index_of(*sp, {1.0, 1.0})})));

    auto block = build_scenario(small("diagonal-block", 40));
    auto stats = per_term_stats(block.seq);
    REQUIRE(int(stats.size()) == 40);
    CHECK(stats[0].n == 1);
    CHECK(stats[39].set_dist <= 0.02);
    CHECK(stats[39].rel_dist == 0.0);
    CHECK(stats[39].domain_count >= 1);
    REQUIRE(stats[39].x_maximal.has_value());
    CHECK(*stats[39].x_maximal);
    CHECK(stats[39].matched_domain_distance >= 0.0);
}
