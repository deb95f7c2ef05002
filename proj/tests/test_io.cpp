#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "prefkernel/io.hpp"
#include "prefkernel/oracle.hpp"
#include "helpers.hpp"

using namespace prefkernel;
using namespace testutil;

TEST_CASE("space serialization round-trip") {
    auto sp = GroundSpace::make_grid({0.0, 0.0}, {1.0, 0.5}, 0.25, Metric::L2, 0.4);
    auto j = io::space_to_json(*sp);
    CHECK(j["dim"] == 2);
    CHECK(j["metric"] == "L2");
    CHECK(j.contains("grid"));
    auto back = io::space_from_json(j);
    CHECK(back->size() == sp->size());
    CHECK(io::space_to_json(*back).dump() == j.dump());

    auto simplex = GroundSpace::make_simplex_grid(3, 4, Metric::Linf, 0.3);
    auto j2 = io::space_to_json(*simplex);
    CHECK(!j2.contains("grid"));
    CHECK(io::space_from_json(j2)->size() == simplex->size());
}

TEST_CASE("preference run-length serialization round-trips") {
    Rng rng(71);
    for (int t = 0; t < 40; ++t) {
        auto sp = line_space(rng.uniform_int(1, 17));
        Preference p = mixed_random_preference(sp, rng);
        auto j = io::preference_to_json(p);
        Preference back = io::preference_from_json(j, sp);
        CHECK(back.same_pairs(p));
    }

    auto sp = line_space(3);
    auto j = io::preference_to_json(mixed_random_preference(sp, rng));
    j["pairs"][0] = {1, 1};  // runs no longer sum to the row length
    CHECK_THROWS_AS(io::preference_from_json(j, sp), std::invalid_argument);

    // serialized relations that violate the axioms are rejected on load
    io::json bad;
    bad["space_id"] = "s0";
    bad["pairs"] = {{0, 2, 1}, {1, 2}, {2, 1}};  // has 0>=1, 1>=2, not 0>=2
    CHECK_THROWS_AS(io::preference_from_json(bad, sp), std::invalid_argument);
}

TEST_CASE("feasible sets and multi-utilities round-trip") {
    auto sp = line_space(9);
    FeasibleSet f(sp, {1, 3, 4});
    auto jf = io::feasible_to_json(f, "s7");
    CHECK(jf["space_id"] == "s7");
    CHECK(io::feasible_from_json(jf, sp) == f);

    auto mu = tabulated(sp,
                        {[](std::span<const double> x) { return x[0] * x[0]; },
                         [](std::span<const double> x) { return 1.0 - x[0]; }},
                        {{true, false}, {false, true}});
    std::vector<TabulatedUtility> utils(mu.utilities());
    utils[0].lipschitz = 2.0;
    MultiUtility mu2(sp, std::move(utils));
    auto jm = io::multi_utility_to_json(mu2);
    MultiUtility back = io::multi_utility_from_json(jm, sp);
    CHECK(back.count() == 2);
    CHECK(back.utilities()[0].lipschitz == 2.0);
    CHECK(back.utilities()[0].flags.strictly_quasiconcave);
    CHECK(back.utilities()[1].flags.linear);
    CHECK(from_multi_utility(back).same_pairs(from_multi_utility(mu2)));
}

TEST_CASE("problem sequences round-trip with shared relations") {
    ScenarioSpec spec = default_spec("diagonal-block");
    spec.grid_h = 0.01;
    spec.horizon = 30;
    auto bundle = build_scenario(spec);
    auto j = io::sequence_to_json(bundle.seq);
    // the preference never changes, so exactly one relation is stored
    CHECK(j["preferences"].size() == 1);
    CHECK(j.contains("witness"));

    ProblemSequence back = io::sequence_from_json(j);
    CHECK(back.horizon() == bundle.seq.horizon());
    CHECK(io::sequence_to_json(back).dump() == j.dump());
    CHECK(back.term(7).feasible.members() == bundle.seq.term(7).feasible.members());
    REQUIRE(back.witness_domains().has_value());
}

TEST_CASE("domain collections serialize canonically") {
    auto sp = line_space(5);
    Rng rng(2);
    Preference p = mixed_random_preference(sp, rng);
    auto coll = maximal_domains(p, all_points(sp));
    auto j = io::domain_collection_to_json(coll);
    for (std::size_t i = 1; i < j["domains"].size(); ++i)
        CHECK(j["domains"][i - 1].get<std::vector<int>>() <
              j["domains"][i].get<std::vector<int>>());
}

TEST_CASE("scenario reports are schema-stable and deterministic") {
    ScenarioSpec spec = default_spec("diagonal-block");
    spec.grid_h = 0.01;
    spec.horizon = 40;
    auto a = io::run_scenario(spec, "equivalence");
    auto b = io::run_scenario(spec, "equivalence");
    CHECK(a.report.dump() == b.report.dump());  // byte-identical reruns

    for (const char* key : {"scenario", "verifier", "spec", "policy", "horizon",
                            "verdict", "expected_verdict", "matches_expected",
                            "result", "per_term", "notes"})
        CHECK(a.report.contains(key));
    CHECK(a.verdict == "NOT-APPLICABLE");
    CHECK(a.matches_expected);
    CHECK(a.report["per_term"].size() == 40);
}

TEST_CASE("csv summaries") {
    ScenarioSpec spec = default_spec("fixed-partition");
    spec.horizon = 12;
    auto bundle = build_scenario(spec);
    auto stats = per_term_stats(bundle.seq);
    std::string csv = io::term_stats_to_csv(stats);
    CHECK(csv.rfind("n,d_h_feasible,d_h_relation,domain_count,x_maximal,"
                    "matched_domain_distance\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);  // header + 12 rows
}

TEST_CASE("atomic writes leave no temp files") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "prefkernel_io_test";
    fs::remove_all(dir);
    fs::path target = dir / "report.json";
    io::atomic_write(target.string(), "{\"ok\":true}");
    std::ifstream in(target);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "{\"ok\":true}");
    int entries = 0;
    for (auto& e : fs::directory_iterator(dir)) {
        (void)e;
        ++entries;
    }
    CHECK(entries == 1);
    fs::remove_all(dir);
}

TEST_CASE("digests are stable") {
    CHECK(io::digest("") == "cbf29ce484222325");
    CHECK(io::digest("abc") == io::digest("abc"));
    CHECK(io::digest("abc") != io::digest("abd"));
    auto j = io::oracle_report("max_elements", io::digest("abc"), {1, 2}, {1, 2}, true);
    CHECK(j["agree"] == true);
    CHECK(j["operation"] == "max_elements");
}

TEST_CASE("a transposed relation is caught by the differential harness") {
    // stand-in for an injected transposition bug: compare the kernel on the
    // transposed matrix against the reference on the original
    Rng rng(83);
    int detected = 0;
    for (int t = 0; t < 30; ++t) {
        auto sp = line_space(rng.uniform_int(3, 10));
        Preference p = mixed_random_preference(sp, rng);
        FeasibleSet a = all_points(sp);
        auto mutated = max_elements(p.reversed(), a);
        auto reference = oracle::max_elements(p, a);
        if (!(mutated.members() == reference.members())) ++detected;
    }
    CHECK(detected > 0);
}

TEST_CASE("scenario spec round-trip") {
    ScenarioSpec spec = default_spec("random");
    spec.seed = 99;
    spec.params["points"] = 12;
    spec.policy = LimitPolicy{0.03, 7, 4};
    auto j = io::scenario_spec_to_json(spec);
    ScenarioSpec back = io::scenario_spec_from_json(j);
    CHECK(back.name == spec.name);
    CHECK(back.seed == 99);
    CHECK(back.param_or("points", 0) == 12);
    REQUIRE(back.policy.has_value());
    CHECK(back.policy->epsilon == 0.03);
    CHECK(io::scenario_spec_to_json(back).dump() == j.dump());
}

TEST_CASE("suite summary shape and golden catalog table") {
    auto r = io::run_suite();
    CHECK(r.summary.contains("entries"));
    CHECK(r.summary.contains("differential"));
    CHECK(r.summary["entries"].size() == catalog().size());
    CHECK(r.summary["all_ok"] == r.all_ok);
    CHECK(r.all_ok);

    const char* golden =
        "scenario             verifier      verdict             expected            ok\n"
        "linear-consumer      simple-max    PREMISE-VIOLATION   PREMISE-VIOLATION   yes\n"
        "exchange-pareto      simple-max    PASS                PASS                yes\n"
        "shifting-vertex      general-max   PREMISE-VIOLATION   PREMISE-VIOLATION   yes\n"
        "fixed-partition      general-max   PASS                PASS                yes\n"
        "diagonal-block       equivalence   NOT-APPLICABLE      NOT-APPLICABLE      yes\n"
        "shrinking-triangle   equivalence   HOLDS               HOLDS               yes\n"
        "budget-floor         floor-check   AGREES              AGREES              yes\n"
        "lottery-emu          equivalence   HOLDS               HOLDS               yes\n"
        "random               general-max   PASS                PASS                yes\n"
        "differential: 111 instances, 0 disagreements\n"
        "suite: all expectations hold\n";
    CHECK(r.table == golden);
}
