#include "prefkernel/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "bits.hpp"
#include "rng.hpp"

namespace prefkernel {

namespace {

constexpr double kMembershipTol = 1e-9;

int snap_steps(double value, double h) {
    return int(std::floor(value / h + 0.5 - 1e-9));
}

/// Index of the grid point with the given coordinates; the grid must contain
/// it exactly.
int exact_index(const GroundSpace& sp, std::vector<double> coords) {
    auto snap = sp.nearest(coords);
    if (snap.error > 1e-9)
        throw std::invalid_argument("grid too coarse: a required point is off-grid");
    return snap.index;
}

LimitPolicy resolved_policy(const ScenarioSpec& spec, double h, int horizon) {
    if (spec.policy) return *spec.policy;
    LimitPolicy pol;
    pol.epsilon = 2.0 * h;
    pol.tail_window = std::min(horizon, std::max(5, horizon / 4));
    pol.min_matches = std::min(pol.tail_window, 5);
    return pol;
}

FeasibleSet filter_set(const SpacePtr& sp, const std::function<bool(std::span<const double>)>& keep) {
    std::vector<std::int32_t> members;
    for (int i = 0; i < sp->size(); ++i)
        if (keep(sp->point(i))) members.push_back(i);
    return FeasibleSet(sp, std::move(members));
}

FeasibleSet full_set(const SpacePtr& sp) {
    std::vector<std::int32_t> members(sp->size());
    std::iota(members.begin(), members.end(), 0);
    return FeasibleSet(sp, std::move(members));
}

/// The maximal element of `k` nearest to `target` (distance, then index).
std::int32_t nearest_maximal(const Preference& p, const FeasibleSet& k, std::int32_t target) {
    auto mx = max_elements(p, k);
    std::int32_t best = mx.members().front();
    double best_d = p.space()->distance(best, target);
    for (auto m : mx.members()) {
        double d = p.space()->distance(m, target);
        if (d < best_d) {
            best = m;
            best_d = d;
        }
    }
    return best;
}

MultiUtility tabulate(const SpacePtr& sp,
                      const std::vector<std::function<double(std::span<const double>)>>& fns,
                      const std::vector<UtilityFlags>& flags, bool with_lipschitz) {
    std::vector<TabulatedUtility> utils;
    for (std::size_t u = 0; u < fns.size(); ++u) {
        TabulatedUtility t;
        t.values.resize(sp->size());
        for (int i = 0; i < sp->size(); ++i) t.values[i] = fns[u](sp->point(i));
        t.flags = flags[u];
        utils.push_back(std::move(t));
    }
    MultiUtility mu(sp, std::move(utils));
    if (!with_lipschitz) return mu;
    std::vector<TabulatedUtility> with;
    for (int u = 0; u < mu.count(); ++u) {
        TabulatedUtility t = mu.utilities()[u];
        t.lipschitz = mu.grid_lipschitz(u);
        with.push_back(std::move(t));
    }
    return MultiUtility(sp, std::move(with));
}

}  // namespace

ScenarioBundle gen_linear_consumer(const ScenarioSpec& spec) {
    double h = spec.grid_h;
    auto sp = GroundSpace::make_grid(spec.grid_lo, spec.grid_hi, h, Metric::Linf, 1.5 * h);
    auto u1 = [](std::span<const double> q) { return q[0] + q[1]; };
    auto u2 = [](std::span<const double> q) { return q[0] + 2.0 * q[1]; };
    UtilityFlags linear{false, true};
    MultiUtility mu = tabulate(sp, {u1, u2}, {linear, linear}, /*with_lipschitz=*/true);
    Preference pref = from_multi_utility(mu);

    auto budget = [&](double banana_price) {
        return filter_set(sp, [&](std::span<const double> q) {
            return q[0] + banana_price * q[1] <= 1.0 + kMembershipTol;
        });
    };

    std::int32_t corner = exact_index(*sp, {1.0, 0.0});
    exact_index(*sp, {0.0, 1.0});  // required on-grid as well

    std::vector<SequenceTerm> terms;
    for (int n = 1; n <= spec.horizon; ++n)
        terms.push_back({pref, budget(1.0 + 1.0 / n), corner});
    SequenceTerm limit{pref, budget(1.0), corner};

    LimitPolicy pol = resolved_policy(spec, h, spec.horizon);
    return {"linear-consumer",
            ProblemSequence(sp, std::move(terms), std::move(limit), pol), mu, {}};
}

ScenarioBundle gen_exchange_pareto(const ScenarioSpec& spec) {
    double h = spec.grid_h;
    auto sp = GroundSpace::make_grid(spec.grid_lo, spec.grid_hi, h, Metric::Linf, 1.5 * h);
    // coords: (agent1 good1, agent1 good2, agent2 good1, agent2 good2)
    auto u1 = [](std::span<const double> x) { return std::sqrt(x[0]) + std::sqrt(x[1]); };
    auto u2 = [](std::span<const double> x) { return std::sqrt(x[2]) + 1.5 * std::sqrt(x[3]); };
    UtilityFlags qc{true, false};
    MultiUtility mu = tabulate(sp, {u1, u2}, {qc, qc}, true);
    Preference pref = from_multi_utility(mu);

    double top = spec.grid_hi[0];
    auto feas = [&](double endowment) {
        return filter_set(sp, [&](std::span<const double> x) {
            return x[0] + x[2] <= endowment + kMembershipTol &&
                   x[1] + x[3] <= endowment + kMembershipTol;
        });
    };
    auto snapped_endowment = [&](int n) {
        double w = top - 0.6 / n;
        return std::clamp(snap_steps(w, h) * h, 0.0, top);
    };

    FeasibleSet limit_feas = feas(top);
    std::int32_t target = max_elements(pref, limit_feas).members().front();

    std::vector<SequenceTerm> terms;
    for (int n = 1; n <= spec.horizon; ++n) {
        FeasibleSet k = feas(snapped_endowment(n));
        std::int32_t xn = nearest_maximal(pref, k, target);
        terms.push_back({pref, std::move(k), xn});
    }
    SequenceTerm limit{pref, limit_feas, target};
    LimitPolicy pol = resolved_policy(spec, h, spec.horizon);
    return {"exchange-pareto",
            ProblemSequence(sp, std::move(terms), std::move(limit), pol), mu, {}};
}

ScenarioBundle gen_shifting_vertex(const ScenarioSpec& spec) {
    double h = spec.grid_h;
    auto sp = GroundSpace::make_grid(spec.grid_lo, spec.grid_hi, h, Metric::Linf, 1.5 * h);
    exact_index(*sp, {0.5});

    // the relation gap decays like 1/n; the default tail needs a band wider
    // than 2h until the grid term dominates, so the scenario default is the
    // larger of 4h and twice the gap at the start of the tail
    ScenarioSpec adjusted = spec;
    if (!spec.policy) {
        LimitPolicy pol;
        int w = std::min(spec.horizon, std::max(5, spec.horizon / 4));
        pol.epsilon = std::max(4.0 * h, 2.0 / std::max(1, spec.horizon - w + 1));
        pol.tail_window = w;
        pol.min_matches = 5;
        adjusted.policy = pol;
    }
    const ScenarioSpec& use = adjusted;

    auto ident = [](std::span<const double> x) { return x[0]; };
    auto vertex_util = [](double c) {
        return [c](std::span<const double> x) { return (x[0] - c) * (x[0] - c); };
    };
    UtilityFlags linear{false, true};
    UtilityFlags none{false, false};

    FeasibleSet full = full_set(sp);
    std::int32_t zero = exact_index(*sp, {0.0});

    std::vector<SequenceTerm> terms;
    for (int n = 1; n <= spec.horizon; ++n) {
        double c = double(n + 1) / (2.0 * n);
        MultiUtility mun = tabulate(sp, {ident, vertex_util(c)}, {linear, none}, false);
        terms.push_back({from_multi_utility(mun), full, zero});
    }
    MultiUtility mu = tabulate(sp, {ident, vertex_util(0.5)}, {linear, none}, false);
    SequenceTerm limit{from_multi_utility(mu), full, zero};
    LimitPolicy pol = resolved_policy(use, h, use.horizon);
    return {"shifting-vertex",
            ProblemSequence(sp, std::move(terms), std::move(limit), pol), mu, {}};
}

ScenarioBundle gen_fixed_partition(const ScenarioSpec& spec) {
    double h = spec.grid_h;
    auto sp = GroundSpace::make_grid(spec.grid_lo, spec.grid_hi, h, Metric::Linf, 1.5 * h);
    int n_pts = sp->size();
    Rng rng(spec.seed);

    int blocks = int(spec.param_or("blocks", double(1 + spec.seed % 4)));
    blocks = std::clamp(blocks, 1, std::max(1, n_pts / 4));

    // contiguous blocks via random distinct cut positions
    std::vector<int> cuts{0, n_pts};
    while (int(cuts.size()) < blocks + 1) {
        int c = rng.uniform_int(1, n_pts - 1);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> block_of(n_pts);
    for (int b = 0; b < blocks; ++b)
        for (int i = cuts[b]; i < cuts[b + 1]; ++i) block_of[i] = b;

    // per-block ranks (distinct) and perturbations that die off as 1/n; all
    // order flips resolve well before the tail window
    std::vector<double> rank(n_pts), pert(n_pts);
    for (int b = 0; b < blocks; ++b) {
        std::vector<int> idx;
        for (int i = 0; i < n_pts; ++i)
            if (block_of[i] == b) idx.push_back(i);
        std::vector<int> order(idx.size());
        std::iota(order.begin(), order.end(), 0);
        for (int i = int(order.size()) - 1; i > 0; --i)
            std::swap(order[i], order[rng.uniform_int(0, i)]);
        double beta = spec.horizon / (12.0 * double(idx.size()));
        for (std::size_t j = 0; j < idx.size(); ++j) {
            rank[idx[j]] = double(order[j] + 1) / double(idx.size());
            pert[idx[j]] = rng.uniform_real(-1.0, 1.0) * beta;
        }
    }

    auto relation_at = [&](double decay) {
        BitMatrix m(n_pts, n_pts);
        for (int i = 0; i < n_pts; ++i)
            for (int j = 0; j < n_pts; ++j)
                if (block_of[i] == block_of[j] &&
                    rank[i] + pert[i] * decay >= rank[j] + pert[j] * decay)
                    m.set(i, j);
        return Preference::from_matrix_unchecked(sp, std::move(m));
    };

    // limit window and terms expanded by a vanishing margin
    int a = rng.uniform_int(0, n_pts - 1);
    int b = rng.uniform_int(0, n_pts - 1);
    if (a > b) std::swap(a, b);
    auto window = [&](int lo, int hi) {
        std::vector<std::int32_t> mem;
        for (int i = std::max(0, lo); i <= std::min(n_pts - 1, hi); ++i) mem.push_back(i);
        return FeasibleSet(sp, std::move(mem));
    };

    Preference limit_pref = relation_at(0.0);
    FeasibleSet limit_k = window(a, b);
    std::int32_t target = max_elements(limit_pref, limit_k).members().front();

    std::vector<SequenceTerm> terms;
    for (int n = 1; n <= spec.horizon; ++n) {
        Preference pn = relation_at(1.0 / n);
        FeasibleSet kn = window(a - 3 / n, b + 3 / n);
        std::int32_t xn = nearest_maximal(pn, kn, target);
        terms.push_back({std::move(pn), std::move(kn), xn});
    }
    SequenceTerm limit{limit_pref, limit_k, target};
    LimitPolicy pol = resolved_policy(spec, h, spec.horizon);
    return {"fixed-partition",
            ProblemSequence(sp, std::move(terms), std::move(limit), pol),
            std::nullopt, {}};
}

ScenarioBundle gen_diagonal_block(const ScenarioSpec& spec) {
    double h = spec.grid_h;
    auto sp = GroundSpace::make_grid(spec.grid_lo, spec.grid_hi, h, Metric::Linf, 1.5 * h);
    std::int32_t half = exact_index(*sp, {0.5});
    int n_pts = sp->size();

    // the feasible boundary creeps at rate 0.5/n; at short horizons the band
    // must cover the residual creep across the tail window
    ScenarioSpec adjusted = spec;
    if (!spec.policy) {
        LimitPolicy pol;
        pol.tail_window = std::min(spec.horizon, std::max(5, spec.horizon / 4));
        pol.min_matches = std::min(pol.tail_window, 5);
        int tail_start = spec.horizon - pol.tail_window + 1;
        pol.epsilon = std::max(2.0 * h, 0.5 / tail_start + h);
        adjusted.policy = pol;
    }
    const ScenarioSpec& use = adjusted;

    BitMatrix m(n_pts, n_pts);
    for (int i = 0; i < n_pts; ++i) {
        for (int j = 0; j < n_pts; ++j) {
            bool block = sp->point(i)[0] >= 0.5 - 1e-12 && sp->point(j)[0] >= 0.5 - 1e-12;
            if (i == j || block) m.set(i, j);
        }
    }
    Preference pref = Preference::from_matrix_unchecked(sp, std::move(m));

    auto interval_from = [&](int lo_idx) {
        std::vector<std::int32_t> mem;
        for (int i = lo_idx; i < n_pts; ++i) mem.push_back(i);
        return FeasibleSet(sp, std::move(mem));
    };

    std::vector<SequenceTerm> terms;
    std::vector<FeasibleSet> witnesses;
    for (int n = 1; n <= spec.horizon; ++n) {
        int lo = snap_steps(0.5 - 0.5 / n, h);
        terms.push_back({pref, interval_from(lo), lo});
        witnesses.emplace_back(sp, std::vector<std::int32_t>{lo});
    }
    SequenceTerm limit{pref, interval_from(half), half};
    FeasibleSet witness_limit(sp, std::vector<std::int32_t>{half});
    LimitPolicy pol = resolved_policy(use, h, use.horizon);
    return {"diagonal-block",
            ProblemSequence(sp, std::move(terms), std::move(limit), pol,
                            std::move(witnesses), std::move(witness_limit)),
            std::nullopt, {}};
}

ScenarioBundle gen_shrinking_triangle(const ScenarioSpec& spec) {
    double h = spec.grid_h;
    auto sp = GroundSpace::make_grid(spec.grid_lo, spec.grid_hi, h, Metric::Linf, 1.5 * h);
    int n_pts = sp->size();

    BitMatrix m(n_pts, n_pts);
    for (int i = 0; i < n_pts; ++i) {
        auto pi = sp->point(i);
        for (int j = 0; j < n_pts; ++j) {
            auto pj = sp->point(j);
            if (pi[0] >= pj[0] && pi[1] >= pj[1]) m.set(i, j);
        }
    }
    Preference pref = Preference::from_matrix_unchecked(sp, std::move(m));

    std::int32_t corner = exact_index(*sp, {1.0, 0.0});
    FeasibleSet bottom_edge = filter_set(sp, [](std::span<const double> x) {
        return x[1] <= 1e-12;
    });

    std::vector<SequenceTerm> terms;
    std::vector<FeasibleSet> witnesses;
    for (int n = 1; n <= spec.horizon; ++n) {
        FeasibleSet kn = filter_set(sp, [&](std::span<const double> x) {
            return x[1] <= n * (1.0 - x[0]) + kMembershipTol;
        });
        terms.push_back({pref, std::move(kn), corner});
        witnesses.push_back(bottom_edge);
    }
    SequenceTerm limit{pref, full_set(sp), corner};
    LimitPolicy pol = resolved_policy(spec, h, spec.horizon);
    return {"shrinking-triangle",
            ProblemSequence(sp, std::move(terms), std::move(limit), pol,
                            std::move(witnesses), bottom_edge),
            std::nullopt, {}};
}

ScenarioBundle gen_budget_floor(const ScenarioSpec& spec) {
    double h = spec.grid_h;
    auto sp = GroundSpace::make_grid(spec.grid_lo, spec.grid_hi, h, Metric::Linf, 1.5 * h);
    auto u1 = [](std::span<const double> q) { return std::sqrt(q[0]) + std::sqrt(q[1]); };
    auto u2 = [](std::span<const double> q) { return std::sqrt(q[0]) + 2.0 * std::sqrt(q[1]); };
    UtilityFlags qc{true, false};
    MultiUtility mu = tabulate(sp, {u1, u2}, {qc, qc}, true);
    Preference pref = from_multi_utility(mu);

    double top = spec.grid_hi[0];
    auto feas = [&](double wealth) {
        return filter_set(sp, [&](std::span<const double> q) {
            return q[0] + q[1] <= wealth + kMembershipTol;
        });
    };
    auto snapped_wealth = [&](int n) {
        double w = top - 0.6 / n;
        return std::clamp(snap_steps(w, h) * h, h, top);
    };

    FeasibleSet limit_k = feas(top);
    std::int32_t target = max_elements(pref, limit_k).members().front();

    std::vector<SequenceTerm> terms;
    for (int n = 1; n <= spec.horizon; ++n) {
        FeasibleSet kn = feas(snapped_wealth(n));
        std::int32_t xn = nearest_maximal(pref, kn, target);
        terms.push_back({pref, std::move(kn), xn});
    }
    SequenceTerm limit{pref, limit_k, target};
    LimitPolicy pol = resolved_policy(spec, h, spec.horizon);
    return {"budget-floor",
            ProblemSequence(sp, std::move(terms), std::move(limit), pol), mu, {}};
}

ScenarioBundle gen_lottery_emu(const ScenarioSpec& spec) {
    int resolution = int(spec.param_or("resolution", 6));
    int categories = int(spec.param_or("categories", 3));
    double h = 1.0 / resolution;
    auto sp = GroundSpace::make_simplex_grid(categories, resolution, Metric::Linf, 1.5 * h);

    // Integer consequence utilities chosen so no two distinct grid lotteries
    // tie on either utility; the limit is then a partial order.
    std::vector<double> base1{0.0, 5.0, 7.0};
    std::vector<double> base2{0.0, 7.0, 10.0};
    std::vector<double> w1{0.5, -0.25, 0.125};
    std::vector<double> w2{-0.375, 0.25, 0.125};
    if (categories != 3)
        throw std::invalid_argument("lottery scenario currently supports three consequences");

    auto mu_at = [&](double decay) {
        auto e1 = [&, decay](std::span<const double> x) {
            double s = 0.0;
            for (int c = 0; c < categories; ++c) s += (base1[c] + w1[c] * decay) * x[c];
            return s;
        };
        auto e2 = [&, decay](std::span<const double> x) {
            double s = 0.0;
            for (int c = 0; c < categories; ++c) s += (base2[c] + w2[c] * decay) * x[c];
            return s;
        };
        UtilityFlags lin{false, true};
        return tabulate(sp, {e1, e2}, {lin, lin}, false);
    };

    auto cap_set = [&](double bound) {
        return filter_set(sp, [&](std::span<const double> x) {
            return x[0] <= bound + kMembershipTol;
        });
    };
    auto snapped_bound = [&](int n) {
        double a = 1.0 - 1.0 / (2.0 * n);
        return std::clamp(double(snap_steps(a, h)) * h, h, 1.0);
    };

    MultiUtility mu = mu_at(0.0);
    Preference limit_pref = from_multi_utility(mu);
    FeasibleSet limit_k = cap_set(1.0);
    std::int32_t target = max_elements(limit_pref, limit_k).members().front();

    std::vector<SequenceTerm> terms;
    for (int n = 1; n <= spec.horizon; ++n) {
        Preference pn = from_multi_utility(mu_at(1.0 / n));
        FeasibleSet kn = cap_set(snapped_bound(n));
        std::int32_t xn = nearest_maximal(pn, kn, target);
        terms.push_back({std::move(pn), std::move(kn), xn});
    }
    SequenceTerm limit{limit_pref, limit_k, target};
    LimitPolicy pol = resolved_policy(spec, h, spec.horizon);
    ScenarioBundle bundle{"lottery-emu",
                          ProblemSequence(sp, std::move(terms), std::move(limit), pol),
                          mu, {}};
    bundle.notes.push_back(
        "density holds only up to grid resolution: adjacent lotteries admit no "
        "strict intermediate on the grid");
    return bundle;
}

ScenarioBundle gen_random(const ScenarioSpec& spec) {
    Rng rng(spec.seed);
    int n_pts = int(spec.param_or("points", double(rng.uniform_int(8, 24))));
    double h = 1.0 / double(n_pts - 1);
    auto sp = GroundSpace::make_grid({0.0}, {1.0}, h, Metric::Linf, 1.5 * h);
    int n_utils = int(spec.param_or("utilities", 2));
    double decay = spec.param_or("decay", 1.0);

    // distinct base values per utility (gaps >= 1/n_pts) so the order
    // stabilizes once the perturbation falls below the smallest gap
    std::vector<std::vector<double>> base(n_utils), pert(n_utils);
    double scale = decay * spec.horizon / (8.0 * n_pts);
    for (int u = 0; u < n_utils; ++u) {
        std::vector<int> perm(n_pts);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n_pts - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
        base[u].resize(n_pts);
        pert[u].resize(n_pts);
        for (int i = 0; i < n_pts; ++i) {
            base[u][i] = double(perm[i]) / n_pts;
            pert[u][i] = rng.uniform_real(-1.0, 1.0) * scale;
        }
    }

    auto mu_at = [&](double d) {
        std::vector<TabulatedUtility> utils;
        for (int u = 0; u < n_utils; ++u) {
            TabulatedUtility t;
            t.values.resize(n_pts);
            for (int i = 0; i < n_pts; ++i) t.values[i] = base[u][i] + pert[u][i] * d;
            utils.push_back(std::move(t));
        }
        return MultiUtility(sp, std::move(utils));
    };

    int a = rng.uniform_int(0, n_pts - 1);
    int b = rng.uniform_int(0, n_pts - 1);
    if (a > b) std::swap(a, b);
    auto window = [&](int lo, int hi) {
        std::vector<std::int32_t> mem;
        for (int i = std::max(0, lo); i <= std::min(n_pts - 1, hi); ++i) mem.push_back(i);
        return FeasibleSet(sp, std::move(mem));
    };

    Preference limit_pref = from_multi_utility(mu_at(0.0));
    FeasibleSet limit_k = window(a, b);
    std::int32_t target = max_elements(limit_pref, limit_k).members().front();

    std::vector<SequenceTerm> terms;
    for (int n = 1; n <= spec.horizon; ++n) {
        Preference pn = from_multi_utility(mu_at(decay == 0.0 ? 0.0 : 1.0 / n));
        FeasibleSet kn = window(a - 3 / n, b + 3 / n);
        std::int32_t xn = nearest_maximal(pn, kn, target);
        terms.push_back({std::move(pn), std::move(kn), xn});
    }
    SequenceTerm limit{limit_pref, limit_k, target};
    LimitPolicy pol = resolved_policy(spec, h, spec.horizon);
    return {"random", ProblemSequence(sp, std::move(terms), std::move(limit), pol),
            std::nullopt, {}};
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"linear-consumer", "simple-max", "PREMISE-VIOLATION", kDefaultCliqueCap, false},
        {"exchange-pareto", "simple-max", "PASS", kDefaultCliqueCap, false},
        {"shifting-vertex", "general-max", "PREMISE-VIOLATION", kDefaultCliqueCap, false},
        {"fixed-partition", "general-max", "PASS", kDefaultCliqueCap, true},
        {"diagonal-block", "equivalence", "NOT-APPLICABLE", kDefaultCliqueCap, true},
        {"shrinking-triangle", "equivalence", "HOLDS", 20000, false},
        {"budget-floor", "floor-check", "AGREES", kDefaultCliqueCap, false},
        {"lottery-emu", "equivalence", "HOLDS", kDefaultCliqueCap, false},
        {"random", "general-max", "PASS", kDefaultCliqueCap, true},
    };
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

ScenarioSpec default_spec(const std::string& name) {
    ScenarioSpec s;
    s.name = name;
    if (name == "linear-consumer") {
        s.grid_lo = {0.0, 0.0};
        s.grid_hi = {1.2, 1.2};
        s.grid_h = 0.05;
        s.horizon = 50;
    } else if (name == "exchange-pareto") {
        s.grid_lo = {0.0, 0.0, 0.0, 0.0};
        s.grid_hi = {1.0, 1.0, 1.0, 1.0};
        s.grid_h = 0.2;
        s.horizon = 30;
    } else if (name == "shifting-vertex") {
        s.grid_lo = {0.0};
        s.grid_hi = {1.0};
        s.grid_h = 0.005;
        s.horizon = 100;
    } else if (name == "fixed-partition") {
        s.grid_lo = {0.0};
        s.grid_hi = {1.0};
        s.grid_h = 0.02;
        s.horizon = 40;
    } else if (name == "diagonal-block") {
        s.grid_lo = {0.0};
        s.grid_hi = {1.0};
        s.grid_h = 0.005;
        s.horizon = 200;
    } else if (name == "shrinking-triangle") {
        s.grid_lo = {0.0, 0.0};
        s.grid_hi = {1.0, 1.0};
        s.grid_h = 0.05;
        s.horizon = 40;
    } else if (name == "budget-floor") {
        s.grid_lo = {0.0, 0.0};
        s.grid_hi = {1.0, 1.0};
        s.grid_h = 0.2;
        s.horizon = 24;
    } else if (name == "lottery-emu") {
        s.horizon = 60;
        s.params["resolution"] = 6;
        s.params["categories"] = 3;
    } else if (name == "random") {
        s.grid_lo = {0.0};
        s.grid_hi = {1.0};
        s.horizon = 40;
    } else {
        throw std::invalid_argument("unknown scenario: " + name);
    }
    return s;
}

ScenarioBundle build_scenario(const ScenarioSpec& spec) {
    ScenarioSpec s = default_spec(spec.name);
    if (!spec.grid_lo.empty()) s.grid_lo = spec.grid_lo;
    if (!spec.grid_hi.empty()) s.grid_hi = spec.grid_hi;
    if (spec.grid_h > 0.0) s.grid_h = spec.grid_h;
    if (spec.horizon > 0) s.horizon = spec.horizon;
    if (spec.policy) s.policy = spec.policy;
    s.seed = spec.seed;
    for (const auto& [k, v] : spec.params) s.params[k] = v;

    if (s.name == "linear-consumer") return gen_linear_consumer(s);
    if (s.name == "exchange-pareto") return gen_exchange_pareto(s);
    if (s.name == "shifting-vertex") return gen_shifting_vertex(s);
    if (s.name == "fixed-partition") return gen_fixed_partition(s);
    if (s.name == "diagonal-block") return gen_diagonal_block(s);
    if (s.name == "shrinking-triangle") return gen_shrinking_triangle(s);
    if (s.name == "budget-floor") return gen_budget_floor(s);
    if (s.name == "lottery-emu") return gen_lottery_emu(s);
    if (s.name == "random") return gen_random(s);
    throw std::invalid_argument("unknown scenario: " + s.name);
}

const std::vector<std::string>& verifier_names() {
    static const std::vector<std::string> names = {
        "detect-limits", "simple-max", "general-max", "equivalence", "floor-check"};
    return names;
}

}  // namespace prefkernel
