#pragma once

#include <functional>
#include <span>
#include <vector>

#include "prefkernel/preference.hpp"
#include "prefkernel/space.hpp"
#include "bits.hpp"
#include "rng.hpp"

namespace testutil {

using namespace prefkernel;

inline SpacePtr line_space(int points, double h = 0.0, double radius_steps = 1.5) {
    double step = h > 0.0 ? h : (points > 1 ? 1.0 / (points - 1) : 1.0);
    return GroundSpace::make_grid({0.0}, {step * (points - 1)}, step, Metric::Linf,
                                  radius_steps * step);
}

inline FeasibleSet all_points(const SpacePtr& sp) {
    std::vector<std::int32_t> m(sp->size());
    for (int i = 0; i < sp->size(); ++i) m[i] = i;
    return FeasibleSet(sp, std::move(m));
}

inline FeasibleSet range_set(const SpacePtr& sp, int lo, int hi) {
    std::vector<std::int32_t> m;
    for (int i = lo; i <= hi; ++i) m.push_back(i);
    return FeasibleSet(sp, std::move(m));
}

inline int index_of(const GroundSpace& sp, std::vector<double> coords) {
    auto snap = sp.nearest(coords);
    REQUIRE(snap.error <= 1e-9);
    return snap.index;
}

inline MultiUtility tabulated(const SpacePtr& sp,
                              std::vector<std::function<double(std::span<const double>)>> fns,
                              std::vector<UtilityFlags> flags = {}) {
    std::vector<TabulatedUtility> utils;
    for (std::size_t u = 0; u < fns.size(); ++u) {
        TabulatedUtility t;
        for (int i = 0; i < sp->size(); ++i) t.values.push_back(fns[u](sp->point(i)));
        if (u < flags.size()) t.flags = flags[u];
        utils.push_back(std::move(t));
    }
    return MultiUtility(sp, std::move(utils));
}

/// Random preorder: random pairs closed under reflexivity and transitivity.
inline Preference random_preorder(const SpacePtr& sp, Rng& rng, double density = 0.2) {
    int n = sp->size();
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i);
        for (int j = 0; j < n; ++j)
            if (i != j && rng.chance(density)) m.set(i, j);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (m.get(i, k))
                for (int j = 0; j < n; ++j)
                    if (m.get(k, j)) m.set(i, j);
    return Preference::from_matrix(sp, std::move(m));
}

/// Random multi-utility preorder with deliberate value ties.
inline Preference random_multi_utility_preorder(const SpacePtr& sp, Rng& rng,
                                                int utilities = 2, int levels = 4) {
    std::vector<TabulatedUtility> utils;
    for (int u = 0; u < utilities; ++u) {
        TabulatedUtility t;
        for (int i = 0; i < sp->size(); ++i)
            t.values.push_back(double(rng.uniform_int(0, levels - 1)) / levels);
        utils.push_back(std::move(t));
    }
    return from_multi_utility(MultiUtility(sp, std::move(utils)));
}

inline Preference mixed_random_preference(const SpacePtr& sp, Rng& rng) {
    if (rng.chance(0.5)) return random_preorder(sp, rng, rng.uniform_real(0.05, 0.5));
    return random_multi_utility_preorder(sp, rng, rng.uniform_int(1, 3),
                                         rng.uniform_int(2, 6));
}

}  // namespace testutil
