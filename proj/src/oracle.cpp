#include "prefkernel/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace prefkernel {
namespace oracle {

std::vector<FeasibleSet> maximal_domains(const Preference& p, const FeasibleSet& b) {
    const auto& m = b.members();
    int n = int(m.size());
    if (n > 15) throw std::invalid_argument("oracle subset sweep is limited to 15 points");

    auto complete = [&](unsigned mask) {
        for (int x = 0; x < n; ++x) {
            if (!(mask & (1u << x))) continue;
            for (int y = x + 1; y < n; ++y) {
                if (!(mask & (1u << y))) continue;
                if (!p.holds(m[x], m[y]) && !p.holds(m[y], m[x])) return false;
            }
        }
        return true;
    };

    std::vector<FeasibleSet> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!complete(mask)) continue;
        // maximal iff no one-point extension stays complete
        bool extendable = false;
        for (int v = 0; v < n && !extendable; ++v) {
            if (mask & (1u << v)) continue;
            if (complete(mask | (1u << v))) extendable = true;
        }
        if (extendable) continue;
        std::vector<std::int32_t> idx;
        for (int x = 0; x < n; ++x)
            if (mask & (1u << x)) idx.push_back(m[x]);
        out.emplace_back(b.space(), std::move(idx));
    }
    std::sort(out.begin(), out.end(), [](const FeasibleSet& a, const FeasibleSet& c) {
        return a.members() < c.members();
    });
    return out;
}

FeasibleSet max_elements(const Preference& p, const FeasibleSet& a) {
    std::vector<std::int32_t> out;
    for (auto x : a.members()) {
        bool maximal = true;
        for (auto y : a.members())
            if (p.holds(y, x) && !p.holds(x, y)) maximal = false;
        if (maximal) out.push_back(x);
    }
    return FeasibleSet(a.space(), std::move(out));
}

FeasibleSet min_elements(const Preference& p, const FeasibleSet& a) {
    std::vector<std::int32_t> out;
    for (auto x : a.members()) {
        bool minimal = true;
        for (auto y : a.members())
            if (p.holds(x, y) && !p.holds(y, x)) minimal = false;
        if (minimal) out.push_back(x);
    }
    return FeasibleSet(a.space(), std::move(out));
}

std::vector<FeasibleSet> ls_accumulation(
    const std::vector<std::vector<FeasibleSet>>& tail,
    const std::vector<FeasibleSet>& pool, double epsilon, int min_matches,
    std::size_t max_selections) {
    if (tail.empty()) throw std::invalid_argument("tail window must be nonempty");
    std::size_t total = 1;
    for (const auto& coll : tail) {
        if (coll.empty()) throw std::invalid_argument("every tail collection must be nonempty");
        if (total > max_selections / coll.size())
            throw std::invalid_argument("selection sequence count exceeds the configured bound");
        total *= coll.size();
    }

    int w = int(tail.size());
    std::vector<char> accumulated(pool.size(), 0);
    std::vector<int> pick(w, 0);
    while (true) {
        for (std::size_t c = 0; c < pool.size(); ++c) {
            if (accumulated[c]) continue;
            int matches = 0;
            for (int t = 0; t < w; ++t)
                if (hausdorff_within(tail[t][pick[t]], pool[c], epsilon)) ++matches;
            if (matches >= min_matches) accumulated[c] = 1;
        }
        int t = w - 1;
        while (t >= 0 && ++pick[t] == int(tail[t].size())) pick[t--] = 0;
        if (t < 0) break;
    }

    std::vector<FeasibleSet> out;
    for (std::size_t c = 0; c < pool.size(); ++c)
        if (accumulated[c]) out.push_back(pool[c]);
    return out;
}

}  // namespace oracle
}  // namespace prefkernel
