#include "prefkernel/preference.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "bits.hpp"

namespace prefkernel {

MultiUtility::MultiUtility(SpacePtr space, std::vector<TabulatedUtility> utilities)
    : space_(std::move(space)), utilities_(std::move(utilities)) {
    if (!space_) throw std::invalid_argument("multi-utility requires a ground space");
    if (utilities_.empty()) throw std::invalid_argument("utility list must be nonempty");
    for (const auto& u : utilities_) {
        if (int(u.values.size()) != space_->size())
            throw std::invalid_argument("every utility must be tabulated on every point");
        if (u.lipschitz && *u.lipschitz < 0.0)
            throw std::invalid_argument("lipschitz constants must be nonnegative");
    }
}

double MultiUtility::max_lipschitz() const {
    double m = 0.0;
    for (const auto& u : utilities_) {
        if (!u.lipschitz) throw std::invalid_argument("utility is missing a lipschitz constant");
        m = std::max(m, *u.lipschitz);
    }
    return m;
}

double MultiUtility::grid_lipschitz(int u) const {
    const auto& vals = utilities_[u].values;
    double best = 0.0;
    int n = space_->size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = space_->distance(i, j);
            if (d > 0.0) best = std::max(best, std::abs(vals[i] - vals[j]) / d);
        }
    return best;
}

std::vector<int> MultiUtility::lipschitz_violations() const {
    std::vector<int> bad;
    for (int u = 0; u < count(); ++u) {
        if (!utilities_[u].lipschitz) continue;
        if (grid_lipschitz(u) > *utilities_[u].lipschitz * (1.0 + 1e-12)) bad.push_back(u);
    }
    return bad;
}

Relation::Relation(SpacePtr space, BitMatrix matrix)
    : space_(std::move(space)),
      matrix_(std::make_shared<const BitMatrix>(std::move(matrix))) {
    if (!space_) throw std::invalid_argument("relation requires a ground space");
    if (matrix_->rows() != space_->size() || matrix_->cols() != space_->size())
        throw std::invalid_argument("relation matrix shape does not match the space");
}

Relation::Relation(const Relation&) = default;
Relation::Relation(Relation&&) noexcept = default;
Relation& Relation::operator=(const Relation&) = default;
Relation& Relation::operator=(Relation&&) noexcept = default;
Relation::~Relation() = default;

bool Relation::holds(int i, int j) const { return matrix_->get(i, j); }

std::size_t Relation::pair_count() const { return matrix_->count(); }

bool Relation::same_pairs(const Relation& o) const {
    return space_.get() == o.space_.get() && *matrix_ == *o.matrix_;
}

std::string Violation::describe() const {
    if (kind == Kind::Reflexivity)
        return "reflexivity violated at point " + std::to_string(i);
    return "transitivity violated on triple (" + std::to_string(i) + ", " +
           std::to_string(j) + ", " + std::to_string(k) + ")";
}

std::vector<Violation> validate(const Relation& r) {
    std::vector<Violation> out;
    const BitMatrix& m = r.matrix();
    int n = m.rows();
    for (int i = 0; i < n; ++i)
        if (!m.get(i, i)) out.push_back({Violation::Kind::Reflexivity, i, -1, -1});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!m.get(i, j)) continue;
            if (m.row_subset(j, i)) continue;
            // locate the offending k(s)
            const std::uint64_t* rj = m.row(j);
            const std::uint64_t* ri = m.row(i);
            for (int w = 0; w < m.words_per_row(); ++w) {
                std::uint64_t bad = rj[w] & ~ri[w];
                while (bad) {
                    int k = (w << 6) + __builtin_ctzll(bad);
                    out.push_back({Violation::Kind::Transitivity, i, j, k});
                    bad &= bad - 1;
                }
            }
        }
    }
    return out;
}

Preference Preference::from_matrix(SpacePtr space, BitMatrix matrix) {
    Preference p(std::move(space), std::move(matrix));
    auto v = validate(p);
    if (!v.empty())
        throw std::invalid_argument("matrix is not a preference: " + v.front().describe());
    return p;
}

Preference Preference::from_matrix_unchecked(SpacePtr space, BitMatrix matrix) {
    return Preference(std::move(space), std::move(matrix));
}

Preference from_multi_utility(const MultiUtility& mu, double tie_tolerance) {
    const GroundSpace& sp = *mu.space();
    int n = sp.size();
    int nu = mu.count();
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t* row = m.row_mut(i);
        for (int j = 0; j < n; ++j) {
            bool all = true;
            for (int u = 0; u < nu; ++u) {
                if (!(mu.value(u, i) >= mu.value(u, j) - tie_tolerance)) {
                    all = false;
                    break;
                }
            }
            if (all) row[j >> 6] |= std::uint64_t(1) << (j & 63);
        }
    }
    Preference p = Preference::from_matrix_unchecked(mu.space(), std::move(m));
    if (tie_tolerance != 0.0) {
        auto v = validate(p);
        if (!v.empty())
            throw std::invalid_argument("tie tolerance broke the preorder axioms: " +
                                        v.front().describe());
    }
    return p;
}

Preference Preference::reversed() const {
    const BitMatrix& m = matrix();
    int n = m.rows();
    BitMatrix t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.get(i, j)) t.set(j, i);
    return Preference::from_matrix_unchecked(space_, std::move(t));
}

Relation symmetric_part(const Preference& p) {
    const BitMatrix& m = p.matrix();
    int n = m.rows();
    BitMatrix s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.get(i, j) && m.get(j, i)) s.set(i, j);
    return Relation(p.space(), std::move(s));
}

Relation asymmetric_part(const Preference& p) {
    const BitMatrix& m = p.matrix();
    int n = m.rows();
    BitMatrix s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.get(i, j) && !m.get(j, i)) s.set(i, j);
    return Relation(p.space(), std::move(s));
}

namespace {

void require_member_space(const Preference& p, const FeasibleSet& a) {
    if (p.space().get() != a.space().get())
        throw std::invalid_argument("preference and set must share a ground space");
}

}  // namespace

bool is_complete_on(const Preference& p, const FeasibleSet& a) {
    require_member_space(p, a);
    const auto& m = a.members();
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = x + 1; y < m.size(); ++y)
            if (!p.holds(m[x], m[y]) && !p.holds(m[y], m[x])) return false;
    return true;
}

FeasibleSet max_elements(const Preference& p, const FeasibleSet& a) {
    require_member_space(p, a);
    std::vector<std::int32_t> out;
    for (auto x : a.members()) {
        bool dominated = false;
        for (auto y : a.members()) {
            if (p.holds(y, x) && !p.holds(x, y)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(x);
    }
    return FeasibleSet(a.space(), std::move(out));
}

FeasibleSet min_elements(const Preference& p, const FeasibleSet& a) {
    require_member_space(p, a);
    std::vector<std::int32_t> out;
    for (auto x : a.members()) {
        bool dominates = false;
        for (auto y : a.members()) {
            if (p.holds(x, y) && !p.holds(y, x)) {
                dominates = true;
                break;
            }
        }
        if (!dominates) out.push_back(x);
    }
    return FeasibleSet(a.space(), std::move(out));
}

namespace {

/// Directed pair-set distance, exact. `stop_at` lets a caller bound the
/// search: any point whose nearest distance is <= stop_at cannot change the
/// final max, so refinement below it is skipped.
double directed_pair_set(const GroundSpace& sp, const BitMatrix& p, const BitMatrix& q) {
    double result = 0.0;
    int n = p.rows();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!p.get(i, j) || q.get(i, j)) continue;
            const auto& ni = sp.neighbors_sorted(i);
            const auto& nj = sp.neighbors_sorted(j);
            double best = std::numeric_limits<double>::infinity();
            for (auto k : ni) {
                double dik = sp.distance(i, k);
                if (dik >= best || best <= result) break;
                for (auto l : nj) {
                    double djl = sp.distance(j, l);
                    if (djl >= best) break;
                    if (q.get(k, l)) {
                        double cand = std::max(dik, djl);
                        if (cand < best) best = cand;
                        break;  // later l only increase djl
                    }
                }
            }
            if (best > result && best < std::numeric_limits<double>::infinity())
                result = best;
        }
    }
    return result;
}

bool directed_pair_set_within(const GroundSpace& sp, const BitMatrix& p,
                              const BitMatrix& q, double eps) {
    int n = p.rows();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!p.get(i, j) || q.get(i, j)) continue;
            const auto& ni = sp.neighbors_sorted(i);
            const auto& nj = sp.neighbors_sorted(j);
            bool found = false;
            for (auto k : ni) {
                double dik = sp.distance(i, k);
                if (!leq_tol(dik, eps)) break;
                for (auto l : nj) {
                    double djl = sp.distance(j, l);
                    if (!leq_tol(djl, eps)) break;
                    if (q.get(k, l)) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) return false;
        }
    }
    return true;
}

}  // namespace

double pair_set_hausdorff(const GroundSpace& space, const BitMatrix& p, const BitMatrix& q) {
    if (p == q) return 0.0;
    return std::max(directed_pair_set(space, p, q), directed_pair_set(space, q, p));
}

double relation_hausdorff_distance(const Preference& p, const Preference& q) {
    if (p.space().get() != q.space().get())
        throw std::invalid_argument("relations must share a ground space");
    return pair_set_hausdorff(*p.space(), p.matrix(), q.matrix());
}

bool relation_hausdorff_within(const Preference& p, const Preference& q, double eps) {
    if (p.space().get() != q.space().get())
        throw std::invalid_argument("relations must share a ground space");
    if (p.matrix() == q.matrix()) return true;
    const GroundSpace& sp = *p.space();
    return directed_pair_set_within(sp, p.matrix(), q.matrix(), eps) &&
           directed_pair_set_within(sp, q.matrix(), p.matrix(), eps);
}

IndifferencePartition indifference_partition(const Preference& p, const FeasibleSet& a) {
    require_member_space(p, a);
    const auto& m = a.members();
    int n = int(m.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (p.holds(m[x], m[y]) && p.holds(m[y], m[x])) parent[find(x)] = find(y);

    std::vector<std::vector<std::int32_t>> groups(n);
    for (int x = 0; x < n; ++x) groups[find(x)].push_back(m[x]);
    IndifferencePartition out;
    for (auto& g : groups)
        if (!g.empty()) out.classes.emplace_back(a.space(), std::move(g));
    std::sort(out.classes.begin(), out.classes.end(),
              [](const FeasibleSet& x, const FeasibleSet& y) {
                  return x.members().front() < y.members().front();
              });
    return out;
}

DensityCheck is_dense(const Preference& p, const FeasibleSet& a) {
    require_member_space(p, a);
    const auto& m = a.members();
    auto strict = [&](int x, int y) { return p.holds(x, y) && !p.holds(y, x); };
    for (auto x : m) {
        for (auto y : m) {
            if (!strict(x, y)) continue;
            bool found = false;
            for (auto z : m) {
                if (strict(x, z) && strict(z, y)) {
                    found = true;
                    break;
                }
            }
            if (!found) return {false, std::make_pair(int(x), int(y))};
        }
    }
    return {true, std::nullopt};
}

bool is_partial_order(const Preference& p) {
    const BitMatrix& m = p.matrix();
    int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.get(i, j) && m.get(j, i)) return false;
    return true;
}

ExteriorBoundCheck has_exterior_bound(const Preference& p, const FeasibleSet& d,
                                      const FeasibleSet& k) {
    require_member_space(p, d);
    require_member_space(p, k);
    for (auto x : d.members())
        if (!k.contains(x))
            throw std::invalid_argument("domain must be a subset of the ambient set");
    for (auto x : k.members()) {
        if (d.contains(x)) continue;
        bool above = true, below = true;
        for (auto y : d.members()) {
            if (!p.holds(x, y)) above = false;
            if (!p.holds(y, x)) below = false;
            if (!above && !below) break;
        }
        if (above) return {true, int(x), true};
        if (below) return {true, int(x), false};
    }
    return {false, std::nullopt, false};
}

}  // namespace prefkernel
