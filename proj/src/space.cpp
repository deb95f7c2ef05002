#include "prefkernel/space.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace prefkernel {

const char* metric_name(Metric m) {
    return m == Metric::Linf ? "Linf" : "L2";
}

Metric metric_from_name(const std::string& s) {
    if (s == "Linf" || s == "L-infinity" || s == "inf") return Metric::Linf;
    if (s == "L2" || s == "l2") return Metric::L2;
    throw std::invalid_argument("unknown metric name: " + s);
}

GroundSpace::GroundSpace(int dim, Metric metric, double connect_radius,
                         std::vector<double> flat_coords,
                         std::optional<GridInfo> grid)
    : dim_(dim), metric_(metric), connect_radius_(connect_radius),
      coords_(std::move(flat_coords)), grid_(std::move(grid)) {
    if (dim_ <= 0) throw std::invalid_argument("ground space dimension must be positive");
    if (connect_radius_ < 0.0) throw std::invalid_argument("connect_radius must be nonnegative");
    if (coords_.empty() || coords_.size() % dim_ != 0)
        throw std::invalid_argument("coordinate array does not match dimension");
    n_ = int(coords_.size() / dim_);

    // Pairwise-distinct check via lexicographic sort of point indices.
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    auto lex_less = [&](int a, int b) {
        for (int k = 0; k < dim_; ++k) {
            double xa = coords_[std::size_t(a) * dim_ + k];
            double xb = coords_[std::size_t(b) * dim_ + k];
            if (xa != xb) return xa < xb;
        }
        return false;
    };
    std::sort(order.begin(), order.end(), lex_less);
    for (int i = 0; i + 1 < n_; ++i) {
        if (!lex_less(order[i], order[i + 1]) && !lex_less(order[i + 1], order[i]))
            throw std::invalid_argument("ground space points must be pairwise distinct");
    }
}

std::shared_ptr<const GroundSpace> GroundSpace::make_grid(
    const std::vector<double>& lo, const std::vector<double>& hi, double h,
    Metric metric, double connect_radius) {
    if (lo.size() != hi.size() || lo.empty())
        throw std::invalid_argument("grid bounds must be nonempty and of equal dimension");
    if (h <= 0.0) throw std::invalid_argument("grid spacing must be positive");
    int dim = int(lo.size());
    GridInfo info;
    info.origin = lo;
    info.step = h;
    std::size_t total = 1;
    for (int k = 0; k < dim; ++k) {
        if (hi[k] < lo[k]) throw std::invalid_argument("grid bounds must be well ordered");
        int count = int(std::floor((hi[k] - lo[k]) / h + 0.5)) + 1;
        info.counts.push_back(count);
        total *= count;
    }
    std::vector<double> coords;
    coords.reserve(total * dim);
    std::vector<int> idx(dim, 0);
    while (true) {
        for (int k = 0; k < dim; ++k) coords.push_back(lo[k] + idx[k] * h);
        int k = dim - 1;
        while (k >= 0 && ++idx[k] == info.counts[k]) idx[k--] = 0;
        if (k < 0) break;
    }
    return std::make_shared<GroundSpace>(dim, metric, connect_radius,
                                         std::move(coords), std::move(info));
}

std::shared_ptr<const GroundSpace> GroundSpace::make_simplex_grid(
    int categories, int resolution, Metric metric, double connect_radius) {
    if (categories < 2) throw std::invalid_argument("simplex grid needs at least two categories");
    if (resolution < 1) throw std::invalid_argument("simplex resolution must be positive");
    std::vector<double> coords;
    std::vector<int> k(categories, 0);
    // Enumerate compositions of `resolution` into `categories` parts,
    // lexicographically by (k_0, k_1, ...).
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == categories - 1) {
            k[pos] = remaining;
            for (int c = 0; c < categories; ++c)
                coords.push_back(double(k[c]) / resolution);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            k[pos] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, resolution);
    return std::make_shared<GroundSpace>(categories, metric, connect_radius,
                                         std::move(coords), std::nullopt);
}

void GroundSpace::check_index(int i) const {
    if (i < 0 || i >= n_)
        throw std::invalid_argument("point index " + std::to_string(i) +
                                    " out of range [0, " + std::to_string(n_) + ")");
}

std::span<const double> GroundSpace::point(int i) const {
    check_index(i);
    return {coords_.data() + std::size_t(i) * dim_, std::size_t(dim_)};
}

double GroundSpace::distance_between(std::span<const double> p,
                                     std::span<const double> q) const {
    if (metric_ == Metric::Linf) {
        double d = 0.0;
        for (int k = 0; k < dim_; ++k) d = std::max(d, std::abs(p[k] - q[k]));
        return d;
    }
    double s = 0.0;
    for (int k = 0; k < dim_; ++k) {
        double dk = p[k] - q[k];
        s += dk * dk;
    }
    return std::sqrt(s);
}

double GroundSpace::distance(int i, int j) const {
    check_index(i);
    check_index(j);
    return distance_between(point(i), point(j));
}

double GroundSpace::distance_to(int i, std::span<const double> q) const {
    check_index(i);
    return distance_between(point(i), q);
}

GroundSpace::Snap GroundSpace::nearest(std::span<const double> q) const {
    if (int(q.size()) != dim_) throw std::invalid_argument("query dimension mismatch");
    if (grid_) {
        const GridInfo& g = *grid_;
        int idx = 0;
        for (int k = 0; k < dim_; ++k) {
            double r = (q[k] - g.origin[k]) / g.step;
            // Round half down so midpoints of members snap without leaving
            // down-closed sets.
            int ik = int(std::floor(r + 0.5 - 1e-9));
            ik = std::clamp(ik, 0, g.counts[k] - 1);
            idx = idx * g.counts[k] + ik;
        }
        return {idx, distance_to(idx, q)};
    }
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_; ++i) {
        double d = distance_to(i, q);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return {best, best_d};
}

const std::vector<std::int32_t>& GroundSpace::neighbors_sorted(int i) const {
    check_index(i);
    std::call_once(neighbor_cache_once_, [&] {
        neighbor_cache_.resize(n_);
        for (int a = 0; a < n_; ++a) {
            auto& lst = neighbor_cache_[a];
            lst.resize(n_);
            std::iota(lst.begin(), lst.end(), 0);
            std::sort(lst.begin(), lst.end(), [&](std::int32_t x, std::int32_t y) {
                double dx = distance(a, x), dy = distance(a, y);
                if (dx != dy) return dx < dy;
                return x < y;
            });
        }
    });
    return neighbor_cache_[i];
}

FeasibleSet::FeasibleSet(SpacePtr space, std::vector<std::int32_t> members)
    : space_(std::move(space)), members_(std::move(members)) {
    if (!space_) throw std::invalid_argument("feasible set requires a ground space");
    if (members_.empty()) throw std::invalid_argument("feasible set must be nonempty");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (auto m : members_)
        if (m < 0 || m >= space_->size())
            throw std::invalid_argument("feasible set member " + std::to_string(m) +
                                        " is not a valid point index");
}

bool FeasibleSet::contains(std::int32_t idx) const {
    return std::binary_search(members_.begin(), members_.end(), idx);
}

namespace {

void require_same_space(const FeasibleSet& a, const FeasibleSet& b) {
    if (a.space().get() != b.space().get())
        throw std::invalid_argument("sets must share a ground space");
}

double directed_hausdorff(const FeasibleSet& a, const FeasibleSet& b) {
    const GroundSpace& sp = *a.space();
    double result = 0.0;
    for (auto x : a.members()) {
        if (b.contains(x)) continue;
        double best = std::numeric_limits<double>::infinity();
        for (auto y : b.members()) {
            double d = sp.distance(x, y);
            if (d < best) {
                best = d;
                if (best <= result) break;  // cannot raise the max
            }
        }
        if (best > result) result = best;
    }
    return result;
}

}  // namespace

double hausdorff_distance(const FeasibleSet& a, const FeasibleSet& b) {
    require_same_space(a, b);
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

bool hausdorff_within(const FeasibleSet& a, const FeasibleSet& b, double eps) {
    require_same_space(a, b);
    const GroundSpace& sp = *a.space();
    auto directed_within = [&](const FeasibleSet& p, const FeasibleSet& q) {
        for (auto x : p.members()) {
            if (q.contains(x)) continue;
            bool found = false;
            for (auto y : q.members()) {
                if (leq_tol(sp.distance(x, y), eps)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    };
    return directed_within(a, b) && directed_within(b, a);
}

double pair_distance(const GroundSpace& space, PairPoint p, PairPoint q) {
    return std::max(space.distance(p.first, q.first),
                    space.distance(p.second, q.second));
}

std::optional<FeasibleSet> set_sequence_limit(
    std::span<const FeasibleSet> sequence, const LimitPolicy& policy,
    const std::optional<FeasibleSet>& candidate) {
    if (sequence.empty()) throw std::invalid_argument("sequence must be nonempty");
    if (policy.tail_window <= 0 || policy.tail_window > int(sequence.size()))
        throw std::invalid_argument("tail_window must be in [1, sequence length]");
    for (std::size_t i = 1; i < sequence.size(); ++i)
        require_same_space(sequence[0], sequence[i]);

    std::vector<FeasibleSet> candidates;
    if (candidate) {
        require_same_space(sequence[0], *candidate);
        candidates.push_back(*candidate);
    }
    candidates.push_back(sequence.back());

    std::size_t tail_start = sequence.size() - policy.tail_window;
    for (const auto& L : candidates) {
        bool ok = true;
        for (std::size_t i = tail_start; i < sequence.size(); ++i) {
            if (!hausdorff_within(sequence[i], L, policy.epsilon)) {
                ok = false;
                break;
            }
        }
        if (ok) return L;
    }
    return std::nullopt;
}

bool is_connected(const FeasibleSet& a) {
    const GroundSpace& sp = *a.space();
    const auto& m = a.members();
    int n = int(m.size());
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    double r = sp.connect_radius();
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (seen[v]) continue;
            if (leq_tol(sp.distance(m[u], m[v]), r)) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

Combination convex_combination(const GroundSpace& space, int x, int y, double alpha) {
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("alpha must lie in [0, 1]");
    auto px = space.point(x);
    auto py = space.point(y);
    std::vector<double> exact(space.dim());
    for (int k = 0; k < space.dim(); ++k)
        exact[k] = alpha * px[k] + (1.0 - alpha) * py[k];
    auto snap = space.nearest(exact);
    return {snap.index, snap.error, std::move(exact)};
}

}  // namespace prefkernel
