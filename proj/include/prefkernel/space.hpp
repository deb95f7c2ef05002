#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prefkernel {

enum class Metric { Linf, L2 };

const char* metric_name(Metric m);
Metric metric_from_name(const std::string& s);

/// Comparison with a small relative slack, used wherever a tolerance from a
/// limit policy is applied. Keeps grid arithmetic noise from flipping
/// decisions at exact tolerance boundaries.
inline bool leq_tol(double a, double b) {
    return a <= b + 1e-9 * (b < 1.0 ? 1.0 : b) + 1e-12;
}

/// Present when the point set is an axis-aligned lattice; enables O(dim)
/// nearest-point snapping.
struct GridInfo {
    std::vector<double> origin;
    double step = 0.0;
    std::vector<int> counts;  // points per dimension, row-major layout
};

/// Finite point set embedded in R^d with a metric and a connectivity radius.
/// Two points are adjacent iff their distance is <= connect_radius.
class GroundSpace {
public:
    GroundSpace(int dim, Metric metric, double connect_radius,
                std::vector<double> flat_coords,
                std::optional<GridInfo> grid = std::nullopt);

    /// Axis-aligned lattice with spacing h covering [lo, hi] per dimension.
    static std::shared_ptr<const GroundSpace> make_grid(
        const std::vector<double>& lo, const std::vector<double>& hi, double h,
        Metric metric, double connect_radius);

    /// All probability vectors over `categories` outcomes with denominators
    /// `resolution` (a lattice on the simplex).
    static std::shared_ptr<const GroundSpace> make_simplex_grid(
        int categories, int resolution, Metric metric, double connect_radius);

    int dim() const { return dim_; }
    int size() const { return n_; }
    Metric metric() const { return metric_; }
    double connect_radius() const { return connect_radius_; }
    const std::optional<GridInfo>& grid() const { return grid_; }

    std::span<const double> point(int i) const;
    double distance(int i, int j) const;
    double distance_between(std::span<const double> p, std::span<const double> q) const;
    double distance_to(int i, std::span<const double> q) const;

    /// Nearest point index plus the snap error. Ties resolve to the smaller
    /// coordinate (grid spaces) or smaller index (general spaces).
    struct Snap { int index; double error; };
    Snap nearest(std::span<const double> q) const;

    /// Point indices sorted by distance from i (then by index). Built lazily
    /// behind a once-flag, so concurrent readers are safe; only intended for
    /// desk-scale spaces.
    const std::vector<std::int32_t>& neighbors_sorted(int i) const;

    bool same_as(const GroundSpace& o) const { return this == &o; }

private:
    void check_index(int i) const;

    int dim_;
    Metric metric_;
    double connect_radius_;
    std::vector<double> coords_;  // n x dim, row-major
    int n_;
    std::optional<GridInfo> grid_;
    mutable std::vector<std::vector<std::int32_t>> neighbor_cache_;
    mutable std::once_flag neighbor_cache_once_;
};

using SpacePtr = std::shared_ptr<const GroundSpace>;

/// Nonempty index subset of a ground space.
class FeasibleSet {
public:
    FeasibleSet(SpacePtr space, std::vector<std::int32_t> members);

    const SpacePtr& space() const { return space_; }
    const std::vector<std::int32_t>& members() const { return members_; }
    int size() const { return int(members_.size()); }
    bool contains(std::int32_t idx) const;

    bool operator==(const FeasibleSet& o) const {
        return space_.get() == o.space_.get() && members_ == o.members_;
    }

private:
    SpacePtr space_;
    std::vector<std::int32_t> members_;  // sorted, unique, nonempty
};

/// Element of the product space X x X; distances take the max over the two
/// component distances.
struct PairPoint {
    std::int32_t first;
    std::int32_t second;
};

/// Tolerance policy for tail-window limit detection. A sequence is accepted
/// as convergent to a candidate when every term in the final `tail_window`
/// indices is within `epsilon` of the candidate. `min_matches` is the
/// subsequence threshold used by accumulation-set detection.
struct LimitPolicy {
    double epsilon = 0.01;
    int tail_window = 5;
    int min_matches = 5;
};

double hausdorff_distance(const FeasibleSet& a, const FeasibleSet& b);
/// True iff hausdorff_distance(a, b) <= eps (with slack); cheaper than the
/// exact distance when the answer is no.
bool hausdorff_within(const FeasibleSet& a, const FeasibleSet& b, double eps);

double pair_distance(const GroundSpace& space, PairPoint p, PairPoint q);

/// Tail-window limit detection. Candidates are the declared candidate (if
/// any) followed by the final element; the first candidate within epsilon of
/// every tail term is returned.
std::optional<FeasibleSet> set_sequence_limit(
    std::span<const FeasibleSet> sequence, const LimitPolicy& policy,
    const std::optional<FeasibleSet>& candidate = std::nullopt);

/// One component in the connect_radius adjacency graph?
bool is_connected(const FeasibleSet& a);

struct Combination {
    int index;          // nearest grid point
    double snap_error;  // distance from the exact combination to that point
    std::vector<double> exact;
};

/// alpha*x + (1-alpha)*y computed exactly in R^d, then snapped to the space.
Combination convex_combination(const GroundSpace& space, int x, int y, double alpha);

}  // namespace prefkernel
