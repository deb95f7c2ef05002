#include "prefkernel/domains.hpp"

#include <algorithm>

#include "bits.hpp"

namespace prefkernel {

bool DomainCollection::contains(const FeasibleSet& d) const {
    for (const auto& x : domains)
        if (x.members() == d.members()) return true;
    return false;
}

BitMatrix comparability_graph(const Preference& p, const FeasibleSet& b) {
    if (p.space().get() != b.space().get())
        throw std::invalid_argument("preference and set must share a ground space");
    const auto& m = b.members();
    int n = int(m.size());
    BitMatrix g(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (p.holds(m[x], m[y]) || p.holds(m[y], m[x])) {
                g.set(x, y);
                g.set(y, x);
            }
    return g;
}

namespace {

struct CliqueEnumerator {
    const BitMatrix& adj;
    int n;
    std::size_t cap;
    std::vector<std::vector<int>> out;
    std::vector<int> current;

    CliqueEnumerator(const BitMatrix& a, std::size_t cap_) : adj(a), n(a.rows()), cap(cap_) {}

    void emit() {
        if (out.size() >= cap) throw CliqueCapError(cap);
        out.push_back(current);
    }

    // Pivoted expansion over candidate set P and excluded set X.
    void expand(Bits p, Bits x) {
        if (!p.any() && !x.any()) {
            emit();
            return;
        }
        // pivot: vertex of P or X with the most neighbors in P, ties to the
        // lowest index
        int pivot = -1, best = -1;
        for (int u = p.next(0); u != -1; u = p.next(u + 1)) {
            int c = p.intersect_count(adj.row(u));
            if (c > best) { best = c; pivot = u; }
        }
        for (int u = x.next(0); u != -1; u = x.next(u + 1)) {
            int c = p.intersect_count(adj.row(u));
            if (c > best) { best = c; pivot = u; }
        }
        // candidates: P minus neighbors of the pivot, ascending
        std::vector<int> cands;
        for (int v = p.next(0); v != -1; v = p.next(v + 1))
            if (pivot == -1 || !adj.get(pivot, v)) cands.push_back(v);
        for (int v : cands) {
            Bits np(n), nx(n);
            p.intersect_into(adj.row(v), np);
            x.intersect_into(adj.row(v), nx);
            current.push_back(v);
            expand(std::move(np), std::move(nx));
            current.pop_back();
            p.clear(v);
            x.set(v);
        }
    }

    std::vector<std::vector<int>> run() {
        Bits p(n), x(n);
        p.fill_first(n);
        expand(std::move(p), std::move(x));
        return std::move(out);
    }
};

}  // namespace

DomainCollection maximal_domains(const Preference& p, const FeasibleSet& b,
                                 std::size_t clique_cap) {
    BitMatrix g = comparability_graph(p, b);
    CliqueEnumerator en(g, clique_cap);
    auto cliques = en.run();
    const auto& m = b.members();
    std::vector<FeasibleSet> domains;
    domains.reserve(cliques.size());
    for (auto& c : cliques) {
        std::vector<std::int32_t> idx;
        idx.reserve(c.size());
        for (int pos : c) idx.push_back(m[pos]);
        domains.emplace_back(b.space(), std::move(idx));
    }
    std::sort(domains.begin(), domains.end(),
              [](const FeasibleSet& a, const FeasibleSet& c) {
                  return a.members() < c.members();
              });
    return {b, std::move(domains)};
}

FeasibleSet best_elements(const Preference& p, const FeasibleSet& d) {
    if (!is_complete_on(p, d))
        throw std::invalid_argument("best_elements requires a comparability domain");
    std::vector<std::int32_t> out;
    for (auto x : d.members()) {
        bool best = true;
        for (auto y : d.members()) {
            if (!p.holds(x, y)) {
                best = false;
                break;
            }
        }
        if (best) out.push_back(x);
    }
    return FeasibleSet(d.space(), std::move(out));
}

FeasibleSet max_via_domains(const Preference& p, const FeasibleSet& k,
                            std::size_t clique_cap) {
    auto coll = maximal_domains(p, k, clique_cap);
    std::vector<std::int32_t> out;
    for (const auto& d : coll.domains) {
        auto best = best_elements(p, d);
        out.insert(out.end(), best.members().begin(), best.members().end());
    }
    return FeasibleSet(k.space(), std::move(out));
}

DomainReport characterize_domain(const Preference& p, const FeasibleSet& k,
                                 const FeasibleSet& d, std::size_t clique_cap) {
    for (auto x : d.members())
        if (!k.contains(x))
            throw std::invalid_argument("candidate domain must be a subset of the ambient set");

    DomainReport r;
    r.is_domain = is_complete_on(p, d);
    r.is_connected = is_connected(d);
    auto bound = has_exterior_bound(p, d, k);
    r.exterior_bound = bound.exists;
    r.bound_witness = bound.witness;
    r.ambient_dense = is_dense(p, k).dense;
    bool classes_ok = true;
    for (const auto& cls : indifference_partition(p, k).classes)
        if (!is_connected(cls)) {
            classes_ok = false;
            break;
        }
    r.classes_connected = classes_ok;
    r.hypotheses_hold = r.ambient_dense && r.classes_connected;
    r.verdict_maximal = r.is_domain && r.is_connected && !r.exterior_bound;
    if (r.hypotheses_hold) {
        try {
            auto coll = maximal_domains(p, k, clique_cap);
            r.enumeration_member = coll.contains(d);
        } catch (const CliqueCapError&) {
            r.enumeration_member = std::nullopt;
        }
    }
    return r;
}

}  // namespace prefkernel
