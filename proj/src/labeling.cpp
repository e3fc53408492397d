#include "radio/labeling.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "radio/errors.hpp"
#include "radio/oracle.hpp"

namespace radio {

namespace {

void require_permutation(int n, const LinearOrder& ord) {
    if (static_cast<int>(ord.seq.size()) != n)
        throw NotAPermutation("order has " + std::to_string(ord.seq.size()) +
                              " entries for a tree on " + std::to_string(n) + " vertices");
    std::vector<char> seen(n, 0);
    for (int v : ord.seq) {
        if (v < 0 || v >= n || seen[v])
            throw NotAPermutation("order is not a permutation of 0.." + std::to_string(n - 1));
        seen[v] = 1;
    }
}

// Q[i] = sum of consecutive level pairs up to position i minus i*(diam+eps).
// The separation inequality for positions i < j is then
//   d(u_i, u_j) >= Q[j] - Q[i] + diam + 1.
std::vector<long long> position_offsets(const Tree& t, const RootedView& rv,
                                        const LinearOrder& ord) {
    const long long dpe = t.diameter() + rv.epsilon;
    std::vector<long long> q(ord.seq.size(), 0);
    for (std::size_t i = 1; i < ord.seq.size(); ++i)
        q[i] = q[i - 1] + rv.level[ord.seq[i - 1]] + rv.level[ord.seq[i]] - dpe;
    return q;
}

}  // namespace

OrderCheckReport check_order(const Tree& t, const RootedView& rv, const LinearOrder& ord) {
    const int n = t.size();
    require_permutation(n, ord);

    OrderCheckReport rep;
    if (n == 1) {
        rep.condition_a = ord.seq[0] == rv.centers[0];
        rep.condition_b = true;
        return rep;
    }

    if (rv.epsilon == 1) {
        rep.condition_a =
            ord.seq[0] == rv.centers[0] && t.adjacent(ord.seq[n - 1], rv.centers[0]);
    } else {
        const int a = ord.seq[0], b = ord.seq[n - 1];
        rep.condition_a = (a == rv.centers[0] && b == rv.centers[1]) ||
                          (a == rv.centers[1] && b == rv.centers[0]);
    }

    const auto q = position_offsets(t, rv, ord);
    const long long need = t.diameter() + 1;
    rep.condition_b = true;
    for (int i = 0; i < n && rep.condition_b; ++i)
        for (int j = i + 1; j < n; ++j) {
            const long long lhs = t.distance(ord.seq[i], ord.seq[j]);
            const long long rhs = q[j] - q[i] + need;
            if (lhs < rhs) {
                rep.condition_b = false;
                rep.i = i;
                rep.j = j;
                rep.lhs = lhs;
                rep.rhs = rhs;
                break;
            }
        }
    return rep;
}

RadioLabeling labels_from_order(const Tree& t, const RootedView& rv, const LinearOrder& ord) {
    const int n = t.size();
    require_permutation(n, ord);

    RadioLabeling lab;
    lab.labels.assign(n, 0);
    const long long dpe = t.diameter() + rv.epsilon;
    long long f = 0;
    for (int i = 1; i < n; ++i) {
        f += dpe - rv.level[ord.seq[i - 1]] - rv.level[ord.seq[i]];
        if (f < 0)
            throw NegativeLabel("label recurrence went negative at position " + std::to_string(i));
        lab.labels[ord.seq[i]] = f;
        lab.span = std::max(lab.span, f);
    }

    if (n == 1) {
        lab.certified_optimal = true;  // the single vertex labeled 0 is optimal
    } else {
        lab.certified_optimal = check_order(t, rv, ord).ok() && is_radio_labeling(t, lab) &&
                                lab.span == lower_bound(t, rv);
    }
    return lab;
}

namespace {

void require_kind(const CompositeSpec& spec, CompositeKind kind, const char* fn) {
    if (spec.kind != kind)
        throw BadInput(std::string(fn) + " called with a '" +
                       composite_kind_name(spec.kind) + "' composition spec");
}

}  // namespace

LinearOrder order_merge(const CompositeSpec& spec,
                        const std::vector<LinearOrder>& component_orders) {
    require_kind(spec, CompositeKind::merge_centers, "order_merge");
    if (component_orders.size() != spec.components.size())
        throw ArityMismatch("need one order per component: have " +
                            std::to_string(component_orders.size()) + " for " +
                            std::to_string(spec.components.size()));

    for (std::size_t i = 0; i < spec.components.size(); ++i) {
        const Tree& comp = spec.components[i];
        if (!check_order(comp, root_view(comp), component_orders[i]).ok())
            throw ComponentOrderInvalid("order for component " + std::to_string(i) +
                                        " fails the order conditions on that component");
    }

    // Merged center first, then each component's order with its leading
    // center dropped; the tail of the last component lands next to the
    // center as required.
    LinearOrder out;
    out.seq.reserve(spec.composite_n);
    out.seq.push_back(0);
    for (std::size_t i = 0; i < spec.components.size(); ++i)
        for (std::size_t j = 1; j < component_orders[i].seq.size(); ++j)
            out.seq.push_back(spec.global_id(static_cast<int>(i), component_orders[i].seq[j]));
    return out;
}

LinearOrder order_star(const CompositeSpec& spec, const LinearOrder& base_order) {
    require_kind(spec, CompositeKind::star, "order_star");
    const Tree& base = spec.components[0];
    if (!check_order(base, root_view(base), base_order).ok())
        throw BaseOrderInvalid("base order fails the order conditions on the base tree");

    const int n0 = base.size();
    const int k = spec.k;
    const int n = spec.composite_n;

    // Star center first; positions 1..n-k-1 walk the base order one
    // position at a time across all copies; the k copy centers close the
    // order, leaving the last position adjacent to the star center.
    LinearOrder out;
    out.seq.assign(n, -1);
    out.seq[0] = 0;
    for (int tpos = 1; tpos < n0; ++tpos)
        for (int s = 0; s < k; ++s)
            out.seq[(tpos - 1) * k + s + 1] = spec.global_id(s, base_order.seq[tpos]);
    for (int s = 0; s < k; ++s)
        out.seq[n - k + s] = spec.global_id(s, base_order.seq[0]);
    return out;
}

LinearOrder order_double_star(const CompositeSpec& spec, const LinearOrder& base_order) {
    require_kind(spec, CompositeKind::double_star, "order_double_star");
    const Tree& base = spec.components[0];
    if (!check_order(base, root_view(base), base_order).ok())
        throw BaseOrderInvalid("base order fails the order conditions on the base tree");

    const int n0 = base.size();
    const int copies = 2 * spec.k;
    const int n = spec.composite_n;

    // One double-star center opens the order and the other closes it.
    // Interior positions walk the base order across all copies; since
    // consecutive copies hang off opposite centers, consecutive vertices
    // land in opposite halves.  The copy centers come last, just before
    // the closing center.
    LinearOrder out;
    out.seq.assign(n, -1);
    out.seq[0] = 0;
    out.seq[n - 1] = 1;
    for (int tpos = 1; tpos < n0; ++tpos)
        for (int s = 0; s < copies; ++s)
            out.seq[(tpos - 1) * copies + s + 1] = spec.global_id(s, base_order.seq[tpos]);
    for (int s = 0; s < copies; ++s)
        out.seq[n - copies - 1 + s] = spec.global_id(s, base_order.seq[0]);
    return out;
}

namespace {

struct OrderSearch {
    const Tree& t;
    const RootedView& rv;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    int n;
    long long dpe;
    long long need;
    std::vector<int> seq;
    std::vector<long long> q;
    std::vector<char> used;
    std::vector<int> candidates;  // non-endpoint vertices, ascending (level, id)
    int final_vertex = -1;        // two-center case: the reserved closing center
    int unused_center_neighbors = 0;  // single-center case bookkeeping

    OrderSearch(const Tree& t_, const RootedView& rv_, std::uint64_t budget_)
        : t(t_), rv(rv_), budget(budget_), n(t_.size()),
          dpe(t_.diameter() + rv_.epsilon), need(t_.diameter() + 1) {}

    bool violates(int pos, long long qpos, int v) const {
        for (int i = 0; i < pos; ++i)
            if (t.distance(seq[i], v) < qpos - q[i] + need) return true;
        return false;
    }

    bool extend(int pos) {
        if (pos == n) return true;
        if (nodes >= budget) {
            budget_hit = true;
            return false;
        }

        const bool last = pos == n - 1;
        if (rv.epsilon == 1 && !last && unused_center_neighbors == 0)
            return false;  // nothing left that could legally close the order

        if (rv.epsilon == 0 && last) {
            const int v = final_vertex;
            const long long qpos = q[pos - 1] + rv.level[seq[pos - 1]] + rv.level[v] - dpe;
            if (violates(pos, qpos, v)) return false;
            ++nodes;
            seq[pos] = v;
            q[pos] = qpos;
            return true;
        }

        for (int v : candidates) {
            if (used[v]) continue;
            if (rv.epsilon == 1 && last && !t.adjacent(v, rv.centers[0])) continue;
            const long long qpos = q[pos - 1] + rv.level[seq[pos - 1]] + rv.level[v] - dpe;
            if (violates(pos, qpos, v)) continue;
            ++nodes;
            seq[pos] = v;
            q[pos] = qpos;
            used[v] = 1;
            if (rv.epsilon == 1 && rv.level[v] == 1) --unused_center_neighbors;
            if (extend(pos + 1)) return true;
            used[v] = 0;
            if (rv.epsilon == 1 && rv.level[v] == 1) ++unused_center_neighbors;
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

FindOrderResult find_lb_order(const Tree& t, const RootedView& rv, bool exhaustive,
                              std::uint64_t node_budget) {
    const int n = t.size();
    FindOrderResult res;

    if (n == 1) {
        res.order = LinearOrder{{rv.centers[0]}};
        res.complete = true;
        return res;
    }

    std::uint64_t budget = node_budget;
    if (budget == 0)
        budget = exhaustive ? std::numeric_limits<std::uint64_t>::max() : 5'000'000;

    OrderSearch search(t, rv, budget);
    search.seq.assign(n, -1);
    search.q.assign(n, 0);
    search.used.assign(n, 0);

    // The opening vertex is a center either way; with two centers the other
    // one is reserved for the closing position.  Any order satisfying the
    // conditions can be reversed into one of this shape, so fixing the
    // opening center loses nothing.
    search.seq[0] = rv.centers[0];
    search.used[rv.centers[0]] = 1;
    if (rv.epsilon == 0) {
        search.final_vertex = rv.centers[1];
        search.used[rv.centers[1]] = 1;
    }

    for (int v = 0; v < n; ++v)
        if (!search.used[v]) search.candidates.push_back(v);
    std::sort(search.candidates.begin(), search.candidates.end(), [&](int a, int b) {
        if (rv.level[a] != rv.level[b]) return rv.level[a] < rv.level[b];
        return a < b;
    });
    if (rv.epsilon == 1)
        search.unused_center_neighbors = t.degree(rv.centers[0]);

    const bool found = search.extend(1);
    res.nodes = search.nodes;
    if (found) {
        res.order = LinearOrder{search.seq};
        res.complete = true;
    } else {
        res.complete = !search.budget_hit;
    }
    return res;
}

}  // namespace radio
