#include "radio/rooted_view.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "radio/errors.hpp"

namespace radio {

RootedView root_view(const Tree& t) {
    const int n = t.size();
    RootedView rv;

    long long best = std::numeric_limits<long long>::max();
    std::vector<long long> weight(n);
    for (int v = 0; v < n; ++v) {
        weight[v] = vertex_weight(t, v);
        best = std::min(best, weight[v]);
    }
    rv.weight_min = best;
    for (int v = 0; v < n; ++v)
        if (weight[v] == best) rv.centers.push_back(v);

    // Basic fact about trees: the weight is strictly convex along paths, so
    // the minimum is attained at one vertex or two adjacent ones.
    if (rv.centers.size() > 2 ||
        (rv.centers.size() == 2 && !t.adjacent(rv.centers[0], rv.centers[1])))
        throw std::logic_error("weight center set is not a vertex or an edge");
    rv.epsilon = rv.centers.size() == 1 ? 1 : 0;

    rv.level.resize(n);
    rv.side.resize(n);
    rv.branch.assign(n, RootedView::kCenterBranch);
    for (int v = 0; v < n; ++v) {
        int lv = t.distance(v, rv.centers[0]);
        int sd = rv.centers[0];
        if (rv.centers.size() == 2) {
            int l2 = t.distance(v, rv.centers[1]);
            if (l2 < lv) {
                lv = l2;
                sd = rv.centers[1];
            }
        }
        rv.level[v] = lv;
        rv.side[v] = sd;
        rv.total_level += lv;
    }

    // Branch root of a non-center vertex: the level-1 ancestor on the path
    // to its nearest center.  Found by stepping to any neighbor one level
    // down on the same side until level 1 is reached.
    for (int v = 0; v < n; ++v) {
        if (rv.level[v] == 0) continue;
        int u = v;
        while (rv.level[u] > 1) {
            for (int w : t.neighbors(u))
                if (rv.level[w] == rv.level[u] - 1 && rv.side[w] == rv.side[u]) {
                    u = w;
                    break;
                }
        }
        rv.branch[v] = u;
    }
    return rv;
}

BranchRelation branch_relation(const RootedView& rv, int u, int v) {
    const int n = static_cast<int>(rv.level.size());
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw VertexOutOfRange("vertex out of range: " + std::to_string(u) + "," +
                               std::to_string(v));
    if (rv.branch[u] == RootedView::kCenterBranch || rv.branch[v] == RootedView::kCenterBranch)
        return BranchRelation::involves_center;
    if (rv.branch[u] == rv.branch[v]) return BranchRelation::same;
    if (rv.side[u] == rv.side[v]) return BranchRelation::different;
    return BranchRelation::opposite;
}

long long lower_bound(const Tree& t, const RootedView& rv) {
    const long long n = t.size();
    if (n < 2) throw TooSmall("lower bound needs at least 2 vertices");
    const long long d = t.diameter();
    const long long eps = rv.epsilon;
    const long long lb = (n - 1) * (d + eps) - 2 * rv.total_level + eps;

    // Same bound via total weight: (n-1)(d+1)+1-2w.  With a single center
    // w equals the level sum; with two centers it exceeds it by n/2.  The
    // two expressions must agree; a mismatch means the view is corrupt.
    const long long via_weight = (n - 1) * (d + 1) + 1 - 2 * rv.weight_min;
    if (via_weight != lb) throw std::logic_error("lower bound forms disagree");
    return lb;
}

long long lower_bound(const Tree& t) { return lower_bound(t, root_view(t)); }

}  // namespace radio
