#pragma once

#include <vector>

#include "radio/tree.hpp"

namespace radio {

// A tree rooted at its weight center(s): the vertices minimizing the total
// distance to all others.  Every tree has either one such center or two
// adjacent ones.  Levels are distances to the nearest center, and branches
// group the non-center vertices by the center-neighbor under which they
// hang.
struct RootedView {
    // Sentinel branch id for the center vertices themselves.
    static constexpr int kCenterBranch = -1;

    std::vector<int> centers;   // 1 or 2 vertex ids, ascending
    int epsilon = 0;            // 1 = single center, 0 = two centers
    std::vector<int> level;     // per vertex: distance to nearest center
    long long total_level = 0;  // sum of levels
    long long weight_min = 0;   // min over v of vertex_weight(v)
    std::vector<int> branch;    // per vertex: branch root id, kCenterBranch for centers
    std::vector<int> side;      // per vertex: nearest center id

    bool single_center() const { return epsilon == 1; }
};

RootedView root_view(const Tree& t);

// Relation of two vertices with respect to the rooted view:
//   same           - same branch
//   different      - branches hanging off the same center
//   opposite       - branches hanging off different centers (two-center case)
//   involves_center- at least one vertex is a center
enum class BranchRelation { same, different, opposite, involves_center };

BranchRelation branch_relation(const RootedView& rv, int u, int v);

// Spanning lower bound for the radio number of a tree with n >= 2:
//   (n-1)*(diam+eps) - 2*total_level + eps.
// For diameter-1 trees (the single edge) the same expression is used even
// though the general theory assumes diam >= 2; it evaluates to the correct
// radio number 1 there.
long long lower_bound(const Tree& t, const RootedView& rv);
long long lower_bound(const Tree& t);

}  // namespace radio
