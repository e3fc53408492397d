#pragma once

#include <utility>
#include <vector>

namespace radio {

// An unrooted tree on vertices 0..n-1 with a precomputed all-pairs distance
// table.  Construction validates that the edge list forms a tree; every
// query after that is cheap.  The dense n*n table makes distance lookups
// O(1) at the cost of quadratic memory, which is fine at the scales this
// library targets (a few thousand vertices).
class Tree {
public:
    Tree(int n, std::vector<std::pair<int, int>> edges);

    int size() const { return n_; }
    int diameter() const { return diam_; }

    int distance(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

    // Edges normalized to (min,max) and sorted; stable across runs.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(int u, int v) const { return distance(u, v) == 1; }

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    int diam_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> dist_;  // flattened n*n
};

// Validates and builds: edges must be exactly n-1 distinct edges on
// 0..n-1 with no self-loops, forming a connected graph.
Tree build_tree(int n, std::vector<std::pair<int, int>> edges);

// Sum of distances from v to every vertex.
long long vertex_weight(const Tree& t, int v);

}  // namespace radio
