#include "radio/tree.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "radio/errors.hpp"

namespace radio {

Tree::Tree(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1) throw NotATree("vertex count must be at least 1, got " + std::to_string(n));

    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRange("edge endpoint out of range: (" + std::to_string(u) + "," +
                                   std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw NotATree("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw DuplicateEdge("duplicate edge (" + std::to_string(edges[i].first) + "," +
                                std::to_string(edges[i].second) + ")");
    if (static_cast<int>(edges.size()) != n - 1)
        throw NotATree("a tree on " + std::to_string(n) + " vertices needs " +
                       std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
    edges_ = std::move(edges);

    adj_.assign(n, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    // BFS from every vertex fills the distance table and proves connectivity
    // (n-1 edges + connected == tree).
    dist_.assign(static_cast<std::size_t>(n) * n, -1);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        int* d = dist_.data() + static_cast<std::size_t>(s) * n;
        int head = 0, tail = 0;
        d[s] = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (int v : adj_[u])
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    queue[tail++] = v;
                }
        }
        if (tail != n) throw NotATree("graph is not connected");
        diam_ = std::max(diam_, *std::max_element(d, d + n));
    }
}

Tree build_tree(int n, std::vector<std::pair<int, int>> edges) {
    return Tree(n, std::move(edges));
}

long long vertex_weight(const Tree& t, int v) {
    if (v < 0 || v >= t.size())
        throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range, n=" +
                               std::to_string(t.size()));
    long long w = 0;
    for (int u = 0; u < t.size(); ++u) w += t.distance(v, u);
    return w;
}

}  // namespace radio
