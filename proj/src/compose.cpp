#include "radio/compose.hpp"

#include <algorithm>
#include <string>

#include "radio/errors.hpp"
#include "radio/rooted_view.hpp"

namespace radio {

namespace {

// BFS order from `root`, neighbors visited in ascending id order.
std::vector<int> bfs_order(const Tree& t, int root) {
    std::vector<int> order;
    order.reserve(t.size());
    std::vector<char> seen(t.size(), 0);
    seen[root] = 1;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int v : t.neighbors(order[head]))
            if (!seen[v]) {
                seen[v] = 1;
                order.push_back(v);
            }
    return order;
}

// Weight center of a tree required to have exactly one; reports through
// the exception the caller provides.
template <typename ErrorT>
int single_center_of(const Tree& t, const std::string& role) {
    RootedView rv = root_view(t);
    if (rv.epsilon != 1)
        throw ErrorT(role + " has two weight centers; the construction needs one");
    return rv.centers[0];
}

void sort_layout(std::vector<CompositeSpec::LayoutEntry>& layout) {
    std::sort(layout.begin(), layout.end(), [](const auto& a, const auto& b) {
        if (a.comp != b.comp) return a.comp < b.comp;
        return a.local < b.local;
    });
}

}  // namespace

int CompositeSpec::global_id(int comp, int local) const {
    auto it = std::lower_bound(layout.begin(), layout.end(), std::pair<int, int>{comp, local},
                               [](const LayoutEntry& e, const std::pair<int, int>& key) {
                                   if (e.comp != key.first) return e.comp < key.first;
                                   return e.local < key.second;
                               });
    if (it == layout.end() || it->comp != comp || it->local != local)
        throw VertexOutOfRange("no layout entry for component " + std::to_string(comp) +
                               " vertex " + std::to_string(local));
    return it->global;
}

std::pair<Tree, CompositeSpec> compose_merge(std::vector<Tree> components) {
    if (components.size() < 2)
        throw TooFewComponents("center merge needs at least 2 components, got " +
                               std::to_string(components.size()));

    CompositeSpec spec;
    spec.kind = CompositeKind::merge_centers;
    spec.k = static_cast<int>(components.size());

    std::vector<std::pair<int, int>> edges;
    int next = 1;  // 0 is the merged center
    for (int i = 0; i < spec.k; ++i) {
        const Tree& comp = components[i];
        const int w = single_center_of<TwoCenterComponent>(comp, "component " + std::to_string(i));
        std::vector<int> to_global(comp.size(), -1);
        to_global[w] = 0;
        for (int v : bfs_order(comp, w))
            if (v != w) to_global[v] = next++;
        for (int v = 0; v < comp.size(); ++v)
            spec.layout.push_back({i, v, to_global[v]});
        for (auto [u, v] : comp.edges()) edges.emplace_back(to_global[u], to_global[v]);
    }
    sort_layout(spec.layout);

    Tree composite = build_tree(next, std::move(edges));
    spec.composite_n = composite.size();
    spec.composite_diam = composite.diameter();
    spec.components = std::move(components);
    return {std::move(composite), std::move(spec)};
}

namespace {

// Shared by the star and double-star constructions: lay out `copies` copies
// of `base` after `glue_count` glue vertices and wire copy s's center image
// to glue vertex attach(s).
std::pair<Tree, CompositeSpec> compose_copies(const Tree& base, int copies, int glue_count,
                                              CompositeKind kind, int k,
                                              const std::vector<std::pair<int, int>>& glue_edges,
                                              const std::vector<int>& attach) {
    const int w0 = single_center_of<TwoCenterBase>(base, "base tree");
    const int n0 = base.size();

    CompositeSpec spec;
    spec.kind = kind;
    spec.k = k;
    for (int g = 0; g < glue_count; ++g) spec.layout.push_back({CompositeSpec::kGlue, g, g});

    std::vector<int> rank(n0);
    {
        auto order = bfs_order(base, w0);
        for (int r = 0; r < n0; ++r) rank[order[r]] = r;
    }

    std::vector<std::pair<int, int>> edges = glue_edges;
    for (int s = 0; s < copies; ++s) {
        const int offset = glue_count + s * n0;
        for (int v = 0; v < n0; ++v) spec.layout.push_back({s, v, offset + rank[v]});
        for (auto [u, v] : base.edges()) edges.emplace_back(offset + rank[u], offset + rank[v]);
        edges.emplace_back(attach[s], offset);  // copy center image sits at rank 0
    }
    sort_layout(spec.layout);

    Tree composite = build_tree(glue_count + copies * n0, std::move(edges));
    spec.composite_n = composite.size();
    spec.composite_diam = composite.diameter();
    spec.components.push_back(base);
    return {std::move(composite), std::move(spec)};
}

}  // namespace

std::pair<Tree, CompositeSpec> compose_star(const Tree& base, int k) {
    if (k < 3) throw BadK("star composition needs k >= 3, got " + std::to_string(k));
    std::vector<int> attach(k, 0);  // every copy hangs off the star center
    return compose_copies(base, k, 1, CompositeKind::star, k, {}, attach);
}

std::pair<Tree, CompositeSpec> compose_double_star(const Tree& base, int k) {
    if (k < 2) throw BadK("double-star composition needs k >= 2, got " + std::to_string(k));
    // Copy s (1-based) hangs off center 1 when s is odd, center 0 when even,
    // so consecutive copies sit on opposite sides.
    std::vector<int> attach(2 * k);
    for (int j = 0; j < 2 * k; ++j) attach[j] = (j % 2 == 0) ? 1 : 0;
    return compose_copies(base, 2 * k, 2, CompositeKind::double_star, k, {{0, 1}}, attach);
}

long long predicted_rn(const CompositeSpec& spec, const std::vector<long long>& component_rns) {
    const long long d = spec.composite_diam;
    switch (spec.kind) {
        case CompositeKind::merge_centers: {
            if (component_rns.size() != spec.components.size())
                throw ArityMismatch("need one radio number per component: have " +
                                    std::to_string(component_rns.size()) + " for " +
                                    std::to_string(spec.components.size()));
            long long total = 0;
            for (std::size_t i = 0; i < spec.components.size(); ++i) {
                const long long ni = spec.components[i].size();
                const long long di = spec.components[i].diameter();
                total += component_rns[i] + (ni - 1) * (d - di);
            }
            return total - spec.k + 1;
        }
        case CompositeKind::star: {
            if (component_rns.size() != 1)
                throw ArityMismatch("star composition takes exactly one base radio number");
            const long long n0 = spec.components[0].size();
            const long long d0 = spec.components[0].diameter();
            return spec.k * (component_rns[0] + n0 * (d - d0 - 2) + d0) + 1;
        }
        case CompositeKind::double_star: {
            if (component_rns.size() != 1)
                throw ArityMismatch("double-star composition takes exactly one base radio number");
            const long long n0 = spec.components[0].size();
            const long long d0 = spec.components[0].diameter();
            return 2 * spec.k * (component_rns[0] + n0 * (d - d0 - 3) + d0) + d;
        }
    }
    throw ArityMismatch("unknown composite kind");
}

const char* composite_kind_name(CompositeKind kind) {
    switch (kind) {
        case CompositeKind::merge_centers: return "wk";
        case CompositeKind::star: return "sk";
        case CompositeKind::double_star: return "dk";
    }
    return "unknown";
}

}  // namespace radio
