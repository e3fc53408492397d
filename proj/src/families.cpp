#include "radio/families.hpp"

#include <random>
#include <set>
#include <string>

#include "radio/errors.hpp"
#include "radio/rooted_view.hpp"

namespace radio {

namespace {

using Edges = std::vector<std::pair<int, int>>;

Tree gen_path(int n) {
    if (n < 1) throw BadParams("path needs n >= 1");
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_tree(n, std::move(e));
}

Tree gen_star(int k) {
    if (k < 2) throw BadParams("star needs k >= 2 leaves");
    Edges e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return build_tree(k + 1, std::move(e));
}

Tree gen_double_star(int k) {
    if (k < 1) throw BadParams("double star needs k >= 1 leaves per center");
    Edges e;
    e.emplace_back(0, 1);
    for (int i = 0; i < k; ++i) e.emplace_back(0, 2 + i);
    for (int i = 0; i < k; ++i) e.emplace_back(1, 2 + k + i);
    return build_tree(2 * k + 2, std::move(e));
}

// Grows a tree level by level: queue `frontier` holds the current depth's
// vertices, each one gets `children(depth, vertex)` fresh children.
Tree grow_levels(int height, int roots, const std::vector<int>& children_per_level) {
    Edges e;
    int next = roots;
    std::vector<int> frontier;
    for (int r = 0; r < roots; ++r) frontier.push_back(r);
    if (roots == 2) e.emplace_back(0, 1);
    for (int depth = 0; depth < height; ++depth) {
        std::vector<int> nxt;
        for (int u : frontier)
            for (int c = 0; c < children_per_level[depth]; ++c) {
                e.emplace_back(u, next);
                nxt.push_back(next++);
            }
        frontier = std::move(nxt);
    }
    return build_tree(next, std::move(e));
}

Tree gen_complete_mary(int h, int m) {
    if (h < 1 || m < 2) throw BadParams("complete m-ary tree needs h >= 1 and m >= 2");
    std::vector<int> kids(h, m);
    return grow_levels(h, 1, kids);
}

Tree gen_levelwise(const std::vector<int>& degrees, int roots) {
    const int h = static_cast<int>(degrees.size());
    if (h < 1) throw BadParams("level-wise regular tree needs at least one degree");
    for (int d : degrees)
        if (d < 1) throw BadParams("level-wise degrees must be >= 1");
    for (int i = 1; i < h; ++i)
        if (degrees[i] < 2)
            throw BadParams("level-wise degrees below the root must be >= 2 so that leaves "
                            "sit exactly at the stated height");
    std::vector<int> kids(h);
    kids[0] = roots == 1 ? degrees[0] : degrees[0] - 1;
    if (kids[0] < 1) throw BadParams("root degree too small for the stated root count");
    for (int i = 1; i < h; ++i) kids[i] = degrees[i] - 1;
    return grow_levels(h, roots, kids);
}

Tree gen_banana(int m, int k) {
    if (m < 2 || k < 3) throw BadParams("banana tree needs m >= 2 copies and k >= 3");
    // Root 0; depth 1: the joined leaves; depth 2: the star centers;
    // depth 3: the remaining k-2 leaves of each star.
    Edges e;
    for (int i = 0; i < m; ++i) e.emplace_back(0, 1 + i);
    for (int i = 0; i < m; ++i) e.emplace_back(1 + i, 1 + m + i);
    int next = 1 + 2 * m;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k - 2; ++j) e.emplace_back(1 + m + i, next++);
    return build_tree(next, std::move(e));
}

Tree gen_firecracker(int m, int k) {
    if (m < 2 || k < 3) throw BadParams("firecracker needs m >= 2 copies and k >= 3");
    // Path 0..m-1; the i-th path vertex doubles as a leaf of the i-th star,
    // whose center is m+i; the center's other k-2 leaves follow.
    Edges e;
    for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
    for (int i = 0; i < m; ++i) e.emplace_back(i, m + i);
    int next = 2 * m;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k - 2; ++j) e.emplace_back(m + i, next++);
    return build_tree(next, std::move(e));
}

Tree gen_caterpillar(int m, int k) {
    if (m < 3 || k < 3) throw BadParams("caterpillar needs m >= 3 and k >= 3");
    // Spine of m-2 vertices, each of degree exactly k: interior spine
    // vertices carry k-2 leaves, the two ends carry k-1 (a single spine
    // vertex carries all k).  Diameter comes out at m-1, matching P_m.
    const int sp = m - 2;
    Edges e;
    for (int i = 0; i + 1 < sp; ++i) e.emplace_back(i, i + 1);
    int next = sp;
    for (int i = 0; i < sp; ++i) {
        int spine_deg = (i > 0 ? 1 : 0) + (i + 1 < sp ? 1 : 0);
        for (int j = 0; j < k - spine_deg; ++j) e.emplace_back(i, next++);
    }
    return build_tree(next, std::move(e));
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

Tree generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::path: return gen_path(spec.n);
        case FamilyKind::star: return gen_star(spec.k);
        case FamilyKind::double_star: return gen_double_star(spec.k);
        case FamilyKind::complete_mary: return gen_complete_mary(spec.h, spec.m);
        case FamilyKind::levelwise_regular_1root: return gen_levelwise(spec.degrees, 1);
        case FamilyKind::levelwise_regular_2root: return gen_levelwise(spec.degrees, 2);
        case FamilyKind::banana: return gen_banana(spec.m, spec.k);
        case FamilyKind::firecracker: return gen_firecracker(spec.m, spec.k);
        case FamilyKind::caterpillar: return gen_caterpillar(spec.m, spec.k);
    }
    throw BadParams("unknown family kind");
}

std::optional<long long> known_rn(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::path: {
            if (spec.n < 1) throw BadParams("path needs n >= 1");
            if (spec.n % 2 != 0) return std::nullopt;  // odd paths exceed the bound
            const long long k = spec.n / 2;
            return 2 * k * (k - 1) + 1;
        }
        case FamilyKind::star:
            if (spec.k < 2) throw BadParams("star needs k >= 2 leaves");
            return spec.k + 1;
        case FamilyKind::double_star:
            if (spec.k < 1) throw BadParams("double star needs k >= 1 leaves per center");
            return 2LL * spec.k + 3;
        case FamilyKind::complete_mary: {
            if (spec.h < 1 || spec.m < 2)
                throw BadParams("complete m-ary tree needs h >= 1 and m >= 2");
            if (spec.m == 2) return std::nullopt;  // binary trees exceed the bound
            const long long m = spec.m, h = spec.h;
            const long long num = ipow(m, spec.h + 2) + ipow(m, spec.h + 1) - 2 * h * m * m +
                                  (2 * h - 3) * m + 1;
            return num / ((m - 1) * (m - 1));
        }
        case FamilyKind::levelwise_regular_1root:
        case FamilyKind::levelwise_regular_2root: {
            const bool two_roots = spec.kind == FamilyKind::levelwise_regular_2root;
            const int h = static_cast<int>(spec.degrees.size());
            if (h < 1) throw BadParams("level-wise regular tree needs at least one degree");
            for (int d : spec.degrees)
                if (d < 3) return std::nullopt;  // established only for degrees >= 3
            // Count vertices per level and accumulate the level sum the
            // closed forms subtract.
            long long n = two_roots ? 2 : 1;
            long long at = two_roots ? 2 : 1;
            long long level_term = 0;
            for (int i = 1; i <= h; ++i) {
                at *= (i == 1 ? spec.degrees[0] - (two_roots ? 1 : 0) : spec.degrees[i - 1] - 1);
                n += at;
                level_term += static_cast<long long>(i) * at;
            }
            const long long d = two_roots ? 2 * h + 1 : 2 * h;
            if (two_roots) return (n - 1) * d - 2 * level_term;
            return (n - 1) * (d + 1) + 1 - 2 * level_term;
        }
        case FamilyKind::banana:
            if (spec.m < 2 || spec.k < 3)
                throw BadParams("banana tree needs m >= 2 copies and k >= 3");
            return static_cast<long long>(spec.m) * (spec.k + 6) + 1;
        case FamilyKind::firecracker: {
            if (spec.m < 2 || spec.k < 3)
                throw BadParams("firecracker needs m >= 2 copies and k >= 3");
            const long long m = spec.m, k = spec.k;
            const long long eps = root_view(generate(spec)).epsilon;
            return (m * m + eps) * k / 2 + 5 * m - 3;
        }
        case FamilyKind::caterpillar: {
            if (spec.m < 3 || spec.k < 3) throw BadParams("caterpillar needs m >= 3 and k >= 3");
            if (spec.m % 2 != 0) return std::nullopt;  // odd lengths exceed the bound
            const long long half = spec.m / 2;
            return 2 * (half - 1) * (half - 1) * (spec.k - 1) + 2 * half - 1;
        }
    }
    throw BadParams("unknown family kind");
}

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw BadParams("random tree needs n >= 1");
    if (n == 1) return build_tree(1, {});
    if (n == 2) return build_tree(2, {{0, 1}});

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = pick(rng);

    // Standard decode: repeatedly join the smallest leaf to the next code
    // entry.
    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (int x : pruefer) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.insert(x);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return build_tree(n, std::move(edges));
}

const char* family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::path: return "path";
        case FamilyKind::star: return "star";
        case FamilyKind::double_star: return "double_star";
        case FamilyKind::complete_mary: return "complete_mary";
        case FamilyKind::levelwise_regular_1root: return "levelwise_regular_1root";
        case FamilyKind::levelwise_regular_2root: return "levelwise_regular_2root";
        case FamilyKind::banana: return "banana";
        case FamilyKind::firecracker: return "firecracker";
        case FamilyKind::caterpillar: return "caterpillar";
    }
    return "unknown";
}

std::optional<FamilyKind> family_kind_from_name(std::string_view name) {
    for (FamilyKind k :
         {FamilyKind::path, FamilyKind::star, FamilyKind::double_star, FamilyKind::complete_mary,
          FamilyKind::levelwise_regular_1root, FamilyKind::levelwise_regular_2root,
          FamilyKind::banana, FamilyKind::firecracker, FamilyKind::caterpillar})
        if (name == family_kind_name(k)) return k;
    return std::nullopt;
}

}  // namespace radio
