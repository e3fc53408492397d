#pragma once

#include <utility>
#include <vector>

#include "radio/tree.hpp"

namespace radio {

// Three ways to build a larger tree out of single-center trees:
//   merge_centers - identify the centers of k trees into one vertex
//   star          - put a copy of one base tree at each leaf of a k-star,
//                   merging the base center into the leaf
//   double_star   - same with the 2k leaves of a double star
enum class CompositeKind { merge_centers, star, double_star };

// Records how component vertices map into the composite.  Component index
// kGlue marks the glue vertices that belong to no copy: the merged center,
// the star center, or the two double-star centers.
struct CompositeSpec {
    static constexpr int kGlue = -1;

    struct LayoutEntry {
        int comp;    // component / copy index, or kGlue
        int local;   // vertex id within the component (glue: 0, 1, ...)
        int global;  // vertex id in the composite
        friend bool operator==(const LayoutEntry&, const LayoutEntry&) = default;
    };

    CompositeKind kind;
    int k = 0;                     // number of merged trees / star leaves / leaf pairs
    std::vector<Tree> components;  // k trees for merge_centers, the single base otherwise
    std::vector<LayoutEntry> layout;
    int composite_n = 0;
    int composite_diam = 0;

    // Composite id of a component vertex; glue vertices use comp = kGlue.
    int global_id(int comp, int local) const;

    friend bool operator==(const CompositeSpec&, const CompositeSpec&) = default;
};

// Identify the weight centers of two or more single-center trees into one
// vertex.  Composite ids: 0 is the merged center, then each component's
// remaining vertices in BFS order from its center.
std::pair<Tree, CompositeSpec> compose_merge(std::vector<Tree> components);

// Attach a copy of `base` (single-center, k >= 3 copies) to each leaf of a
// k-star by identifying the base center with the leaf.  Composite ids: 0 is
// the star center, then each copy in BFS order from the base center.
std::pair<Tree, CompositeSpec> compose_star(const Tree& base, int k);

// Attach 2k copies of `base` (k >= 2) to the leaves of a double star whose
// centers are composite vertices 0 and 1.  Copies alternate sides: copy s
// (1-based) hangs off center 1 when s is odd and center 0 when s is even.
std::pair<Tree, CompositeSpec> compose_double_star(const Tree& base, int k);

// Radio number the construction is designed to reach, given the radio
// numbers of the components.  Uses the composite's own diameter.
long long predicted_rn(const CompositeSpec& spec, const std::vector<long long>& component_rns);

const char* composite_kind_name(CompositeKind kind);

}  // namespace radio
