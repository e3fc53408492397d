#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radio/tree.hpp"

namespace radio {

enum class FamilyKind {
    path,                      // P_n
    star,                      // S_k: center plus k leaves
    double_star,               // D_k: two adjacent centers, k leaves each
    complete_mary,             // height h, every internal vertex has m children
    levelwise_regular_1root,   // degree m_i at distance i from the root
    levelwise_regular_2root,   // same with two adjacent roots
    banana,                    // m stars on k vertices, one leaf each tied to a new root
    firecracker,               // m stars on k vertices, one leaf each merged into a path
    caterpillar,               // spine of m-2 vertices, every spine vertex of degree k
};

struct FamilySpec {
    FamilyKind kind;
    int n = 0;                 // path
    int k = 0;                 // star, double_star, banana, firecracker, caterpillar
    int h = 0;                 // complete_mary
    int m = 0;                 // complete_mary, banana, firecracker, caterpillar
    std::vector<int> degrees;  // levelwise_regular_*: m_0..m_{h-1}
};

// Deterministic construction: ids are assigned in breadth-first order from
// the root(s) or along the spine, so the same spec always yields the same
// edge list.
Tree generate(const FamilySpec& spec);

// Closed-form catalog value for the family and parameters; empty when no
// closed form is covered (odd paths, binary complete trees, level-wise
// regular trees with a degree below 3, odd caterpillars). The value always
// equals the spanning lower bound of the generated tree. For most covered
// parameters that bound is attained, so the value is the exact radio
// number; the known exceptions are banana trees with m = 2 and
// firecrackers with m = 2, k >= 4, where the exact radio number is
// strictly larger (see the oracle regression tests for recorded values).
std::optional<long long> known_rn(const FamilySpec& spec);

const char* family_kind_name(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_name(std::string_view name);

// Uniform random labeled tree, decoded from a random Pruefer sequence.
// Test support and the CLI's random generator; not part of the named
// families above.
Tree random_tree(int n, std::uint64_t seed);

}  // namespace radio
