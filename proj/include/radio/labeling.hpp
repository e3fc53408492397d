#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radio/compose.hpp"
#include "radio/rooted_view.hpp"
#include "radio/tree.hpp"

namespace radio {

// A linear order of all vertices: seq[i] is the vertex in position i.
struct LinearOrder {
    std::vector<int> seq;
    friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
};

// labels[v] is the label of vertex v; span is the largest label.
// certified_optimal is set when the labeling provably attains the spanning
// lower bound of its tree.
struct RadioLabeling {
    std::vector<long long> labels;
    long long span = 0;
    bool certified_optimal = false;
    friend bool operator==(const RadioLabeling&, const RadioLabeling&) = default;
};

// Verdict of the order test behind the tight-labeling construction.
// Condition A pins the endpoints to the center(s); condition B is the
// separation inequality over every pair of positions:
//   d(u_i,u_j) >= sum_{t=i}^{j-1}(L(u_t)+L(u_{t+1})) - (j-i)(diam+eps) + diam+1.
struct OrderCheckReport {
    bool condition_a = false;
    bool condition_b = false;
    // First violating pair when condition_b fails: positions, the distance
    // on the left of the inequality and the required right-hand side.
    int i = -1;
    int j = -1;
    long long lhs = 0;
    long long rhs = 0;

    bool ok() const { return condition_a && condition_b; }
};

OrderCheckReport check_order(const Tree& t, const RootedView& rv, const LinearOrder& ord);

// Labels along an order by the fixed recurrence
//   f(u_0) = 0,  f(u_{i+1}) = f(u_i) + (diam+eps) - L(u_i) - L(u_{i+1}).
// Throws NegativeLabel if the recurrence dips below zero, which only
// happens when the order badly violates the separation inequality.
RadioLabeling labels_from_order(const Tree& t, const RootedView& rv, const LinearOrder& ord);

// Orders for the three compositions, merged from orders of the components.
// Each input order must pass check_order on its own component.
LinearOrder order_merge(const CompositeSpec& spec, const std::vector<LinearOrder>& component_orders);
LinearOrder order_star(const CompositeSpec& spec, const LinearOrder& base_order);
LinearOrder order_double_star(const CompositeSpec& spec, const LinearOrder& base_order);

// Backtracking search for an order passing check_order.  When `exhaustive`
// is set and the search space is exhausted within the node budget, an empty
// result is a proof that no such order exists (the tree's radio number
// exceeds the lower bound).  budget 0 means unlimited in exhaustive mode
// and a default cap otherwise.
struct FindOrderResult {
    std::optional<LinearOrder> order;
    bool complete = false;  // search answered definitively (found, or space exhausted)
    std::uint64_t nodes = 0;
};

FindOrderResult find_lb_order(const Tree& t, const RootedView& rv, bool exhaustive = true,
                              std::uint64_t node_budget = 0);

}  // namespace radio
