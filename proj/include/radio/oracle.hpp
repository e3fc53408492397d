#pragma once

#include <cstdint>
#include <vector>

#include "radio/labeling.hpp"
#include "radio/tree.hpp"

namespace radio {

// True when the labels satisfy the radio condition
//   d(u,v) + |f(u)-f(v)| >= diam+1  for every pair of distinct vertices
// and all labels are non-negative.
bool is_radio_labeling(const Tree& t, const RadioLabeling& labeling);

enum class Certificate { proves_rn, valid_upper_bound, invalid };

// Classifies a labeling: invalid, a valid labeling whose span may exceed
// the radio number, or a valid labeling whose span meets the spanning lower
// bound and therefore equals the radio number.
Certificate certify(const Tree& t, const RadioLabeling& labeling);

struct SolveResult {
    enum class Status { exact, budget_exhausted };

    long long rn = 0;        // exact radio number, or best upper bound found
    RadioLabeling witness;   // valid labeling attaining rn
    std::uint64_t nodes_explored = 0;
    Status status = Status::exact;
};

// Exact radio number by branch and bound over label orders: vertices are
// placed in increasing label order, each getting the smallest feasible
// label.  Intended for small trees (roughly n <= 10).  `workers` > 1
// splits the choice of the label-0 vertex across threads; the result value
// is the same, node counts may differ run to run.  `strong_bound` turns on
// a sharper per-step gap bound derived from vertex levels.
SolveResult exact_rn(const Tree& t, std::uint64_t node_budget = 50'000'000, int workers = 1,
                     bool strong_bound = false);

const char* certificate_name(Certificate c);
const char* solve_status_name(SolveResult::Status s);

}  // namespace radio
