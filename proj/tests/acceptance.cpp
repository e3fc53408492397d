// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Each criterion returns an empty string on success or a short diagnosis.

#include <algorithm>
#include <array>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "radio/compose.hpp"
#include "radio/families.hpp"
#include "radio/labeling.hpp"
#include "radio/oracle.hpp"
#include "radio/rooted_view.hpp"
#include "radio/tree.hpp"
#include "support/enumerate.hpp"
#include "support/naive.hpp"

using radio::FamilyKind;
using radio::FamilySpec;
using radio::LinearOrder;
using radio::Tree;

namespace {

FamilySpec fpath(int n) { return {.kind = FamilyKind::path, .n = n}; }
FamilySpec fstar(int k) { return {.kind = FamilyKind::star, .k = k}; }
FamilySpec fdstar(int k) { return {.kind = FamilyKind::double_star, .k = k}; }
FamilySpec fmary(int h, int m) { return {.kind = FamilyKind::complete_mary, .h = h, .m = m}; }
FamilySpec fbanana(int m, int k) { return {.kind = FamilyKind::banana, .k = k, .m = m}; }
FamilySpec ffire(int m, int k) { return {.kind = FamilyKind::firecracker, .k = k, .m = m}; }
FamilySpec fcat(int m, int k) { return {.kind = FamilyKind::caterpillar, .k = k, .m = m}; }
FamilySpec flevel(int roots, std::vector<int> deg) {
    return {.kind = roots == 1 ? FamilyKind::levelwise_regular_1root
                               : FamilyKind::levelwise_regular_2root,
            .degrees = std::move(deg)};
}

std::string describe(const FamilySpec& s) {
    std::ostringstream os;
    os << radio::family_kind_name(s.kind) << "(n=" << s.n << ",k=" << s.k << ",h=" << s.h
       << ",m=" << s.m;
    if (!s.degrees.empty()) {
        os << ",degrees=";
        for (int d : s.degrees) os << d << ".";
    }
    os << ")";
    return os.str();
}

// The composition formulas count one label step for the base's center even
// when the base is the single vertex, so that degenerate base contributes
// the value 1 rather than its radio number 0.
long long base_step_value(const Tree& base) {
    if (base.size() == 1) return 1;
    return radio::exact_rn(base).rn;
}

// ---------------------------------------------------------------- criteria

std::string families_meet_bound() {
    std::vector<FamilySpec> grid;
    for (int k = 2; k <= 10; ++k) grid.push_back(fpath(2 * k));
    for (auto [h, m] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {2, 4}, {3, 3}})
        grid.push_back(fmary(h, m));
    for (int m = 2; m <= 5; ++m)
        for (int k = 3; k <= 6; ++k) grid.push_back(fbanana(m, k));
    for (int m = 2; m <= 5; ++m)
        for (int k = 3; k <= 6; ++k) grid.push_back(ffire(m, k));
    for (int m = 2; m <= 5; ++m)
        for (int k = 3; k <= 5; ++k) grid.push_back(fcat(2 * m, k));
    for (int roots : {1, 2})
        for (int h = 1; h <= 3; ++h)
            for (int mask = 0; mask < (1 << h); ++mask) {
                std::vector<int> deg;
                for (int i = 0; i < h; ++i) deg.push_back((mask >> i) & 1 ? 4 : 3);
                grid.push_back(flevel(roots, std::move(deg)));
            }

    for (const auto& spec : grid) {
        const auto rn = radio::known_rn(spec);
        if (!rn) return describe(spec) + " has no closed form";
        const long long lb = radio::lower_bound(radio::generate(spec));
        if (lb != *rn)
            return describe(spec) + ": closed form " + std::to_string(*rn) +
                   " != spanning bound " + std::to_string(lb);
    }
    return {};
}

std::string solver_confirms_small_trees(std::string& note) {
    const auto expect = [&](const FamilySpec& spec, long long want) -> std::string {
        const auto res = radio::exact_rn(radio::generate(spec));
        if (res.rn != want)
            return describe(spec) + ": solver says " + std::to_string(res.rn) + ", expected " +
                   std::to_string(want);
        return {};
    };
    if (auto e = expect(fpath(4), 5); !e.empty()) return e;
    if (auto e = expect(fpath(6), 13); !e.empty()) return e;
    for (int k = 2; k <= 5; ++k)
        if (auto e = expect(fstar(k), k + 1); !e.empty()) return e;
    for (int k = 1; k <= 3; ++k) {
        const Tree t = radio::generate(fdstar(k));
        if (auto e = expect(fdstar(k), radio::lower_bound(t)); !e.empty()) return e;
    }

    // Odd paths must exceed the bound; their values are recorded from the
    // solver and double-checked against the unpruned reference.
    std::ostringstream odd;
    for (int n : {5, 7}) {
        const Tree t = radio::generate(fpath(n));
        const auto res = radio::exact_rn(t);
        const long long ref = testsupport::reference_rn(t);
        if (res.rn != ref)
            return "path n=" + std::to_string(n) + ": solver " + std::to_string(res.rn) +
                   " != reference " + std::to_string(ref);
        if (res.rn <= radio::lower_bound(t))
            return "path n=" + std::to_string(n) + " does not exceed its bound";
        odd << " rn(P" << n << ")=" << res.rn;
    }
    note = odd.str();
    return {};
}

std::string merged_composites_reach_prediction(std::string& note) {
    // Component pool: every one-center catalog instance with at most eight
    // vertices whose exact radio number meets the spanning bound, i.e. the
    // stars S_2..S_7. The only other one-center candidate of that size --
    // two 3-leaf stars joined through a fresh shared root -- is the
    // seven-vertex path in disguise; its exact radio number exceeds the
    // bound (verified below), so it can never supply a tight component
    // order and is excluded from the pool.
    {
        Tree degenerate = radio::generate(fbanana(2, 3));
        const auto res = radio::exact_rn(degenerate);
        if (res.status != radio::SolveResult::Status::exact ||
            res.rn <= radio::lower_bound(degenerate))
            return "the excluded 7-vertex candidate unexpectedly meets its bound";
    }
    const std::vector<FamilySpec> pool_specs = {fstar(2), fstar(3), fstar(4),
                                                fstar(5), fstar(6), fstar(7)};
    std::vector<Tree> pool;
    std::vector<LinearOrder> pool_orders;
    std::vector<long long> pool_rns;
    for (const auto& spec : pool_specs) {
        Tree t = radio::generate(spec);
        const auto found = radio::find_lb_order(t, radio::root_view(t));
        if (!found.order) return describe(spec) + ": no tight order found for a pool member";
        pool_orders.push_back(*found.order);
        pool_rns.push_back(*radio::known_rn(spec));
        pool.push_back(std::move(t));
    }

    const int p = static_cast<int>(pool.size());
    std::vector<std::vector<int>> multisets;
    for (int a = 0; a < p; ++a)
        for (int b = a; b < p; ++b) {
            multisets.push_back({a, b});
            for (int c = b; c < p; ++c) {
                multisets.push_back({a, b, c});
                for (int d = c; d < p; ++d) multisets.push_back({a, b, c, d});
            }
        }

    for (const auto& pick : multisets) {
        std::vector<Tree> components;
        std::vector<LinearOrder> orders;
        std::vector<long long> rns;
        for (int i : pick) {
            components.push_back(pool[i]);
            orders.push_back(pool_orders[i]);
            rns.push_back(pool_rns[i]);
        }
        auto [t, spec] = radio::compose_merge(std::move(components));

        std::ostringstream which;
        which << "merge of {";
        for (int i : pick) which << " " << describe(pool_specs[i]);
        which << " }";

        const auto rv = radio::root_view(t);
        const auto ord = radio::order_merge(spec, orders);
        if (!radio::check_order(t, rv, ord).ok()) return which.str() + ": order check fails";
        const auto lab = radio::labels_from_order(t, rv, ord);
        if (!radio::is_radio_labeling(t, lab)) return which.str() + ": labeling invalid";
        const long long predicted = radio::predicted_rn(spec, rns);
        const long long lb = radio::lower_bound(t, rv);
        if (lab.span != predicted || predicted != lb)
            return which.str() + ": span " + std::to_string(lab.span) + ", predicted " +
                   std::to_string(predicted) + ", bound " + std::to_string(lb);
    }
    note = " (" + std::to_string(multisets.size()) + " composites)";
    return {};
}

std::string attached_composites_reach_prediction() {
    const std::vector<std::pair<std::string, Tree>> bases = {
        {"single vertex", radio::build_tree(1, {})},
        {"star k=2", radio::generate(fstar(2))},
        {"star k=3", radio::generate(fstar(3))},
        {"complete h=1 m=3", radio::generate(fmary(1, 3))},
    };

    for (const auto& [name, base] : bases) {
        const auto base_found = radio::find_lb_order(base, radio::root_view(base));
        if (!base_found.order) return name + ": no tight base order";
        const LinearOrder base_order = *base_found.order;
        const long long bv = base_step_value(base);

        for (int k : {3, 4, 5}) {
            auto [t, spec] = radio::compose_star(base, k);
            const auto rv = radio::root_view(t);
            const auto ord = radio::order_star(spec, base_order);
            const std::string which =
                "star composite over " + name + ", k=" + std::to_string(k);
            if (!radio::check_order(t, rv, ord).ok()) return which + ": order check fails";
            const auto lab = radio::labels_from_order(t, rv, ord);
            if (!radio::is_radio_labeling(t, lab)) return which + ": labeling invalid";
            const long long predicted = radio::predicted_rn(spec, {bv});
            const long long lb = radio::lower_bound(t, rv);
            if (lab.span != predicted || predicted != lb)
                return which + ": span " + std::to_string(lab.span) + ", predicted " +
                       std::to_string(predicted) + ", bound " + std::to_string(lb);
        }

        for (int k : {2, 3}) {
            auto [t, spec] = radio::compose_double_star(base, k);
            const auto rv = radio::root_view(t);
            const auto ord = radio::order_double_star(spec, base_order);
            const std::string which =
                "double-star composite over " + name + ", k=" + std::to_string(k);
            if (!radio::check_order(t, rv, ord).ok()) return which + ": order check fails";
            const auto lab = radio::labels_from_order(t, rv, ord);
            if (!radio::is_radio_labeling(t, lab)) return which + ": labeling invalid";
            const long long predicted = radio::predicted_rn(spec, {bv});
            const long long lb = radio::lower_bound(t, rv);
            if (lab.span != predicted || predicted != lb)
                return which + ": span " + std::to_string(lab.span) + ", predicted " +
                       std::to_string(predicted) + ", bound " + std::to_string(lb);
        }
    }

    // Worked instances with independently derived spans.
    {
        const Tree base = radio::generate(fstar(2));
        const LinearOrder id{{0, 1, 2}};
        auto [t, spec] = radio::compose_star(base, 3);
        const auto lab = radio::labels_from_order(t, radio::root_view(t),
                                                  radio::order_star(spec, id));
        if (lab.span != 16)
            return "star composite over star k=2: span " + std::to_string(lab.span) +
                   ", expected 16";
        auto [t2, spec2] = radio::compose_double_star(base, 2);
        const auto lab2 = radio::labels_from_order(t2, radio::root_view(t2),
                                                   radio::order_double_star(spec2, id));
        if (lab2.span != 25)
            return "double-star composite over star k=2: span " + std::to_string(lab2.span) +
                   ", expected 25";
    }
    return {};
}

std::string tightness_iff_order_exists(std::string& note) {
    const std::array<int, 7> expected_counts = {1, 1, 2, 3, 6, 11, 23};
    int tight = 0, loose = 0;
    for (int n = 2; n <= 8; ++n) {
        const auto trees = testsupport::all_trees_up_to_iso(n);
        if (static_cast<int>(trees.size()) != expected_counts[n - 2])
            return "enumeration found " + std::to_string(trees.size()) + " trees on " +
                   std::to_string(n) + " vertices, expected " +
                   std::to_string(expected_counts[n - 2]);
        for (std::size_t i = 0; i < trees.size(); ++i) {
            const Tree& t = trees[i];
            const auto rv = radio::root_view(t);
            const long long lb = radio::lower_bound(t, rv);
            const auto res = radio::exact_rn(t);
            const auto found = radio::find_lb_order(t, rv, /*exhaustive=*/true);
            const std::string which =
                "tree " + std::to_string(i) + " on " + std::to_string(n) + " vertices";
            if (res.status != radio::SolveResult::Status::exact)
                return which + ": solver ran out of budget";
            if (!found.complete) return which + ": order search was not definitive";
            const bool meets = res.rn == lb;
            if (meets != found.order.has_value())
                return which + ": solver says rn" + (meets ? "==" : ">") +
                       "bound but order search " +
                       (found.order ? "succeeded" : "found nothing");
            if (found.order) {
                const auto lab = radio::labels_from_order(t, rv, *found.order);
                if (radio::certify(t, lab) != radio::Certificate::proves_rn)
                    return which + ": constructed labeling does not certify the bound";
                ++tight;
            } else {
                ++loose;
            }
        }
    }
    note = " (" + std::to_string(tight) + " tight, " + std::to_string(loose) + " not)";
    return {};
}

std::string repeated_composition_stays_tight() {
    const Tree s2 = radio::generate(fstar(2));
    auto [base, base_spec] = radio::compose_merge({s2, s2});
    const LinearOrder id{{0, 1, 2}};
    const auto base_order = radio::order_merge(base_spec, {id, id});
    const long long base_rn = radio::predicted_rn(base_spec, {3, 3});

    const auto base_lab = radio::labels_from_order(base, radio::root_view(base), base_order);
    if (base_lab.span != base_rn || base_rn != radio::lower_bound(base))
        return "first-generation merge is not tight";

    auto [t, spec] = radio::compose_star(base, 3);
    const auto rv = radio::root_view(t);
    const auto ord = radio::order_star(spec, base_order);
    if (!radio::check_order(t, rv, ord).ok())
        return "second-generation order fails the check";
    const auto lab = radio::labels_from_order(t, rv, ord);
    if (!radio::is_radio_labeling(t, lab)) return "second-generation labeling invalid";
    const long long predicted = radio::predicted_rn(spec, {base_rn});
    const long long lb = radio::lower_bound(t, rv);
    if (lab.span != predicted || predicted != lb || lab.span != 22)
        return "second generation: span " + std::to_string(lab.span) + ", predicted " +
               std::to_string(predicted) + ", bound " + std::to_string(lb) + ", expected 22";
    return {};
}

std::string bound_forms_agree() {
    std::mt19937_64 rng(20260819);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 29);
        const Tree t = radio::random_tree(n, rng());

        const auto naive = testsupport::naive_weight_centers(t);
        const auto dist = testsupport::naive_distances(t);
        const int eps = naive.centers.size() == 1 ? 1 : 0;
        long long total_level = 0;
        for (int v = 0; v < n; ++v) {
            int lvl = n;
            for (int c : naive.centers) lvl = std::min(lvl, dist[c][v]);
            total_level += lvl;
        }

        const long long d = t.diameter();
        const long long via_levels = (n - 1) * (d + eps) - 2 * total_level + eps;
        const long long via_weight = (n - 1) * (d + 1) + 1 - 2 * naive.weight_min;
        const long long lb = radio::lower_bound(t);

        if (via_levels != via_weight || lb != via_levels)
            return "trial " + std::to_string(trial) + " (n=" + std::to_string(n) +
                   "): level form " + std::to_string(via_levels) + ", weight form " +
                   std::to_string(via_weight) + ", library " + std::to_string(lb);

        // The identity behind the equivalence: the minimum weight equals the
        // level sum, plus n/2 in the two-center case.
        const long long want_w = total_level + (eps == 0 ? n / 2 : 0);
        if (naive.weight_min != want_w)
            return "trial " + std::to_string(trial) + ": weight " +
                   std::to_string(naive.weight_min) + " != level sum relation " +
                   std::to_string(want_w);
    }
    return {};
}

std::string order_check_matches_direct_scan() {
    std::mt19937_64 rng(8191508);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Tree t = radio::random_tree(n, rng());
        const auto rv = radio::root_view(t);

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        const auto rep = radio::check_order(t, rv, LinearOrder{perm});
        const auto naive = testsupport::naive_separation_check(t, rv.level, rv.epsilon, perm);
        if (rep.condition_b != naive.ok)
            return "trial " + std::to_string(trial) + ": prefix check says " +
                   (rep.condition_b ? "pass" : "fail") + ", direct scan says " +
                   (naive.ok ? "pass" : "fail");
        if (!naive.ok &&
            (rep.i != naive.i || rep.j != naive.j || rep.lhs != naive.lhs ||
             rep.rhs != naive.rhs))
            return "trial " + std::to_string(trial) + ": different first violation (" +
                   std::to_string(rep.i) + "," + std::to_string(rep.j) + ") vs (" +
                   std::to_string(naive.i) + "," + std::to_string(naive.j) + ")";
    }
    return {};
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<std::string(std::string&)> run;
    };

    const auto plain = [](std::string (*fn)()) {
        return [fn](std::string&) { return fn(); };
    };

    const std::vector<Criterion> criteria = {
        {"closed-form family values equal the spanning bound", plain(families_meet_bound)},
        {"exact solver confirms the small named trees", solver_confirms_small_trees},
        {"center-merged composites reach the predicted span",
         merged_composites_reach_prediction},
        {"star/double-star composites reach the predicted span",
         plain(attached_composites_reach_prediction)},
        {"bound tightness coincides with order-search success on all trees up to n=8",
         tightness_iff_order_exists},
        {"composition repeated on a composite stays tight",
         plain(repeated_composition_stays_tight)},
        {"level and weight forms of the bound agree on 1000 random trees",
         plain(bound_forms_agree)},
        {"prefix-sum order check matches the direct scan on 1000 random orders",
         plain(order_check_matches_direct_scan)},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string note;
        std::string problem;
        try {
            problem = criteria[i].run(note);
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        const bool ok = problem.empty();
        failures += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": "
                  << criteria[i].name << note;
        if (!ok) std::cout << "  [" << problem << "]";
        std::cout << "\n";
    }
    if (failures > 0) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
