#include "radio/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "radio/errors.hpp"
#include "radio/rooted_view.hpp"

namespace radio {

bool is_radio_labeling(const Tree& t, const RadioLabeling& labeling) {
    const int n = t.size();
    if (static_cast<int>(labeling.labels.size()) != n)
        throw LengthMismatch("labeling has " + std::to_string(labeling.labels.size()) +
                             " labels for a tree on " + std::to_string(n) + " vertices");
    for (long long f : labeling.labels)
        if (f < 0) return false;
    const long long need = t.diameter() + 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (t.distance(u, v) + std::llabs(labeling.labels[u] - labeling.labels[v]) < need)
                return false;
    return true;
}

Certificate certify(const Tree& t, const RadioLabeling& labeling) {
    if (!is_radio_labeling(t, labeling)) return Certificate::invalid;
    const long long span =
        *std::max_element(labeling.labels.begin(), labeling.labels.end());
    if (t.size() == 1) return span == 0 ? Certificate::proves_rn : Certificate::valid_upper_bound;
    return span == lower_bound(t) ? Certificate::proves_rn : Certificate::valid_upper_bound;
}

namespace {

// Smallest label vertex `v` can take after the placed prefix: one more than
// the previous label, pushed up by the radio constraint against every
// placed vertex.  Because labels are assigned in increasing order, the
// constraints against unplaced vertices never look back.
long long next_label(const Tree& t, const std::vector<int>& placed,
                     const std::vector<long long>& labels, long long last, int v) {
    const long long need = t.diameter() + 1;
    long long f = last + 1;
    for (int u : placed) f = std::max(f, labels[u] + need - t.distance(u, v));
    return f;
}

// Greedy minimal labels along a fixed vertex order; always a valid radio
// labeling, used to seed the search with a finite upper bound.
RadioLabeling greedy_labels(const Tree& t, const std::vector<int>& order) {
    const int n = t.size();
    RadioLabeling lab;
    lab.labels.assign(n, 0);
    std::vector<int> placed;
    placed.reserve(n);
    long long last = -1;
    for (int v : order) {
        const long long f = placed.empty() ? 0 : next_label(t, placed, lab.labels, last, v);
        lab.labels[v] = f;
        lab.span = std::max(lab.span, f);
        placed.push_back(v);
        last = f;
    }
    return lab;
}

struct Shared {
    std::atomic<long long> best;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::uint64_t budget;
    long long floor;  // the spanning lower bound; no labeling can beat it
    std::mutex witness_mutex;
    RadioLabeling witness;

    void offer(long long span, const std::vector<long long>& labels) {
        long long cur = best.load();
        while (span < cur && !best.compare_exchange_weak(cur, span)) {
        }
        if (span <= best.load()) {
            std::lock_guard<std::mutex> lock(witness_mutex);
            if (span <= best.load()) {
                witness.labels = labels;
                witness.span = span;
            }
        }
        if (span == floor) stop.store(true);  // optimal: meets the lower bound
    }
};

struct Solver {
    const Tree& t;
    Shared& shared;
    long long min_gap;  // sound lower bound on the gap between consecutive labels

    std::vector<int> placed;
    std::vector<long long> labels;
    std::vector<char> used;

    Solver(const Tree& t_, Shared& shared_, long long min_gap_)
        : t(t_), shared(shared_), min_gap(min_gap_) {
        labels.assign(t.size(), 0);
        used.assign(t.size(), 0);
        placed.reserve(t.size());
    }

    void dfs(long long last) {
        if (shared.stop.load(std::memory_order_relaxed)) return;
        const int n = t.size();
        const int remaining = n - static_cast<int>(placed.size());
        if (remaining == 0) {
            shared.offer(last, labels);
            return;
        }
        if (shared.nodes.fetch_add(1) >= shared.budget) {
            shared.budget_hit.store(true);
            shared.stop.store(true);
            return;
        }

        // Candidates sorted by their minimal feasible label so promising
        // branches are explored first.
        std::vector<std::pair<long long, int>> cands;
        cands.reserve(remaining);
        const long long best = shared.best.load(std::memory_order_relaxed);
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            const long long f = next_label(t, placed, labels, last, v);
            if (f + static_cast<long long>(remaining - 1) * min_gap >= best)
                continue;  // cannot beat the incumbent
            cands.emplace_back(f, v);
        }
        std::sort(cands.begin(), cands.end());
        for (auto [f, v] : cands) {
            if (shared.stop.load(std::memory_order_relaxed)) return;
            if (f + static_cast<long long>(remaining - 1) * min_gap >=
                shared.best.load(std::memory_order_relaxed))
                continue;
            labels[v] = f;
            used[v] = 1;
            placed.push_back(v);
            dfs(f);
            placed.pop_back();
            used[v] = 0;
        }
    }
};

}  // namespace

SolveResult exact_rn(const Tree& t, std::uint64_t node_budget, int workers, bool strong_bound) {
    const int n = t.size();
    SolveResult res;
    if (n == 1) {
        res.rn = 0;
        res.witness.labels = {0};
        res.witness.span = 0;
        res.witness.certified_optimal = true;
        return res;
    }

    const RootedView rv = root_view(t);
    const long long lb = lower_bound(t, rv);

    Shared shared;
    shared.budget = node_budget == 0 ? std::numeric_limits<std::uint64_t>::max() : node_budget;
    shared.floor = lb;
    shared.best.store(std::numeric_limits<long long>::max());

    // Seed with a complete labeling so a budget-exhausted run still returns
    // a valid upper bound and witness.
    {
        std::vector<int> identity(n);
        for (int v = 0; v < n; ++v) identity[v] = v;
        RadioLabeling seed = greedy_labels(t, identity);
        shared.offer(seed.span, seed.labels);
    }

    // Cheap attempt at a certificate: an order passing the tight-labeling
    // conditions gives a valid labeling at the lower bound, which both
    // seeds and immediately closes the search.
    if (!shared.stop.load()) {
        const std::uint64_t probe = std::min<std::uint64_t>(shared.budget, 100'000);
        FindOrderResult found = find_lb_order(t, rv, /*exhaustive=*/false, probe);
        if (found.order) {
            RadioLabeling lab = labels_from_order(t, rv, *found.order);
            if (is_radio_labeling(t, lab)) shared.offer(lab.span, lab.labels);
        }
    }

    long long min_gap = 1;
    if (strong_bound) {
        // Any two vertices are within 2*max_level + 1 - eps of each other,
        // so consecutive labels differ by at least diam+1 minus that.
        const long long max_level = *std::max_element(rv.level.begin(), rv.level.end());
        min_gap = std::max<long long>(1, t.diameter() + rv.epsilon - 2 * max_level);
    }

    if (!shared.stop.load()) {
        workers = std::max(1, workers);
        auto run_worker = [&](int worker_id) {
            Solver solver(t, shared, min_gap);
            for (int v = worker_id; v < n; v += workers) {
                if (shared.stop.load()) break;
                solver.labels[v] = 0;
                solver.used[v] = 1;
                solver.placed.push_back(v);
                solver.dfs(0);
                solver.placed.pop_back();
                solver.used[v] = 0;
            }
        };
        if (workers == 1) {
            run_worker(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
            for (auto& th : pool) th.join();
        }
    }

    res.rn = shared.best.load();
    res.witness = shared.witness;
    res.nodes_explored = shared.nodes.load();
    // A result meeting the lower bound is exact no matter how the search
    // ended; otherwise an exhausted budget leaves only an upper bound.
    res.status = (shared.budget_hit.load() && res.rn != lb)
                     ? SolveResult::Status::budget_exhausted
                     : SolveResult::Status::exact;
    res.witness.certified_optimal = res.rn == lb;
    return res;
}

const char* certificate_name(Certificate c) {
    switch (c) {
        case Certificate::proves_rn: return "proves-rn";
        case Certificate::valid_upper_bound: return "valid-upper-bound";
        case Certificate::invalid: return "invalid";
    }
    return "unknown";
}

const char* solve_status_name(SolveResult::Status s) {
    switch (s) {
        case SolveResult::Status::exact: return "exact";
        case SolveResult::Status::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

}  // namespace radio
