#include "gwgames/monte_carlo.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include "gwgames/rng.hpp"

namespace gwg {

namespace {

struct LazyContext {
    const OffspringDistribution& dist;
    SplitMix64 rng;
    int cutoff;
    std::uint64_t budget;
    std::uint64_t used = 0;
};

void charge(LazyContext& ctx) {
    if (++ctx.used > ctx.budget)
        throw TreeBudgetExceeded("lazy solve exceeded node budget " + std::to_string(ctx.budget));
}

// 3-valued normal/misere status without win indices. Children are sampled on
// first touch and evaluation stops at the first prev_win child; unexplored
// siblings are independent subtrees, so pruning does not bias the status.
NodeState lazy_two_player(LazyContext& ctx, int depth, NodeState leaf_state) {
    if (depth == ctx.cutoff) return NodeState::undecided;
    charge(ctx);
    const std::uint64_t k = ctx.dist.sample_count(ctx.rng);
    if (k == 0) return leaf_state;
    bool any_undecided = false;
    for (std::uint64_t i = 0; i < k; ++i) {
        const NodeState s = lazy_two_player(ctx, depth + 1, leaf_state);
        if (s == NodeState::prev_win) return NodeState::next_win;
        if (s == NodeState::undecided) any_undecided = true;
    }
    return any_undecided ? NodeState::undecided : NodeState::prev_win;
}

// Escape status; boundary nodes are escaper wins, so the result is 2-valued.
NodeState lazy_escape(LazyContext& ctx, int depth, bool stopper_to_move) {
    if (depth == ctx.cutoff) return NodeState::escaper_win;
    charge(ctx);
    const std::uint64_t k = ctx.dist.sample_count(ctx.rng);
    if (k == 0) return NodeState::stopper_win;
    if (stopper_to_move) {
        for (std::uint64_t i = 0; i < k; ++i)
            if (lazy_escape(ctx, depth + 1, false) == NodeState::stopper_win)
                return NodeState::stopper_win;
        return NodeState::escaper_win;
    }
    for (std::uint64_t i = 0; i < k; ++i)
        if (lazy_escape(ctx, depth + 1, true) == NodeState::escaper_win)
            return NodeState::escaper_win;
    return NodeState::stopper_win;
}

struct Accum {
    std::uint64_t explored = 0;
    std::size_t n_next = 0, n_prev = 0, n_undecided = 0;
    std::size_t s1_wins = 0, s2_wins = 0, escape_samples = 0;
    std::size_t skipped = 0;
    std::vector<std::uint64_t> t_hist;
    double t_sum = 0.0, t_sumsq = 0.0;
    std::size_t t_count = 0;
    std::vector<std::uint64_t> tstar_hist;
    double tstar_sum = 0.0, tstar_sumsq = 0.0;
    std::size_t tstar_count = 0, tstar_censored = 0;

    void merge(const Accum& o) {
        explored += o.explored;
        n_next += o.n_next;
        n_prev += o.n_prev;
        n_undecided += o.n_undecided;
        s1_wins += o.s1_wins;
        s2_wins += o.s2_wins;
        escape_samples += o.escape_samples;
        skipped += o.skipped;
        if (t_hist.size() < o.t_hist.size()) t_hist.resize(o.t_hist.size(), 0);
        for (std::size_t i = 0; i < o.t_hist.size(); ++i) t_hist[i] += o.t_hist[i];
        t_sum += o.t_sum;
        t_sumsq += o.t_sumsq;
        t_count += o.t_count;
        if (tstar_hist.size() < o.tstar_hist.size()) tstar_hist.resize(o.tstar_hist.size(), 0);
        for (std::size_t i = 0; i < o.tstar_hist.size(); ++i) tstar_hist[i] += o.tstar_hist[i];
        tstar_sum += o.tstar_sum;
        tstar_sumsq += o.tstar_sumsq;
        tstar_count += o.tstar_count;
        tstar_censored += o.tstar_censored;
    }
};

void run_sample_statuses(const OffspringDistribution& dist, Game game, int cutoff,
                         std::uint64_t sample_seed, std::uint64_t budget, Accum& acc) {
    if (game == Game::escape) {
        // one stream per parity; both must land before the sample counts
        LazyContext c1{dist, SplitMix64(stream_seed(sample_seed, 0)), cutoff, budget};
        LazyContext c2{dist, SplitMix64(stream_seed(sample_seed, 1)), cutoff, budget};
        bool s1, s2;
        try {
            s1 = lazy_escape(c1, 0, true) == NodeState::stopper_win;
            s2 = lazy_escape(c2, 0, false) == NodeState::stopper_win;
        } catch (...) {
            acc.explored += c1.used + c2.used;
            throw;
        }
        acc.explored += c1.used + c2.used;
        acc.escape_samples += 1;
        acc.s1_wins += s1;
        acc.s2_wins += s2;
        return;
    }
    LazyContext ctx{dist, SplitMix64(sample_seed), cutoff, budget};
    const NodeState leaf = game == Game::normal ? NodeState::prev_win : NodeState::next_win;
    NodeState result;
    try {
        result = lazy_two_player(ctx, 0, leaf);
    } catch (...) {
        acc.explored += ctx.used;
        throw;
    }
    acc.explored += ctx.used;
    switch (result) {
        case NodeState::next_win: acc.n_next += 1; break;
        case NodeState::prev_win: acc.n_prev += 1; break;
        default: acc.n_undecided += 1; break;
    }
}

void run_sample_full(const OffspringDistribution& dist, Game game, int cutoff,
                     std::uint64_t sample_seed, const McOptions& opts, Accum& acc) {
    const SampledTree tree = sample_tree(dist, cutoff, sample_seed, opts.node_budget);
    acc.explored += tree.size();
    if (game == Game::escape) {
        const auto st1 = solve_escape(tree, true);
        const auto st2 = solve_escape(tree, false);
        acc.escape_samples += 1;
        acc.s1_wins += st1[0].state == NodeState::stopper_win;
        acc.s2_wins += st2[0].state == NodeState::stopper_win;
        return;
    }
    const auto marks = game == Game::normal ? solve_normal(tree) : solve_misere(tree);
    const NodeStatus root = marks[0];
    if (root.state == NodeState::undecided) {
        acc.n_undecided += 1;
    } else {
        (root.state == NodeState::next_win ? acc.n_next : acc.n_prev) += 1;
        const std::uint64_t t = root.index - 1; // moves under optimal play
        if (acc.t_hist.size() <= t) acc.t_hist.resize(t + 1, 0);
        acc.t_hist[t] += 1;
        acc.t_sum += static_cast<double>(t);
        acc.t_sumsq += static_cast<double>(t) * static_cast<double>(t);
        acc.t_count += 1;
    }
    if (opts.collect_tstar) {
        const ReducedTree rt = reduced_tree(tree, marks);
        if (rt.censored) {
            acc.tstar_censored += 1;
        } else {
            const std::uint64_t h = static_cast<std::uint64_t>(rt.height);
            if (acc.tstar_hist.size() <= h) acc.tstar_hist.resize(h + 1, 0);
            acc.tstar_hist[h] += 1;
            acc.tstar_sum += static_cast<double>(h);
            acc.tstar_sumsq += static_cast<double>(h) * static_cast<double>(h);
            acc.tstar_count += 1;
        }
    }
}

Estimate proportion(std::size_t hits, std::size_t n) {
    if (n == 0) return {0.0, 0.0};
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

void mean_with_se(double sum, double sumsq, std::size_t n, double& mean, double& se) {
    if (n == 0) {
        mean = se = 0.0;
        return;
    }
    mean = sum / static_cast<double>(n);
    if (n == 1) {
        se = 0.0;
        return;
    }
    const double var = std::max(0.0, (sumsq - sum * mean) / static_cast<double>(n - 1));
    se = std::sqrt(var / static_cast<double>(n));
}

} // namespace

McEstimate monte_carlo(const OffspringDistribution& dist, Game game, int depth_cutoff,
                       std::size_t n_samples, std::uint64_t seed, const McOptions& opts) {
    if (n_samples < 1) throw std::invalid_argument("monte_carlo needs n_samples >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    const int n_threads = std::max(1, opts.threads);
    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;
    Accum total;

    auto worker = [&]() {
        Accum local;
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_samples) break;
            const std::uint64_t sample_seed = stream_seed(seed, i);
            try {
                if (opts.mode == McMode::statuses)
                    run_sample_statuses(dist, game, depth_cutoff, sample_seed, opts.node_budget,
                                        local);
                else
                    run_sample_full(dist, game, depth_cutoff, sample_seed, opts, local);
            } catch (const TreeBudgetExceeded&) {
                local.skipped += 1;
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        total.merge(local);
    };

    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads - 1);
        for (int t = 0; t + 1 < n_threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
    }

    McEstimate est;
    est.game = game;
    est.mode = opts.mode;
    est.depth_cutoff = depth_cutoff;
    est.seed = seed;
    est.n_samples = n_samples;
    est.skipped = total.skipped;
    est.n_effective = n_samples - total.skipped;
    est.explored_nodes = total.explored;

    if (game == Game::escape) {
        const std::size_t n = total.escape_samples;
        est.s1 = proportion(total.s1_wins, n);
        est.s2 = proportion(total.s2_wins, n);
        est.e1 = {1.0 - est.s2.value, est.s2.se};
        est.e2 = {1.0 - est.s1.value, est.s1.se};
    } else {
        const std::size_t n = est.n_effective;
        est.next_win = proportion(total.n_next, n);
        est.prev_win = proportion(total.n_prev, n);
        est.undecided = proportion(total.n_undecided, n);
        est.censored = total.n_undecided;
        est.t_histogram = std::move(total.t_hist);
        mean_with_se(total.t_sum, total.t_sumsq, total.t_count, est.mean_t, est.se_t);
        est.t_count = total.t_count;
        est.tstar_histogram = std::move(total.tstar_hist);
        mean_with_se(total.tstar_sum, total.tstar_sumsq, total.tstar_count, est.mean_tstar,
                     est.se_tstar);
        est.tstar_count = total.tstar_count;
        est.tstar_censored = total.tstar_censored;
    }

    est.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return est;
}

} // namespace gwg
