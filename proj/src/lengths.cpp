#include "gwgames/lengths.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gwgames/maps.hpp"
#include "gwgames/rng.hpp"

namespace gwg {

namespace {

constexpr double kDivergenceRatio = 1.0 - 1e-6;
constexpr int kDivergenceRun = 100;
constexpr std::size_t kPartialSumCap = 256;

} // namespace

LengthReport expected_T(const OffspringDistribution& dist, Game game, long n_max, double tol) {
    if (game == Game::escape)
        throw std::invalid_argument("expected_T is defined for the normal and misere games");
    if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");

    LengthReport rep;
    rep.game = game;

    const GameOutcomes oc = outcomes(dist);
    rep.draw_probability = game == Game::normal ? oc.d_raw : oc.d_mis_raw;

    const ComposedMap step(dist, game == Game::normal ? MapId::F : MapId::H);
    auto twice = [&](double x) { return step(step(x)); };

    // a tracks the iterate from 1, b from 0. Normal play pairs the odd term
    // with the fresh a and stale b; misere play is the mirror image.
    double a = 1.0, b = 0.0;
    double sum = 1.0; // n = 0 term
    rep.partial_sums.push_back(sum);

    double prev_odd = 1.0, prev_even = 1.0;
    int slow_run = 0;
    double ratio = 0.0;
    long n = 0;
    bool tail_converged = false;

    for (long k = 1; 2 * k <= n_max; ++k) {
        double d_odd, d_even;
        if (game == Game::normal) {
            a = twice(a);
            d_odd = std::max(0.0, a - b);
            b = twice(b);
            d_even = std::max(0.0, a - b);
        } else {
            b = twice(b);
            d_odd = std::max(0.0, a - b);
            a = twice(a);
            d_even = std::max(0.0, a - b);
        }
        sum += d_odd + d_even;
        n = 2 * k;
        if (rep.partial_sums.size() < kPartialSumCap) {
            rep.partial_sums.push_back(sum - d_even);
            rep.partial_sums.push_back(sum);
        }

        const double r_odd = prev_odd > 0.0 ? d_odd / prev_odd : 0.0;
        const double r_even = prev_even > 0.0 ? d_even / prev_even : 0.0;
        ratio = std::max(r_odd, r_even);
        slow_run = ratio >= kDivergenceRatio ? slow_run + 1 : 0;
        prev_odd = d_odd;
        prev_even = d_even;

        if (slow_run >= kDivergenceRun) {
            rep.divergent = true;
            break;
        }
        if (ratio < 1.0 && d_odd + d_even < tol * (1.0 - ratio)) {
            tail_converged = true;
            break;
        }
    }

    rep.terms_used = n;
    rep.tail_ratio = ratio;
    if (!tail_converged && ratio >= kDivergenceRatio) rep.divergent = true;
    if (rep.draw_probability > kDrawSnapTolerance) rep.divergent = true;

    if (!rep.divergent) {
        if (!tail_converged && ratio < 1.0) {
            rep.truncated_at_n_max = true;
            rep.tail_bound = (prev_odd + prev_even) * ratio / (1.0 - ratio);
        }
        rep.e_t_raw = sum;
        rep.e_t_moves = sum - 1.0;
        rep.grandchild_mean = grandchild_mean(dist, game);
    } else {
        rep.e_t_raw = rep.e_t_moves = std::numeric_limits<double>::infinity();
    }
    return rep;
}

double grandchild_mean(const OffspringDistribution& dist, Game game) {
    if (game == Game::escape)
        throw std::invalid_argument("grandchild_mean is defined for the normal and misere games");
    if (dist.p1() == 1.0) return 1.0; // deterministic path: G' == 1 everywhere

    const GameOutcomes oc = outcomes(dist);
    const double draw = game == Game::normal ? oc.d_raw : oc.d_mis_raw;
    if (draw > kDrawSnapTolerance)
        throw std::invalid_argument("grandchild_mean needs a draw-free law (draw probability " +
                                    std::to_string(draw) + ")");
    const double win = game == Game::normal ? oc.n : oc.n_mis;
    const double gp = dist.g_prime(win);
    return gp * gp;
}

namespace {

// Lazily grown game tree with exact mark certification. Children are sampled
// on first touch; a node's mark is settled by the usual certificate search
// (some prev_win child makes it next_win, all-next_win children make it
// prev_win), descending only as deep as the certificate requires.
class AdaptiveTstarSampler {
public:
    AdaptiveTstarSampler(const OffspringDistribution& dist, bool misere_rules, int depth_cap,
                         std::uint64_t node_budget, std::uint64_t mark_budget, std::uint64_t seed)
        : dist_(dist), misere_(misere_rules), cap_(depth_cap), budget_(node_budget),
          mark_budget_(mark_budget), rng_(seed) {
        nodes_.push_back({0, 0, 0, false, Mark::unknown});
    }

    struct CapHit {};

    struct Result {
        int height = 0;  // reduced-tree height; a lower bound when not clean
        bool clean = true;
    };

    // Grows the reduced-tree component. Marks that cannot be settled within
    // the depth cap or the per-mark work allowance make the sample censored;
    // the component keeps growing elsewhere, so `height` is then a valid
    // lower bound on T* rather than a discard.
    Result run() {
        Result res;
        try {
            classify(0, cap_);
        } catch (const CapHit&) {
            res.clean = false;
            return res;
        }
        std::vector<std::uint32_t> queue{0};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const std::uint32_t v = queue[qi];
            if (static_cast<int>(nodes_[v].depth) >= cap_) {
                res.clean = false; // component reached the horizon itself
                continue;
            }
            expand(v);
            const std::uint32_t first = nodes_[v].first_child;
            const std::uint32_t count = nodes_[v].n_children;
            if (nodes_[v].mark == Mark::prev) {
                // children of a prev_win node are all next_win and all stay
                for (std::uint32_t c = first; c < first + count; ++c) {
                    queue.push_back(c);
                    res.height = std::max(res.height, static_cast<int>(nodes_[c].depth));
                }
            } else {
                // the unique prev_win child stays; with two or more they all drop
                std::uint32_t prev_child = 0;
                std::uint32_t prev_count = 0;
                bool blocked = false;
                for (std::uint32_t c = first; c < first + count; ++c) {
                    try {
                        if (classify(c, cap_ - nodes_[c].depth) == Mark::prev) {
                            ++prev_count;
                            prev_child = c;
                        }
                    } catch (const CapHit&) {
                        blocked = true; // sibling set unresolved: stop this branch
                    }
                }
                if (blocked) {
                    res.clean = false;
                    continue;
                }
                if (prev_count == 1) {
                    queue.push_back(prev_child);
                    res.height = std::max(res.height, static_cast<int>(nodes_[prev_child].depth));
                }
            }
        }
        return res;
    }

private:
    enum class Mark : std::uint8_t { unknown, next, prev };

    struct Node {
        std::uint32_t first_child;
        std::uint32_t n_children;
        std::uint16_t depth;
        bool expanded;
        Mark mark;
    };

    void expand(std::uint32_t v) {
        if (nodes_[v].expanded) return;
        nodes_[v].expanded = true;
        const std::uint64_t k = dist_.sample_count(rng_);
        if (nodes_.size() + k > budget_)
            throw TreeBudgetExceeded("adaptive T* sampling exceeded node budget " +
                                     std::to_string(budget_));
        nodes_[v].first_child = static_cast<std::uint32_t>(nodes_.size());
        nodes_[v].n_children = static_cast<std::uint32_t>(k);
        const std::uint16_t d = static_cast<std::uint16_t>(nodes_[v].depth + 1);
        for (std::uint64_t i = 0; i < k; ++i) nodes_.push_back({0, 0, d, false, Mark::unknown});
    }

    // Unbounded depth-first certification can fail to return on supercritical
    // trees (the explored tree is itself supercritical), so marks are settled
    // by iterative deepening: a horizon-bounded three-valued status, with the
    // horizon grown until the mark decides. Decided marks are cached, and the
    // sampled structure is cached too, so re-walks resample nothing.
    //
    // Undecidable marks are the expensive ones: refuting every certificate up
    // to the depth cap means sweeping the whole truncated subtree. Decidable
    // certificates are thin, so a per-mark visit allowance separates the two
    // cheaply; marks that exhaust it count as censored like depth-cap hits.
    Mark classify(std::uint32_t v, int budget) {
        if (nodes_[v].mark != Mark::unknown) return nodes_[v].mark;
        if (budget <= 0) throw CapHit{};
        mark_work_ = 0;
        int horizon = 2;
        while (true) {
            const Mark m = status(v, horizon);
            if (m != Mark::unknown) return m;
            if (horizon >= budget) throw CapHit{};
            horizon = std::min(budget, horizon + std::max(4, horizon / 2));
        }
    }

    // Three-valued status with a remaining-depth horizon; unknown == not yet
    // decided this shallow. Decided results are cached.
    Mark status(std::uint32_t v, int horizon) {
        if (nodes_[v].mark != Mark::unknown) return nodes_[v].mark;
        if (horizon <= 0) return Mark::unknown;
        if (++mark_work_ > mark_budget_) throw CapHit{};
        expand(v);
        const std::uint32_t first = nodes_[v].first_child;
        const std::uint32_t count = nodes_[v].n_children;
        if (count == 0)
            return nodes_[v].mark = misere_ ? Mark::next : Mark::prev;
        bool any_unknown = false;
        for (std::uint32_t c = first; c < first + count; ++c) {
            const Mark s = status(c, horizon - 1);
            if (s == Mark::prev) return nodes_[v].mark = Mark::next;
            if (s == Mark::unknown) any_unknown = true;
        }
        if (any_unknown) return Mark::unknown;
        return nodes_[v].mark = Mark::prev;
    }

    const OffspringDistribution& dist_;
    bool misere_;
    int cap_;
    std::uint64_t budget_;
    std::uint64_t mark_budget_;
    std::uint64_t mark_work_ = 0;
    SplitMix64 rng_;
    std::vector<Node> nodes_;
};

} // namespace

TstarEstimate expected_Tstar_mc(const OffspringDistribution& dist, Game game, int depth_cutoff,
                                std::size_t n_samples, std::uint64_t seed, int threads,
                                std::uint64_t node_budget, std::uint64_t mark_budget) {
    if (game == Game::escape)
        throw std::invalid_argument("T* is defined for the normal and misere games");
    if (n_samples < 1) throw std::invalid_argument("expected_Tstar_mc needs n_samples >= 1");

    struct Accum {
        double sum = 0.0, sumsq = 0.0;
        double lb_sum = 0.0, lb_sumsq = 0.0;
        std::size_t count = 0, censored = 0, skipped = 0;
        std::vector<std::uint64_t> hist;
    };

    const int n_threads = std::max(1, threads);
    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;
    Accum total;

    auto worker = [&]() {
        Accum local;
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_samples) break;
            AdaptiveTstarSampler sampler(dist, game == Game::misere, depth_cutoff, node_budget,
                                         mark_budget, stream_seed(seed, i));
            try {
                const auto r = sampler.run();
                const int h = r.height;
                local.lb_sum += h;
                local.lb_sumsq += static_cast<double>(h) * h;
                if (r.clean) {
                    local.sum += h;
                    local.sumsq += static_cast<double>(h) * h;
                    local.count += 1;
                    if (local.hist.size() <= static_cast<std::size_t>(h))
                        local.hist.resize(h + 1, 0);
                    local.hist[static_cast<std::size_t>(h)] += 1;
                } else {
                    local.censored += 1;
                }
            } catch (const TreeBudgetExceeded&) {
                local.skipped += 1;
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        total.sum += local.sum;
        total.sumsq += local.sumsq;
        total.lb_sum += local.lb_sum;
        total.lb_sumsq += local.lb_sumsq;
        total.count += local.count;
        total.censored += local.censored;
        total.skipped += local.skipped;
        if (total.hist.size() < local.hist.size()) total.hist.resize(local.hist.size(), 0);
        for (std::size_t k = 0; k < local.hist.size(); ++k) total.hist[k] += local.hist[k];
    };

    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t + 1 < n_threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
    }

    TstarEstimate est;
    est.count = total.count;
    est.censored = total.censored;
    est.skipped = total.skipped;
    est.histogram = std::move(total.hist);
    if (total.count > 0) {
        est.mean = total.sum / static_cast<double>(total.count);
        if (total.count > 1) {
            const double var =
                std::max(0.0, (total.sumsq - total.sum * est.mean) /
                                  static_cast<double>(total.count - 1));
            est.se = std::sqrt(var / static_cast<double>(total.count));
        }
    }
    const std::size_t lb_n = total.count + total.censored;
    if (lb_n > 0) {
        est.lower_bound_mean = total.lb_sum / static_cast<double>(lb_n);
        if (lb_n > 1) {
            const double var = std::max(0.0, (total.lb_sumsq - total.lb_sum *
                                                                   est.lower_bound_mean) /
                                                 static_cast<double>(lb_n - 1));
            est.lower_bound_se = std::sqrt(var / static_cast<double>(lb_n));
        }
    }

    const GameOutcomes oc = outcomes(dist);
    const double draw = game == Game::normal ? oc.d_raw : oc.d_mis_raw;
    est.draw_warning = draw > kDrawSnapTolerance;
    return est;
}

} // namespace gwg
