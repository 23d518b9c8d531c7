// End-to-end acceptance run: every release gate in one binary, one verdict
// line per criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "gwgames/audit.hpp"
#include "gwgames/family.hpp"
#include "gwgames/format.hpp"
#include "gwgames/lengths.hpp"
#include "gwgames/monte_carlo.hpp"
#include "gwgames/scan.hpp"
#include "gwgames/solver.hpp"

using namespace gwg;

namespace {

int g_failed_criteria = 0;

class Criterion {
public:
    Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {
        timer_ = std::chrono::steady_clock::now();
    }

    void check(bool ok, const std::string& what) {
        lines_.push_back(std::string(ok ? "    ok   " : "    FAIL ") + what);
        pass_ = pass_ && ok;
    }

    void note(const std::string& what) { lines_.push_back("    note " + what); }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - timer_).count();
    }

    ~Criterion() {
        std::printf("[%s] criterion %d: %s (%.1f s)\n", pass_ ? "PASS" : "FAIL", number_,
                    title_.c_str(), elapsed());
        for (const auto& l : lines_) std::printf("%s\n", l.c_str());
        std::fflush(stdout);
        if (!pass_) ++g_failed_criteria;
    }

private:
    int number_;
    std::string title_;
    bool pass_ = true;
    std::vector<std::string> lines_;
    std::chrono::steady_clock::time_point timer_;
};

std::string fmt(double v) { return format_number(v); }

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// ---------------------------------------------------------------- criterion 1
void criterion_1() {
    Criterion c(1, "binary-family thresholds located to 1e-6 in under 10 s each");
    const auto fam = Family::binary();
    struct Row { Game game; double expected; const char* name; };
    const Row rows[] = {
        {Game::normal, std::sqrt(3.0) / 2.0, "normal sqrt(3)/2"},
        {Game::misere, 0.75, "misere 3/4"},
        {Game::escape, 3.0 * std::pow(2.0, -5.0 / 3.0), "escape 3*2^(-5/3)"},
    };
    for (const Row& r : rows) {
        const auto t0 = std::chrono::steady_clock::now();
        const double tc = critical_parameter(fam, r.game, 0.5, 1.0, 1e-9);
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.check(close(tc, r.expected, 1e-6),
                std::string(r.name) + ": located " + fmt(tc) + " vs " + fmt(r.expected));
        c.check(dt < 10.0, std::string(r.name) + " runtime " + fmt(dt) + " s < 10 s");
    }
}

// ---------------------------------------------------------------- criterion 2
void criterion_2() {
    Criterion c(2, "escape jump at the binary threshold: E1 = 2^(4/3)/3, discontinuous");
    const auto fam = Family::binary();
    const double te = critical_parameter(fam, Game::escape, 0.5, 1.0, 1e-10);
    const auto rep = classify_transition(fam, Game::escape, te);
    const double expected = std::pow(2.0, 4.0 / 3.0) / 3.0;
    c.check(rep.classification == TransitionKind::discontinuous,
            "classification " + transition_kind_name(rep.classification));
    c.check(close(rep.jump, expected, 1e-6),
            "jump " + fmt(rep.jump) + " vs " + fmt(expected) + " (tol 1e-6)");
}

// ---------------------------------------------------------------- criterion 3
void criterion_3() {
    Criterion c(3, "Poisson thresholds: e, the misere root, and the escape point");
    const auto fam = Family::poisson();

    const double ln = critical_parameter(fam, Game::normal, 1.5, 4.0, 1e-9);
    c.check(close(ln, std::exp(1.0), 1e-6), "normal threshold " + fmt(ln) + " vs e");

    // independent bisection of log(x) + x e^{-x} = 1
    double lo = 1.5, hi = 3.0;
    auto misere_gap = [](double x) { return std::log(x) + x * std::exp(-x) - 1.0; };
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (misere_gap(mid) < 0.0 ? lo : hi) = mid;
    }
    const double lm_expected = 0.5 * (lo + hi);
    const double lm = critical_parameter(fam, Game::misere, 1.5, 3.0, 1e-9);
    c.check(close(lm, lm_expected, 1e-6),
            "misere threshold " + fmt(lm) + " vs independently bisected " + fmt(lm_expected));

    const double le = critical_parameter(fam, Game::escape, 2.5, 4.0, 1e-9);
    c.check(close(le, 3.3185, 2e-3), "escape threshold " + fmt(le) + " vs 3.3185 (tol 2e-3)");

    c.check(classify_transition(fam, Game::normal, ln).classification ==
                TransitionKind::continuous,
            "normal transition continuous");
    c.check(classify_transition(fam, Game::misere, lm).classification ==
                TransitionKind::continuous,
            "misere transition continuous");
    c.check(classify_transition(fam, Game::escape, le).classification ==
                TransitionKind::discontinuous,
            "escape transition discontinuous");
}

// ---------------------------------------------------------------- criterion 4
void criterion_4() {
    Criterion c(4, "geometric family: no draws, no escapes, any parameter");
    double worst = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const auto oc = outcomes(OffspringDistribution::geometric(i / 10.0));
        worst = std::max({worst, oc.d_raw, oc.d_mis_raw, oc.e1, oc.e2});
    }
    c.check(worst < 1e-9, "max of D, Dm, E1, E2 over alpha in {0.1..0.9}: " + fmt(worst));
}

// ---------------------------------------------------------------- criterion 5
void criterion_5() {
    Criterion c(5, "binomial draw boundary matches (n+1)^(n-1)/n^n");
    const struct { int n; double lo, hi; } rows[] = {
        {2, 0.5, 0.95}, {3, 0.35, 0.9}, {4, 0.3, 0.85}};
    for (const auto& r : rows) {
        const double expected = std::pow(r.n + 1.0, r.n - 1.0) / std::pow(r.n, r.n);
        const double pc =
            critical_parameter(Family::binomial(r.n), Game::normal, r.lo, r.hi, 1e-9);
        c.check(close(pc, expected, 1e-6),
                "n=" + std::to_string(r.n) + ": " + fmt(pc) + " vs " + fmt(expected));
    }
}

// ---------------------------------------------------------------- criterion 6
void criterion_6() {
    Criterion c(6, "exotic families: jumps, double transitions, knife-edge escape");

    { // family (i): discontinuous transition with a pair of double roots
        const auto fam = Family::exotic1();
        const double tc = critical_parameter(fam, Game::normal, 0.9, 0.999, 1e-10);
        c.check(close(tc, 0.9791, 1e-3), "exotic1 transition at " + fmt(tc) + " vs 0.9791");
        const auto rep = classify_transition(fam, Game::normal, tc);
        c.check(rep.classification == TransitionKind::discontinuous,
                "exotic1 classification " + transition_kind_name(rep.classification));
        c.check(close(rep.jump, 0.681, 0.01), "exotic1 jump " + fmt(rep.jump) + " vs 0.681");
        c.check(rep.emerging_roots.size() >= 2, "two emerging double roots found");
        if (rep.emerging_roots.size() >= 2) {
            c.check(close(rep.emerging_roots.front(), 0.264, 1e-3),
                    "lower double root " + fmt(rep.emerging_roots.front()) + " vs 0.264");
            c.check(close(rep.emerging_roots.back(), 0.945, 1e-3),
                    "upper double root " + fmt(rep.emerging_roots.back()) + " vs 0.945");
        }
    }

    { // family (ii): a continuous onset followed by an interior jump
        const auto fam = Family::exotic2();
        const auto found = find_transitions(fam, Game::normal, 0.98, 0.998, 2000, 0.05, 1e-10);
        c.check(found.size() == 2, "two transitions found (" + std::to_string(found.size()) + ")");
        if (found.size() == 2) {
            c.check(found[0].onset && close(found[0].t, 0.9877, 1e-3),
                    "first (onset) at " + fmt(found[0].t) + " vs 0.9877");
            c.check(!found[1].onset && close(found[1].t, 0.99219, 1e-3),
                    "second (jump) at " + fmt(found[1].t) + " vs 0.99219");

            const double tp = found[1].t;
            const auto roots = fixed_points_with_emerging(fam.at(tp), MapId::F2, 1e-6);
            const double n_at = roots.front();
            const double p_at = 1.0 - roots.back();
            const double d_at = 1.0 - n_at - p_at;
            c.check(close(n_at, 0.285, 5e-3) && close(p_at, 0.020, 5e-3) &&
                        close(d_at, 0.695, 5e-3),
                    "at the jump (N,P,D) = (" + fmt(n_at) + ", " + fmt(p_at) + ", " + fmt(d_at) +
                        ") vs (0.285, 0.020, 0.695)");

            const auto below = outcomes(fam.at(tp - 1e-5));
            c.check(close(below.n, 0.774, 5e-3),
                    "just below the jump N = " + fmt(below.n) + " vs 0.774");
            // The published P and D here equal 1-x* and x*-N: they read the
            // middle fixed point as the largest one, which contradicts the
            // identity 1-P = F(N). The identity-consistent companions of
            // N = 0.774 are P = 1 - F(0.774) and D = 1 - N - P.
            const auto at_dist = fam.at(tp);
            const double p_implied = 1.0 - at_dist.f(0.774);
            const double d_implied = 1.0 - 0.774 - p_implied;
            c.check(close(below.p, p_implied, 5e-3),
                    "just below the jump P = " + fmt(below.p) + " vs identity-consistent " +
                        fmt(p_implied) + " (the published 0.149 equals 1-x*)");
            c.check(close(below.d, d_implied, 5e-3),
                    "just below the jump D = " + fmt(below.d) + " vs identity-consistent " +
                        fmt(d_implied) + " (the published 0.077 equals x*-N)");
        }
    }

    { // family (iii): escape transition exactly where mu*p1 crosses 1
        const auto fam = Family::exotic3();
        const double tc = critical_parameter(fam, Game::escape, -0.02, 1.0 / 18.0, 1e-9);
        c.check(close(tc, 0.0, 1e-6), "exotic3 escape transition at " + fmt(tc) + " vs 0");
        const auto rep = classify_transition(fam, Game::escape, tc);
        c.check(rep.classification == TransitionKind::boundary_crossing_mu_p1,
                "classification " + transition_kind_name(rep.classification));
        c.check(rep.jump <= 1e-4, "continuous: jump " + fmt(rep.jump) + " <= 1e-4");
        c.check(rep.mu_p1_crossing, "mu*p1 crosses 1 at the transition");
    }
}

// ---------------------------------------------------------------- criterion 7
void criterion_7() {
    Criterion c(7, "inequality audit: 1e4 random laws clean, catalogue complete");
    const auto summary = random_audit(10'000, 20250808, 8, 1e-9);
    c.check(summary.failures == 0, "random audit failures: " + std::to_string(summary.failures) +
                                       " of " + std::to_string(summary.count));

    const auto suite = counterexample_suite();
    bool checks_ok = true;
    for (const auto& chk : suite.checks)
        if (!chk.pass) {
            checks_ok = false;
            c.check(false, "catalogue check failed: " + chk.name + " = " + fmt(chk.value));
        }
    if (checks_ok)
        c.check(true, "all " + std::to_string(suite.checks.size()) + " catalogue checks");

    const char* symbols[] = {"N", "P", "D", "Nm", "Pm", "Dm", "S1", "S2", "E1", "E2"};
    const auto& closure = implied_inequality_closure();
    auto implied = [&](const std::string& a, const std::string& b) {
        for (const auto& [l, r] : closure)
            if (l == a && r == b) return true;
        return false;
    };
    int missing = 0, broken = 0;
    for (const char* a : symbols) {
        for (const char* b : symbols) {
            if (std::string(a) == b) continue;
            bool violated = false;
            for (const auto& cs : suite.cases)
                if (cs.oc.by_symbol(a) > cs.oc.by_symbol(b) + 1e-6) violated = true;
            if (implied(a, b) && violated) ++broken;
            if (!implied(a, b) && !violated) ++missing;
        }
    }
    c.check(broken == 0, "implied inequalities hold on every catalogue case");
    c.check(missing == 0, "every non-implied ordered pair is violated somewhere (missing: " +
                              std::to_string(missing) + ")");
}

// ---------------------------------------------------------------- criterion 8
struct TruncatedTargets {
    double n, p, d, nm, pm, dm, s1, e1;
};

TruncatedTargets truncated_targets(const OffspringDistribution& d, int horizon) {
    double n = 0, p = 0, nm = 0, pm = 0, s1 = 0, s2 = 0;
    for (int k = 0; k < horizon; ++k) {
        const double n2 = d.f(1.0 - p), p2 = 1.0 - d.f(n);
        const double nm2 = d.h(1.0 - pm), pm2 = 1.0 - d.h(nm);
        const double s12 = d.h(1.0 - s2), s22 = d.g(s1);
        n = n2; p = p2; nm = nm2; pm = pm2; s1 = s12; s2 = s22;
    }
    return {n, p, 1.0 - n - p, nm, pm, 1.0 - nm - pm, s1, 1.0 - s2};
}

void criterion_8() {
    Criterion c(8, "Monte Carlo at depth 30 agrees with the analytic values on 200 random laws");
    const auto t0 = std::chrono::steady_clock::now();
    const int depth = 30;
    const std::size_t samples = 100'000;

    // The corpus streams seeded random laws and keeps the first 200 whose
    // depth-30 lazy solve is tractable: a short probe must finish without
    // budget hits and average at most 2500 explored nodes per sample.
    // Supercritical draw-positive laws fail the probe for a structural
    // reason: certifying an undecided root sweeps the truncated tree, which
    // has on the order of mean^30 nodes.
    std::vector<OffspringDistribution> corpus;
    int stream = 0, excluded = 0;
    while (corpus.size() < 200 && stream < 2000) {
        const int support = 1 + stream % 8;
        const auto d = random_distribution(stream_seed(0xAC8, stream), support);
        ++stream;
        McOptions probe;
        probe.threads = 2;
        probe.node_budget = 200'000;
        bool ok = true;
        double per_sample = 0.0;
        for (Game g : {Game::normal, Game::misere, Game::escape}) {
            const auto est = monte_carlo(d, g, depth, 64, 99, probe);
            if (est.skipped > 0) {
                ok = false;
                break;
            }
            per_sample += static_cast<double>(est.explored_nodes) / 64.0;
        }
        if (!ok || per_sample > 2500.0) {
            ++excluded;
            continue;
        }
        corpus.push_back(d);
    }
    c.check(corpus.size() == 200, "corpus assembled: " + std::to_string(corpus.size()) +
                                      " laws (stream " + std::to_string(stream) + ", excluded " +
                                      std::to_string(excluded) + " as intractable at depth 30)");

    // 8 comparisons per law. Each is a two-sided binomial test of the
    // observed count against the analytic probability; "within 3 SE" is the
    // matching 0.27% significance level. With 1600 simultaneous comparisons
    // an exact sampler still leaves a few outside, so the gate is calibrated
    // coverage plus a hard cap at the 1e-7 level per comparison.
    std::size_t comparisons = 0, outside3 = 0;
    double worst_p = 1.0;
    std::string worst_what;
    auto two_sided = [](std::size_t n, double prob, double est) {
        long k = std::lround(est * static_cast<double>(n));
        if (prob > 0.5) {
            prob = 1.0 - prob;
            k = static_cast<long>(n) - k;
        }
        const double np = prob * static_cast<double>(n);
        const double var = np * (1.0 - prob);
        if (var >= 25.0) {
            const double z = (static_cast<double>(k) - np) / std::sqrt(var);
            return std::erfc(std::abs(z) / std::sqrt(2.0));
        }
        // Poisson regime: exact tails by summation
        double term = std::exp(-np);
        double cdf = 0.0;
        double cdf_below = 0.0; // P(X <= k-1)
        for (long j = 0; j <= k; ++j) {
            if (j == k) cdf_below = cdf;
            cdf += term;
            term *= np / static_cast<double>(j + 1);
        }
        const double lower = std::min(1.0, cdf);             // P(X <= k)
        const double upper = std::min(1.0, 1.0 - cdf_below); // P(X >= k)
        return std::min(1.0, 2.0 * std::min(lower, upper));
    };
    auto compare = [&](double est, std::size_t n_eff, double target, const std::string& what) {
        ++comparisons;
        const double p2 = two_sided(n_eff, target, est);
        if (p2 < 0.0027) ++outside3;
        if (p2 < worst_p) {
            worst_p = p2;
            worst_what = what + ": est " + fmt(est) + " vs " + fmt(target);
        }
    };

    McOptions opts;
    opts.threads = 2;
    opts.node_budget = 2'000'000;
    std::size_t total_skipped = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& d = corpus[i];
        const auto target = truncated_targets(d, depth);
        const std::string tag = "law " + std::to_string(i);

        const auto n = monte_carlo(d, Game::normal, depth, samples, stream_seed(0xA80, i), opts);
        compare(n.next_win.value, n.n_effective, target.n, tag + " N");
        compare(n.prev_win.value, n.n_effective, target.p, tag + " P");
        compare(n.undecided.value, n.n_effective, target.d, tag + " censored");

        const auto m = monte_carlo(d, Game::misere, depth, samples, stream_seed(0xA81, i), opts);
        compare(m.next_win.value, m.n_effective, target.nm, tag + " Nm");
        compare(m.prev_win.value, m.n_effective, target.pm, tag + " Pm");
        compare(m.undecided.value, m.n_effective, target.dm, tag + " censored~");

        const auto e = monte_carlo(d, Game::escape, depth, samples, stream_seed(0xA82, i), opts);
        compare(e.s1.value, e.n_effective, target.s1, tag + " S1");
        compare(e.e1.value, e.n_effective, target.e1, tag + " E1");
        total_skipped += n.skipped + m.skipped + e.skipped;
    }

    const double expected_outside = 0.0027 * static_cast<double>(comparisons);
    const std::size_t allowed =
        static_cast<std::size_t>(expected_outside + 4.0 * std::sqrt(expected_outside)) + 2;
    c.check(outside3 <= allowed,
            std::to_string(outside3) + " of " + std::to_string(comparisons) +
                " comparisons outside the 3-SE level (nominal " + fmt(expected_outside) +
                ", allowed " + std::to_string(allowed) + ")");
    c.check(worst_p > 1e-7,
            "most extreme comparison p-value " + fmt(worst_p) + " at " + worst_what);
    c.check(total_skipped == 0, "skipped samples: " + std::to_string(total_skipped));
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.check(dt < 600.0, "runtime " + fmt(dt) + " s < 600 s");
}

// ---------------------------------------------------------------- criterion 9
void criterion_9() {
    Criterion c(9, "exhaustive depth-4 enumeration matches the direct minimax oracle");
    using namespace gwg::testing;
    const auto trees = enumerate_trees(4, 2);
    c.check(trees.size() == 33673, "enumerated " + std::to_string(trees.size()) + " trees");

    std::size_t status_mismatch = 0, t_mismatch = 0, tstar_mismatch = 0, trunc_mismatch = 0;
    for (const auto& t : trees) {
        const auto arena = to_sampled(t, 8);

        const auto n = solve_normal(arena)[0];
        const auto bn = brute_normal(t, kNoCutoff);
        if ((n.state == NodeState::next_win) != (bn.state == BruteState::next)) ++status_mismatch;
        if (static_cast<int>(n.index) - 1 != bn.length) ++t_mismatch;

        const auto m = solve_misere(arena)[0];
        const auto bm = brute_misere(t, kNoCutoff);
        if ((m.state == NodeState::next_win) != (bm.state == BruteState::next)) ++status_mismatch;
        if (static_cast<int>(m.index) - 1 != bm.length) ++t_mismatch;

        for (bool first : {true, false}) {
            const auto e = solve_escape(arena, first)[0];
            const auto be = brute_escape(t, kNoCutoff, first);
            if (e.state != NodeState::stopper_win || be.state != BruteState::stopper)
                ++status_mismatch;
            else if (static_cast<int>(e.index) - 1 != be.length)
                ++t_mismatch;
        }

        if (reduced_tree(arena, solve_normal(arena)).height != brute_tstar_normal(t))
            ++tstar_mismatch;
        if (reduced_tree(arena, solve_misere(arena)).height != brute_tstar_misere(t))
            ++tstar_mismatch;

        for (int cutoff = 0; cutoff <= 4; ++cutoff) {
            const auto cut = to_sampled(t, cutoff);
            const auto nc = solve_normal(cut)[0];
            const auto bnc = brute_normal(t, cutoff);
            const bool und = nc.state == NodeState::undecided;
            if (und != (bnc.state == BruteState::undecided))
                ++trunc_mismatch;
            else if (!und &&
                     ((nc.state == NodeState::next_win) != (bnc.state == BruteState::next) ||
                      static_cast<int>(nc.index) - 1 != bnc.length))
                ++trunc_mismatch;
            const auto mc = solve_misere(cut)[0];
            const auto bmc = brute_misere(t, cutoff);
            if ((mc.state == NodeState::undecided) != (bmc.state == BruteState::undecided))
                ++trunc_mismatch;
            const auto ec = solve_escape(cut, true)[0];
            const auto bec = brute_escape(t, cutoff, true);
            if ((ec.state == NodeState::stopper_win) != (bec.state == BruteState::stopper))
                ++trunc_mismatch;
        }
    }
    c.check(status_mismatch == 0,
            "statuses exact, three games (mismatches: " + std::to_string(status_mismatch) + ")");
    c.check(t_mismatch == 0,
            "optimal lengths T exact (mismatches: " + std::to_string(t_mismatch) + ")");
    c.check(tstar_mismatch == 0,
            "forced horizons T* exact, both play conventions (mismatches: " +
                std::to_string(tstar_mismatch) + ")");
    c.check(trunc_mismatch == 0,
            "truncated boundaries exact (mismatches: " + std::to_string(trunc_mismatch) + ")");
}

// --------------------------------------------------------------- criterion 10
void criterion_10() {
    Criterion c(10, "length blow-up: finite inside, growing toward the threshold");

    int used = 0, finite = 0;
    for (int i = 0; used < 50 && i < 4000; ++i) {
        const auto d = random_distribution(stream_seed(0x10A, i), 1 + i % 8);
        const auto oc = outcomes(d);
        if (oc.d_raw > 1e-9 || std::abs(oc.slope_x_star + 1.0) <= 0.05) continue;
        ++used;
        const auto rep = expected_T(d, Game::normal);
        if (!rep.divergent && !rep.truncated_at_n_max) ++finite;
    }
    c.check(used == 50 && finite == 50,
            "expected_T finite for " + std::to_string(finite) + "/50 interior draw-free laws");

    const double ts[] = {0.80, 0.83, 0.85, 0.86};
    double et[4];
    bool et_increasing = true;
    for (int i = 0; i < 4; ++i) {
        const auto rep = expected_T(Family::binary().at(ts[i]), Game::normal, 100'000);
        et[i] = rep.e_t_moves;
        if (i > 0 && !(et[i] > et[i - 1])) et_increasing = false;
    }
    c.check(et_increasing, "expected_T strictly increases: " + fmt(et[0]) + ", " + fmt(et[1]) +
                               ", " + fmt(et[2]) + ", " + fmt(et[3]));

    double tstar[4];
    std::size_t cens[4];
    bool tstar_increasing = true;
    for (int i = 0; i < 4; ++i) {
        const auto est = expected_Tstar_mc(Family::binary().at(ts[i]), Game::normal, 64, 600,
                                           424242, 2, 100'000'000, 3'000'000);
        tstar[i] = est.lower_bound_mean;
        cens[i] = est.censored + est.skipped;
        if (i > 0 && !(tstar[i] > tstar[i - 1])) tstar_increasing = false;
    }
    c.note("T* estimates (lower-bound means, horizon cap 64): " + fmt(tstar[0]) + ", " +
           fmt(tstar[1]) + ", " + fmt(tstar[2]) + ", " + fmt(tstar[3]) + "; capped " +
           std::to_string(cens[0]) + ", " + std::to_string(cens[1]) + ", " +
           std::to_string(cens[2]) + ", " + std::to_string(cens[3]) + " of 600 each");
    c.note("deciding a single mark needs search depth comparable to the expected game length, "
           "which itself blows up at the threshold, so every bounded-resource estimate is "
           "capping-biased at the last two points; the check reports the honest outcome");
    c.check(tstar_increasing, "E[T*] estimates strictly increase across t = 0.80, 0.83, 0.85, 0.86");

    const double tn = std::sqrt(3.0) / 2.0;
    const double g85 = grandchild_mean(Family::binary().at(0.85), Game::normal);
    const double g86 = grandchild_mean(Family::binary().at(0.86), Game::normal);
    const double gat = grandchild_mean(Family::binary().at(tn - 1e-9), Game::normal);
    c.check(g85 < g86 && g86 < gat, "grandchild mean increases toward the threshold: " +
                                        fmt(g85) + ", " + fmt(g86) + ", " + fmt(gat));
    c.check(std::abs(gat - 1.0) <= 1e-4,
            "grandchild mean at the threshold: " + fmt(gat) + " within 1e-4 of 1");
}

// --------------------------------------------------------------- criterion 11
void criterion_11() {
    Criterion c(11, "fixed-point structure: paired roots and exact consistency identities");
    std::size_t pairing_checked = 0, pairing_failures = 0, tangency_skips = 0;
    double worst_residual = 0.0;

    auto inspect = [&](const OffspringDistribution& d) {
        const auto oc = outcomes(d);
        worst_residual = std::max(worst_residual, oc.max_residual);
        if (!d.is_finite_support()) return;
        if (d.max_degree() > 1000) return; // grid scan is pointless for the heavy-tail cases
        const auto fps = isolate_fixed_points(d, MapId::F2, 4000);
        if (!fps.unresolved.empty()) {
            ++tangency_skips;
            return;
        }
        for (double x : fps.all) {
            if (std::abs(x - fps.x_star) <= 1e-9) continue;
            const double fx = d.f(x);
            bool found = false;
            for (double y : fps.all)
                if (std::abs(y - fx) <= 1e-9) found = true;
            ++pairing_checked;
            if (!found) ++pairing_failures;
        }
        if (fps.all.size() > 1 && std::abs(d.f(fps.min_fp) - fps.max_fp) > 1e-9)
            ++pairing_failures;
    };

    for (int i = 0; i < 2000; ++i) inspect(random_distribution(stream_seed(0x11C, i), 1 + i % 8));
    for (const auto& cs : counterexample_suite().cases) {
        const auto pos = cs.descriptor.find(' ');
        inspect(parse_distribution(cs.descriptor.substr(pos + 1)));
    }
    for (double t : {0.3, 0.5, 0.7, 0.87, 0.89, 0.93, 0.97, 0.99}) inspect(Family::binary().at(t));
    for (double t : {0.985, 0.99, 0.995}) inspect(Family::exotic1().at(t));
    for (double t : {0.99, 0.995}) inspect(Family::exotic2().at(t));

    c.check(pairing_failures == 0, "roots pair under F: " + std::to_string(pairing_checked) +
                                       " paired, " + std::to_string(pairing_failures) +
                                       " failures, " + std::to_string(tangency_skips) +
                                       " tangency skips");
    c.check(pairing_checked > 200, "draw-positive laws exercised the pairing " +
                                       std::to_string(pairing_checked) + " times");
    c.check(worst_residual <= 1e-9,
            "worst consistency residual " + fmt(worst_residual) + " <= 1e-9");
}

} // namespace

int main() {
    std::printf("acceptance: outcome probabilities, transitions, lengths, oracle agreement\n");
    std::fflush(stdout);
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::printf("%d of 11 criteria failed\n", g_failed_criteria);
    return g_failed_criteria;
}
