#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "gwgames/errors.hpp"
#include "gwgames/family.hpp"
#include "gwgames/report.hpp"

namespace {

using namespace gwg;

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t value) {
    if (opt->count() > 0) return value;
    if (const char* env = std::getenv("GWGAMES_SEED")) return std::strtoull(env, nullptr, 10);
    return value;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << text;
}

int thread_count(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"games on sampled branching trees: exact outcome probabilities, "
                 "phase transitions, lengths, and a Monte Carlo cross-check"};
    app.require_subcommand(1);

    std::string output;
    app.add_option("-o,--output", output, "output path (default stdout)");

    // outcomes
    auto* cmd_outcomes = app.add_subcommand("outcomes", "ten outcome probabilities of one law");
    std::string oc_dist;
    double oc_tol = 1e-12;
    cmd_outcomes->add_option("dist", oc_dist, "distribution literal")->required();
    cmd_outcomes->add_option("--tol", oc_tol, "fixed-point iteration tolerance");

    // roots
    auto* cmd_roots = app.add_subcommand("roots", "isolate fixed points of one composed map");
    std::string rt_dist, rt_map = "F2";
    int rt_res = 10'000;
    cmd_roots->add_option("dist", rt_dist, "distribution literal")->required();
    cmd_roots->add_option("--map", rt_map, "F2 | H2 | FH | HF | F | H");
    cmd_roots->add_option("--res", rt_res, "grid resolution");

    // curve
    auto* cmd_curve = app.add_subcommand("curve", "CSV samples of map(x)-x for plotting");
    std::string cv_dist, cv_map = "F2";
    int cv_res = 1000;
    cmd_curve->add_option("--dist", cv_dist, "distribution literal")->required();
    cmd_curve->add_option("--map", cv_map, "F2 | H2 | FH | HF | F | H");
    cmd_curve->add_option("--res", cv_res, "number of grid cells");

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "CSV of all ten outcomes over a parameter grid");
    std::string sc_family;
    double sc_from = 0.0, sc_to = 0.0;
    int sc_points = 101;
    cmd_scan->add_option("--family", sc_family, "family id")->required();
    cmd_scan->add_option("--from", sc_from, "grid start")->required();
    cmd_scan->add_option("--to", sc_to, "grid end")->required();
    cmd_scan->add_option("--points", sc_points, "grid points");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "locate and classify a phase transition");
    std::string cl_family, cl_game = "normal";
    double cl_lo = 0.0, cl_hi = 0.0, cl_tol_t = 1e-10;
    bool cl_multi = false;
    int cl_prescan = 1000;
    cmd_classify->add_option("--family", cl_family, "family id")->required();
    cmd_classify->add_option("--game", cl_game, "normal | misere | escape");
    auto* cl_lo_opt = cmd_classify->add_option("--lo", cl_lo, "bracket start (default family range)");
    auto* cl_hi_opt = cmd_classify->add_option("--hi", cl_hi, "bracket end (default family range)");
    cmd_classify->add_option("--tol-t", cl_tol_t, "bisection bracket width");
    cmd_classify->add_flag("--multi", cl_multi, "pre-scan for several transitions and classify each");
    cmd_classify->add_option("--prescan", cl_prescan, "pre-scan points for --multi");

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo outcome estimates");
    std::string sm_dist, sm_game = "normal";
    int sm_depth = 30, sm_threads = 0;
    std::size_t sm_samples = 100'000;
    std::uint64_t sm_seed = 12345, sm_budget = 10'000'000;
    bool sm_full = false;
    cmd_sim->add_option("--dist", sm_dist, "distribution literal")->required();
    cmd_sim->add_option("--game", sm_game, "normal | misere | escape");
    cmd_sim->add_option("--depth", sm_depth, "truncation depth");
    cmd_sim->add_option("--samples", sm_samples, "number of sampled trees");
    auto* sm_seed_opt = cmd_sim->add_option("--seed", sm_seed, "master seed (or GWGAMES_SEED)");
    cmd_sim->add_option("--budget", sm_budget, "per-tree node budget");
    cmd_sim->add_flag("--full-stats", sm_full, "materialize trees; adds T and T* statistics");
    cmd_sim->add_option("--threads", sm_threads, "worker threads (0 = hardware)");

    // lengths
    auto* cmd_len = app.add_subcommand("lengths", "expected game length and reduced-tree height");
    std::string ln_dist, ln_game = "normal";
    long ln_nmax = 10'000;
    int ln_depth = 40, ln_threads = 0;
    std::size_t ln_samples = 10'000;
    std::uint64_t ln_seed = 12345;
    cmd_len->add_option("--dist", ln_dist, "distribution literal")->required();
    cmd_len->add_option("--game", ln_game, "normal | misere");
    cmd_len->add_option("--n-max", ln_nmax, "series term cap");
    cmd_len->add_option("--depth", ln_depth, "Monte Carlo truncation depth for T*");
    cmd_len->add_option("--samples", ln_samples, "Monte Carlo samples for T* (0 disables)");
    auto* ln_seed_opt = cmd_len->add_option("--seed", ln_seed, "master seed (or GWGAMES_SEED)");
    cmd_len->add_option("--threads", ln_threads, "worker threads (0 = hardware)");

    // audit
    auto* cmd_audit = app.add_subcommand("audit", "inequality audit and counterexample catalogue");
    std::size_t au_random = 0;
    std::uint64_t au_seed = 12345;
    int au_support = 8;
    cmd_audit->add_option("--random", au_random, "additionally audit this many random laws");
    auto* au_seed_opt = cmd_audit->add_option("--seed", au_seed, "master seed (or GWGAMES_SEED)");
    cmd_audit->add_option("--max-support", au_support, "max support size of random laws");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_outcomes->parsed()) {
            const auto dist = parse_distribution(oc_dist);
            emit(outcomes_report(dist, outcomes(dist, oc_tol)).dump(), output);
        } else if (cmd_roots->parsed()) {
            const auto dist = parse_distribution(rt_dist);
            const auto fps = isolate_fixed_points(dist, parse_map(rt_map), rt_res);
            emit(fixed_point_report(dist, fps).dump(), output);
        } else if (cmd_curve->parsed()) {
            const auto dist = parse_distribution(cv_dist);
            emit(curve_csv(curve_samples(dist, parse_map(cv_map), cv_res)), output);
        } else if (cmd_scan->parsed()) {
            const auto family = parse_family(sc_family);
            emit(scan_csv(scan_curve(family, linear_grid(sc_from, sc_to, sc_points))), output);
        } else if (cmd_classify->parsed()) {
            const auto family = parse_family(cl_family);
            const Game game = parse_game(cl_game);
            const auto [range_lo, range_hi] = family.range();
            const double lo = cl_lo_opt->count() ? cl_lo : range_lo;
            const double hi = cl_hi_opt->count() ? cl_hi : range_hi;
            if (cl_multi) {
                Json arr = Json::array();
                for (const auto& tr : find_transitions(family, game, lo, hi, cl_prescan, 0.05,
                                                       cl_tol_t)) {
                    TransitionReport rep = classify_transition(family, game, tr.t);
                    rep.bracket_width = cl_tol_t;
                    arr.push(transition_report_json(rep));
                }
                emit(arr.dump(), output);
            } else {
                const double tc = critical_parameter(family, game, lo, hi, cl_tol_t);
                TransitionReport rep = classify_transition(family, game, tc);
                rep.bracket_width = cl_tol_t;
                emit(transition_report_json(rep).dump(), output);
            }
        } else if (cmd_sim->parsed()) {
            const auto dist = parse_distribution(sm_dist);
            McOptions opts;
            opts.mode = sm_full ? McMode::full : McMode::statuses;
            opts.node_budget = sm_budget;
            opts.threads = thread_count(sm_threads);
            const auto est = monte_carlo(dist, parse_game(sm_game), sm_depth, sm_samples,
                                         resolve_seed(sm_seed_opt, sm_seed), opts);
            emit(mc_report(dist, est).dump(), output);
        } else if (cmd_len->parsed()) {
            const auto dist = parse_distribution(ln_dist);
            const Game game = parse_game(ln_game);
            const auto rep = expected_T(dist, game, ln_nmax);
            if (ln_samples > 0) {
                const auto tstar =
                    expected_Tstar_mc(dist, game, ln_depth, ln_samples,
                                      resolve_seed(ln_seed_opt, ln_seed), thread_count(ln_threads));
                emit(length_report_json(dist, rep, &tstar).dump(), output);
            } else {
                emit(length_report_json(dist, rep, nullptr).dump(), output);
            }
        } else if (cmd_audit->parsed()) {
            const auto suite = counterexample_suite();
            if (au_random > 0) {
                const auto summary =
                    random_audit(au_random, resolve_seed(au_seed_opt, au_seed), au_support);
                emit(audit_report_json(suite, &summary).dump(), output);
                if (!suite.pass || summary.failures > 0) return 1;
            } else {
                emit(audit_report_json(suite, nullptr).dump(), output);
                if (!suite.pass) return 1;
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
