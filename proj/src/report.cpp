#include "gwgames/report.hpp"

#include <cmath>

#include "gwgames/format.hpp"

namespace gwg {

Json Json::object() { Json j; j.type_ = Type::object; return j; }
Json Json::array() { Json j; j.type_ = Type::array; return j; }
Json Json::number(double v) { Json j; j.type_ = Type::number; j.num_ = v; return j; }
Json Json::integer(std::int64_t v) { Json j; j.type_ = Type::integer; j.int_ = v; return j; }
Json Json::uinteger(std::uint64_t v) { Json j; j.type_ = Type::uinteger; j.uint_ = v; return j; }
Json Json::boolean(bool v) { Json j; j.type_ = Type::boolean; j.bool_ = v; return j; }
Json Json::string(std::string v) { Json j; j.type_ = Type::string; j.str_ = std::move(v); return j; }

Json& Json::set(const std::string& key, Json v) {
    members_.emplace_back(key, std::move(v));
    return *this;
}

Json& Json::push(Json v) {
    items_.push_back(std::move(v));
    return *this;
}

namespace {

void escape_into(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
}

} // namespace

void Json::dump_to(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (type_) {
        case Type::object: {
            if (members_.empty()) { out += "{}"; return; }
            out += "{\n";
            for (std::size_t i = 0; i < members_.size(); ++i) {
                out += pad_in;
                escape_into(out, members_[i].first);
                out += ": ";
                members_[i].second.dump_to(out, indent, depth + 1);
                if (i + 1 != members_.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            return;
        }
        case Type::array: {
            if (items_.empty()) { out += "[]"; return; }
            out += "[\n";
            for (std::size_t i = 0; i < items_.size(); ++i) {
                out += pad_in;
                items_[i].dump_to(out, indent, depth + 1);
                if (i + 1 != items_.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            return;
        }
        case Type::number:
            if (std::isfinite(num_)) out += format_number(num_);
            else escape_into(out, num_ > 0 ? "inf" : (num_ < 0 ? "-inf" : "nan"));
            return;
        case Type::integer: out += std::to_string(int_); return;
        case Type::uinteger: out += std::to_string(uint_); return;
        case Type::boolean: out += bool_ ? "true" : "false"; return;
        case Type::string: escape_into(out, str_); return;
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    dump_to(out, indent, 0);
    out += '\n';
    return out;
}

namespace {

Json solves_json(const GameOutcomes& oc) {
    Json arr = Json::array();
    for (const auto& s : oc.solves) {
        Json j = Json::object();
        j.set("map", Json::string(map_name(s.map)));
        j.set("from", Json::integer(s.from_zero ? 0 : 1));
        j.set("iterations", Json::integer(s.iterations));
        j.set("converged", Json::boolean(s.converged));
        j.set("refined_by_bisection", Json::boolean(s.refined));
        arr.push(std::move(j));
    }
    return arr;
}

} // namespace

Json outcomes_report(const OffspringDistribution& dist, const GameOutcomes& oc) {
    Json j = Json::object();
    j.set("distribution", Json::string(dist.literal()));
    j.set("mean", Json::number(dist.mean()));
    Json probs = Json::object();
    probs.set("N", Json::number(oc.n));
    probs.set("P", Json::number(oc.p));
    probs.set("D", Json::number(oc.d));
    probs.set("Nm", Json::number(oc.n_mis));
    probs.set("Pm", Json::number(oc.p_mis));
    probs.set("Dm", Json::number(oc.d_mis));
    probs.set("S1", Json::number(oc.s1));
    probs.set("S2", Json::number(oc.s2));
    probs.set("E1", Json::number(oc.e1));
    probs.set("E2", Json::number(oc.e2));
    j.set("probabilities", std::move(probs));
    Json diag = Json::object();
    diag.set("D_raw", Json::number(oc.d_raw));
    diag.set("Dm_raw", Json::number(oc.d_mis_raw));
    diag.set("x_star", Json::number(oc.x_star));
    diag.set("slope_at_x_star", Json::number(oc.slope_x_star));
    diag.set("x_star_misere", Json::number(oc.x_star_mis));
    diag.set("slope_at_x_star_misere", Json::number(oc.slope_x_star_mis));
    j.set("diagnostics", std::move(diag));
    Json res = Json::object();
    res.set("one_minus_P_vs_F_of_N", Json::number(oc.residuals[0]));
    res.set("N_vs_F_of_one_minus_P", Json::number(oc.residuals[1]));
    res.set("one_minus_Pm_vs_H_of_Nm", Json::number(oc.residuals[2]));
    res.set("Nm_vs_H_of_one_minus_Pm", Json::number(oc.residuals[3]));
    res.set("S1_vs_H_of_E1", Json::number(oc.residuals[4]));
    res.set("E1_vs_F_of_S1", Json::number(oc.residuals[5]));
    res.set("max", Json::number(oc.max_residual));
    j.set("residuals", std::move(res));
    j.set("solves", solves_json(oc));
    return j;
}

Json fixed_point_report(const OffspringDistribution& dist, const FixedPointSet& fps) {
    Json j = Json::object();
    j.set("distribution", Json::string(dist.literal()));
    j.set("map", Json::string(map_name(fps.map_id)));
    Json roots = Json::array();
    for (double r : fps.all) roots.push(Json::number(r));
    j.set("fixed_points", std::move(roots));
    j.set("min", Json::number(fps.min_fp));
    j.set("max", Json::number(fps.max_fp));
    Json unresolved = Json::array();
    for (double r : fps.unresolved) unresolved.push(Json::number(r));
    j.set("unresolved_tangencies", std::move(unresolved));
    j.set("x_star", Json::number(fps.x_star));
    j.set("slope_at_x_star", Json::number(fps.slope_at_x_star));
    return j;
}

namespace {

Json estimate_json(const Estimate& e) {
    Json j = Json::object();
    j.set("value", Json::number(e.value));
    j.set("se", Json::number(e.se));
    return j;
}

Json histogram_json(const std::vector<std::uint64_t>& hist) {
    Json arr = Json::array();
    for (std::uint64_t v : hist) arr.push(Json::uinteger(v));
    return arr;
}

} // namespace

Json mc_report(const OffspringDistribution& dist, const McEstimate& est) {
    Json j = Json::object();
    j.set("distribution", Json::string(dist.literal()));
    j.set("game", Json::string(game_name(est.game)));
    j.set("mode", Json::string(est.mode == McMode::statuses ? "statuses" : "full"));
    j.set("depth_cutoff", Json::integer(est.depth_cutoff));
    j.set("seed", Json::uinteger(est.seed));
    j.set("samples", Json::uinteger(est.n_samples));
    j.set("effective_samples", Json::uinteger(est.n_effective));
    j.set("skipped", Json::uinteger(est.skipped));
    j.set("explored_nodes", Json::uinteger(est.explored_nodes));
    if (est.game == Game::escape) {
        j.set("S1", estimate_json(est.s1));
        j.set("S2", estimate_json(est.s2));
        j.set("E1", estimate_json(est.e1));
        j.set("E2", estimate_json(est.e2));
    } else {
        j.set("next_win", estimate_json(est.next_win));
        j.set("prev_win", estimate_json(est.prev_win));
        j.set("undecided", estimate_json(est.undecided));
        j.set("censored", Json::uinteger(est.censored));
        if (est.mode == McMode::full) {
            j.set("T_mean", Json::number(est.mean_t));
            j.set("T_se", Json::number(est.se_t));
            j.set("T_count", Json::uinteger(est.t_count));
            j.set("T_histogram", histogram_json(est.t_histogram));
            j.set("Tstar_mean", Json::number(est.mean_tstar));
            j.set("Tstar_se", Json::number(est.se_tstar));
            j.set("Tstar_count", Json::uinteger(est.tstar_count));
            j.set("Tstar_censored", Json::uinteger(est.tstar_censored));
            j.set("Tstar_histogram", histogram_json(est.tstar_histogram));
        }
    }
    j.set("seconds", Json::number(est.seconds));
    return j;
}

Json length_report_json(const OffspringDistribution& dist, const LengthReport& rep,
                        const TstarEstimate* tstar) {
    Json j = Json::object();
    j.set("distribution", Json::string(dist.literal()));
    j.set("game", Json::string(game_name(rep.game)));
    j.set("divergent", Json::boolean(rep.divergent));
    if (rep.divergent) {
        j.set("E_T", Json::string("divergent"));
    } else {
        j.set("E_T", Json::number(rep.e_t_moves));
        j.set("E_T_series_raw", Json::number(rep.e_t_raw));
    }
    j.set("terms_used", Json::integer(rep.terms_used));
    j.set("tail_ratio", Json::number(rep.tail_ratio));
    j.set("truncated_at_n_max", Json::boolean(rep.truncated_at_n_max));
    if (rep.truncated_at_n_max) j.set("tail_bound", Json::number(rep.tail_bound));
    j.set("draw_probability", Json::number(rep.draw_probability));
    if (!rep.divergent) j.set("grandchild_mean", Json::number(rep.grandchild_mean));
    Json partial = Json::array();
    for (double s : rep.partial_sums) partial.push(Json::number(s));
    j.set("partial_sums", std::move(partial));
    if (tstar != nullptr) {
        Json t = Json::object();
        t.set("mean", Json::number(tstar->mean));
        t.set("se", Json::number(tstar->se));
        t.set("count", Json::uinteger(tstar->count));
        t.set("censored", Json::uinteger(tstar->censored));
        t.set("skipped", Json::uinteger(tstar->skipped));
        t.set("draw_warning", Json::boolean(tstar->draw_warning));
        t.set("histogram", histogram_json(tstar->histogram));
        j.set("E_Tstar_mc", std::move(t));
    }
    return j;
}

Json transition_report_json(const TransitionReport& rep) {
    Json j = Json::object();
    j.set("family", Json::string(rep.family));
    j.set("game", Json::string(game_name(rep.game)));
    j.set("t_critical", Json::number(rep.t_critical));
    j.set("classification", Json::string(transition_kind_name(rep.classification)));
    j.set("jump", Json::number(rep.jump));
    j.set("value_below", Json::number(rep.value_below));
    j.set("value_at", Json::number(rep.value_at));
    j.set("slope_diagnostic", Json::number(rep.slope_diagnostic));
    if (rep.game == Game::escape) {
        j.set("mu_p1", Json::number(rep.mu_p1));
        j.set("mu_p1_crossing", Json::boolean(rep.mu_p1_crossing));
    }
    j.set("bracket_width", Json::number(rep.bracket_width));
    Json emerging = Json::array();
    for (double r : rep.emerging_roots) emerging.push(Json::number(r));
    j.set("emerging_roots", std::move(emerging));
    Json deltas = Json::array();
    for (const auto& [d, v] : rep.deltas) {
        Json row = Json::object();
        row.set("delta", Json::number(d));
        row.set("order_parameter", Json::number(v));
        deltas.push(std::move(row));
    }
    j.set("delta_samples", std::move(deltas));
    return j;
}

Json audit_report_json(const CounterexampleSuite& suite, const RandomAuditSummary* random_summary) {
    Json j = Json::object();
    j.set("pass", Json::boolean(suite.pass && (random_summary == nullptr ||
                                               random_summary->failures == 0)));
    Json cases = Json::array();
    for (const auto& c : suite.cases) {
        Json row = Json::object();
        row.set("case", Json::string(c.descriptor));
        Json probs = Json::object();
        for (const char* s : {"N", "P", "D", "Nm", "Pm", "Dm", "S1", "S2", "E1", "E2"})
            probs.set(s, Json::number(c.oc.by_symbol(s)));
        row.set("probabilities", std::move(probs));
        row.set("pass", Json::boolean(c.pass));
        if (!c.violations.empty()) {
            Json v = Json::array();
            for (const auto& viol : c.violations)
                v.push(Json::string(viol.lhs + " > " + viol.rhs + " by " +
                                    format_number(viol.margin)));
            row.set("violations", std::move(v));
        }
        cases.push(std::move(row));
    }
    j.set("cases", std::move(cases));
    Json checks = Json::array();
    for (const auto& c : suite.checks) {
        Json row = Json::object();
        row.set("check", Json::string(c.name));
        row.set("value", Json::number(c.value));
        row.set("expected", Json::number(c.expected));
        row.set("tolerance", Json::number(c.tolerance));
        row.set("pass", Json::boolean(c.pass));
        checks.push(std::move(row));
    }
    j.set("checks", std::move(checks));
    if (random_summary != nullptr) {
        Json r = Json::object();
        r.set("count", Json::uinteger(random_summary->count));
        r.set("failures", Json::uinteger(random_summary->failures));
        if (random_summary->failures > 0) {
            r.set("worst_margin", Json::number(random_summary->worst_margin));
            r.set("worst_case", Json::string(random_summary->worst_descriptor));
        }
        j.set("random_audit", std::move(r));
    }
    return j;
}

std::string curve_csv(const std::vector<std::pair<double, double>>& rows) {
    std::string out = "x,value\n";
    for (const auto& [x, v] : rows) out += format_number(x) + "," + format_number(v) + "\n";
    return out;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "t,N,P,D,Nm,Pm,Dm,S1,S2,E1,E2\n";
    for (const auto& row : rows) {
        if (row.failed) {
            out += format_number(row.t) + ",error,error,error,error,error,error,error,error,error,error\n";
            continue;
        }
        out += format_number(row.t);
        for (const char* s : {"N", "P", "D", "Nm", "Pm", "Dm", "S1", "S2", "E1", "E2"})
            out += "," + format_number(row.oc.by_symbol(s));
        out += "\n";
    }
    return out;
}

} // namespace gwg
