#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gwgames/audit.hpp"
#include "gwgames/fixed_point.hpp"
#include "gwgames/lengths.hpp"
#include "gwgames/monte_carlo.hpp"
#include "gwgames/outcomes.hpp"
#include "gwgames/scan.hpp"

namespace gwg {

/// Minimal ordered JSON value. Numbers print through format_number (12
/// significant digits), insertion order is preserved, and dumping is
/// deterministic, which gives byte-identical reports for identical runs.
class Json {
public:
    static Json object();
    static Json array();
    static Json number(double v);
    static Json integer(std::int64_t v);
    static Json uinteger(std::uint64_t v);
    static Json boolean(bool v);
    static Json string(std::string v);

    Json& set(const std::string& key, Json v);    // object
    Json& push(Json v);                           // array
    std::string dump(int indent = 2) const;

private:
    enum class Type { object, array, number, integer, uinteger, boolean, string };
    Type type_ = Type::object;
    double num_ = 0.0;
    std::int64_t int_ = 0;
    std::uint64_t uint_ = 0;
    bool bool_ = false;
    std::string str_;
    std::vector<std::pair<std::string, Json>> members_;
    std::vector<Json> items_;

    void dump_to(std::string& out, int indent, int depth) const;
};

Json outcomes_report(const OffspringDistribution& dist, const GameOutcomes& oc);
Json fixed_point_report(const OffspringDistribution& dist, const FixedPointSet& fps);
Json mc_report(const OffspringDistribution& dist, const McEstimate& est);
Json length_report_json(const OffspringDistribution& dist, const LengthReport& rep,
                        const TstarEstimate* tstar);
Json transition_report_json(const TransitionReport& rep);
Json audit_report_json(const CounterexampleSuite& suite, const RandomAuditSummary* random_summary);

/// CSV with header "x,value".
std::string curve_csv(const std::vector<std::pair<double, double>>& rows);
/// CSV with header "t,N,P,D,Nm,Pm,Dm,S1,S2,E1,E2"; failed rows keep the grid
/// point and carry the error in a trailing comment column-free line.
std::string scan_csv(const std::vector<ScanRow>& rows);

} // namespace gwg
