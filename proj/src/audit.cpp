#include "gwgames/audit.hpp"

#include <algorithm>
#include <cmath>

#include "gwgames/family.hpp"
#include "gwgames/format.hpp"
#include "gwgames/rng.hpp"

namespace gwg {

const std::vector<std::pair<std::string, std::string>>& outcome_inequalities() {
    static const std::vector<std::pair<std::string, std::string>> nine = {
        {"N", "S1"}, {"Nm", "S1"}, {"P", "S2"}, {"Pm", "S2"}, {"S2", "S1"},
        {"Pm", "Nm"}, {"Pm", "P"}, {"Pm", "N"}, {"D", "Dm"},
    };
    return nine;
}

const std::vector<std::pair<std::string, std::string>>& implied_inequality_closure() {
    static const std::vector<std::pair<std::string, std::string>> closure = [] {
        auto pairs = outcome_inequalities();
        pairs.emplace_back("P", "S1");   // P <= S2 <= S1
        pairs.emplace_back("Pm", "S1");  // Pm <= S2 <= S1
        pairs.emplace_back("E2", "E1");  // complement of S2 <= S1
        return pairs;
    }();
    return closure;
}

AuditResult verify_inequalities(const OffspringDistribution& dist, double tol) {
    AuditResult res;
    res.descriptor = dist.literal();
    res.oc = outcomes(dist);
    for (const auto& [lhs, rhs] : outcome_inequalities()) {
        const double lv = res.oc.by_symbol(lhs);
        const double rv = res.oc.by_symbol(rhs);
        if (lv > rv + tol) {
            res.violations.push_back({lhs, rhs, lv, rv, lv - rv});
            res.pass = false;
        }
    }
    return res;
}

namespace {

AuditResult named_case(const std::string& name, const OffspringDistribution& dist) {
    AuditResult res = verify_inequalities(dist);
    res.descriptor = name + " " + dist.literal();
    return res;
}

void add_check(CounterexampleSuite& suite, const std::string& name, double value, double expected,
               double tolerance) {
    SuiteCheck c;
    c.name = name;
    c.value = value;
    c.expected = expected;
    c.tolerance = tolerance;
    c.pass = std::abs(value - expected) <= tolerance;
    suite.checks.push_back(c);
    if (!c.pass) suite.pass = false;
}

void add_bound(CounterexampleSuite& suite, const std::string& name, double value, double bound,
               bool upper) {
    SuiteCheck c;
    c.name = name;
    c.value = value;
    c.expected = bound;
    c.tolerance = 0.0;
    c.pass = upper ? value <= bound : value >= bound;
    suite.checks.push_back(c);
    if (!c.pass) suite.pass = false;
}

// Two-point Richardson step assuming value(eps) = a + b*eps: recovers a.
double richardson(double eps1, double v1, double eps2, double v2) {
    return (eps1 * v2 - eps2 * v1) / (eps1 - eps2);
}

} // namespace

CounterexampleSuite counterexample_suite() {
    CounterexampleSuite suite;
    const auto binary = Family::binary();

    suite.cases.push_back(named_case("p0=1", OffspringDistribution::point_mass(0)));
    suite.cases.push_back(named_case("p0=0", OffspringDistribution::finite({0.0, 0.5, 0.5})));

    // Heavy-tail cases: near-certain huge fanout with a sliver of leaves and
    // unary nodes. N, Nm, E1, S1 approach 1, everything else approaches 0.
    for (std::uint64_t K : {100ull, 1000ull}) {
        const OffspringDistribution d = OffspringDistribution::finite_sparse(
            {{0, 1.0 / K}, {1, 1.0 / K}, {K * K * K, 1.0 - 2.0 / K}});
        suite.cases.push_back(named_case("K=" + std::to_string(K), d));
        const GameOutcomes& oc = suite.cases.back().oc;
        for (const char* big : {"N", "Nm", "E1", "S1"})
            add_bound(suite, "K=" + std::to_string(K) + " " + big + " >= 0.9", oc.by_symbol(big),
                      0.9, false);
        for (const char* small : {"P", "D", "Pm", "Dm", "E2", "S2"})
            add_bound(suite, "K=" + std::to_string(K) + " " + small + " <= 0.1",
                      oc.by_symbol(small), 0.1, true);
    }

    // Binary branching with survival probability 1 - eps: expansions
    // N = 2 eps + O(eps^2), S2 = eps + 9 eps^2, P = eps + 4 eps^2, Nm ~ eps,
    // giving the strict ordering N > S2 > P > Nm.
    const double eps1 = 1e-2, eps2 = 1e-3;
    GameOutcomes oc1, oc2;
    for (double eps : {eps1, eps2}) {
        suite.cases.push_back(named_case("binary(1-" + format_number(eps) + ")",
                                         binary.at(1.0 - eps)));
        (eps == eps1 ? oc1 : oc2) = suite.cases.back().oc;
        const GameOutcomes& oc = suite.cases.back().oc;
        add_bound(suite, "binary(1-" + format_number(eps) + ") N > S2", oc.n - oc.s2, 1e-6, false);
        add_bound(suite, "binary(1-" + format_number(eps) + ") S2 > P", oc.s2 - oc.p, 1e-6, false);
        add_bound(suite, "binary(1-" + format_number(eps) + ") P > Nm", oc.p - oc.n_mis, 1e-6,
                  false);
        add_bound(suite, "binary(1-" + format_number(eps) + ") |N-2eps| <= 10 eps^2",
                  std::abs(oc.n - 2.0 * eps), 10.0 * eps * eps, true);
    }
    add_check(suite, "N/eps -> 2", richardson(eps1, oc1.n / eps1, eps2, oc2.n / eps2), 2.0, 1e-3);
    add_check(suite, "Nm/eps -> 1", richardson(eps1, oc1.n_mis / eps1, eps2, oc2.n_mis / eps2),
              1.0, 1e-3);
    add_check(suite, "(S2-eps)/eps^2 -> 9",
              richardson(eps1, (oc1.s2 - eps1) / (eps1 * eps1), eps2,
                         (oc2.s2 - eps2) / (eps2 * eps2)),
              9.0, 0.1);
    add_check(suite, "(P-eps)/eps^2 -> 4",
              richardson(eps1, (oc1.p - eps1) / (eps1 * eps1), eps2,
                         (oc2.p - eps2) / (eps2 * eps2)),
              4.0, 0.1);

    // Leafless-in-the-limit law (eps, 2/3, 0, 1/3 - eps): no draws for
    // eps > 0, but mu p1 > 1 keeps the escaper alive, so E2 > Dm = 0.
    {
        const double eps = 1e-3;
        const OffspringDistribution d =
            OffspringDistribution::finite({eps, 2.0 / 3.0, 0.0, 1.0 / 3.0 - eps});
        suite.cases.push_back(named_case("leafless-eps", d));
        const GameOutcomes& oc = suite.cases.back().oc;
        add_bound(suite, "leafless-eps D == 0", oc.d_raw, 1e-9, true);
        add_bound(suite, "leafless-eps Dm == 0", oc.d_mis_raw, 1e-9, true);
        add_bound(suite, "leafless-eps E2 > 0", oc.e2, 1e-6, false);
    }

    // Plain binary points that witness the remaining orderings
    // (misere draws without normal draws, draws without escapes).
    suite.cases.push_back(named_case("binary(0.7)", binary.at(0.7)));
    suite.cases.push_back(named_case("binary(0.8)", binary.at(0.8)));
    suite.cases.push_back(named_case("binary(0.9)", binary.at(0.9)));

    for (const auto& c : suite.cases)
        if (!c.pass) suite.pass = false;
    return suite;
}

RandomAuditSummary random_audit(std::size_t count, std::uint64_t seed, int max_support,
                                double tol) {
    if (max_support < 1) throw std::invalid_argument("max_support must be >= 1");
    RandomAuditSummary summary;
    summary.count = count;
    for (std::size_t i = 0; i < count; ++i) {
        const int support = 1 + static_cast<int>(i % static_cast<std::size_t>(max_support));
        const OffspringDistribution d = random_distribution(stream_seed(seed, i), support);
        const AuditResult res = verify_inequalities(d, tol);
        if (!res.pass) {
            summary.failures += 1;
            for (const auto& v : res.violations) {
                if (v.margin > summary.worst_margin) {
                    summary.worst_margin = v.margin;
                    summary.worst_descriptor = res.descriptor + " " + v.lhs + ">" + v.rhs;
                }
            }
        }
    }
    return summary;
}

} // namespace gwg
