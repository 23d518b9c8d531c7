#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwgames/outcomes.hpp"

namespace gwg {

/// The nine provable pairwise inequalities between the ten outcome
/// probabilities, as (lhs, rhs) symbol pairs meaning lhs <= rhs.
const std::vector<std::pair<std::string, std::string>>& outcome_inequalities();

/// The inequalities above closed under transitivity plus the complement
/// identity (S2 <= S1 maps to E2 <= E1 because E1 = 1-S2 and E2 = 1-S1).
/// Every ordered pair outside this list fails on some counterexample.
const std::vector<std::pair<std::string, std::string>>& implied_inequality_closure();

struct InequalityViolation {
    std::string lhs, rhs;
    double lhs_value = 0.0, rhs_value = 0.0;
    double margin = 0.0; // lhs_value - rhs_value, positive means violated
};

struct AuditResult {
    std::string descriptor;
    GameOutcomes oc;
    std::vector<InequalityViolation> violations;
    bool pass = true;
};

/// Checks all nine inequalities at tolerance tol.
AuditResult verify_inequalities(const OffspringDistribution& dist, double tol = 1e-9);

struct SuiteCheck {
    std::string name;
    double value = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct CounterexampleSuite {
    std::vector<AuditResult> cases;     // named distributions with their outcomes
    std::vector<SuiteCheck> checks;     // limit levels, asymptotic coefficients, orderings
    bool pass = true;
};

/// The adversarial catalogue: degenerate laws, the heavy-tail K-cases,
/// near-critical binary laws with their first-order expansion checks, and
/// the leafless perturbation where the escaper beats the misere draw.
/// Together with the everyday cases it violates every ordered pair of
/// outcome probabilities outside implied_inequality_closure().
CounterexampleSuite counterexample_suite();

struct RandomAuditSummary {
    std::size_t count = 0;
    std::size_t failures = 0;
    double worst_margin = 0.0; // most positive lhs-rhs margin seen
    std::string worst_descriptor;
};

/// verify_inequalities over `count` seeded random finite-support laws with
/// support size cycling 1..max_support.
RandomAuditSummary random_audit(std::size_t count, std::uint64_t seed, int max_support = 8,
                                double tol = 1e-9);

} // namespace gwg
