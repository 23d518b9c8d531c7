#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "gwgames/offspring.hpp"

namespace gwg {

enum class FamilyId {
    binary,        // (p0,p1,p2) = (1-t, 0, t),            t in [0,1]
    poisson,       // Poisson(t)
    geometric,     // Geometric(t)
    binomial_n,    // Binomial(n, t),                      t in [0,1]
    exotic1,       // G = (1-t) + t(0.5 x^2 + 0.5 x^10)
    exotic2,       // G = (1-t) + t(0.15 x^2 + 0.85 x^20)
    exotic3,       // G = (1/18 - t) + (2/3) x + (5/18 + t) x^3
    lerp,          // componentwise (1-t) p + t q, finite supports
};

/// One-parameter family of offspring laws. at(t) is valid on the closed
/// parameter range and throws std::invalid_argument outside it.
class Family {
public:
    static Family binary();
    static Family poisson(double lo = 0.05, double hi = 30.0);
    static Family geometric();
    static Family binomial(int n);
    static Family exotic1();
    static Family exotic2();
    static Family exotic3();
    static Family lerp(OffspringDistribution from, OffspringDistribution to);

    FamilyId id() const { return id_; }
    std::pair<double, double> range() const { return range_; }
    OffspringDistribution at(double t) const;
    std::string name() const;

private:
    Family(FamilyId id, double lo, double hi) : id_(id), range_(lo, hi) {}

    FamilyId id_;
    std::pair<double, double> range_;
    int binom_n_ = 0;
    std::vector<OffspringDistribution::Term> lerp_from_, lerp_to_;
};

/// Family ids: binary | poisson | geometric | binomial:<n> | exotic1 | exotic2 | exotic3
Family parse_family(std::string_view text);

} // namespace gwg
