#include "gwgames/family.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gwg {

namespace {

double parse_double(std::string_view s) {
    std::string tmp(s);
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(tmp, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed number '" + tmp + "'");
    }
    if (pos != tmp.size()) throw std::invalid_argument("malformed number '" + tmp + "'");
    return v;
}

long parse_long(std::string_view s) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        auto pos = s.find(sep);
        if (pos == std::string_view::npos) {
            out.push_back(s);
            return out;
        }
        out.push_back(s.substr(0, pos));
        s.remove_prefix(pos + 1);
    }
}

} // namespace

Family Family::binary() { return Family(FamilyId::binary, 0.0, 1.0); }

Family Family::poisson(double lo, double hi) { return Family(FamilyId::poisson, lo, hi); }

Family Family::geometric() { return Family(FamilyId::geometric, 1e-9, 1.0 - 1e-9); }

Family Family::binomial(int n) {
    if (n < 1) throw std::invalid_argument("binomial family needs n >= 1");
    Family f(FamilyId::binomial_n, 0.0, 1.0);
    f.binom_n_ = n;
    return f;
}

Family Family::exotic1() { return Family(FamilyId::exotic1, 0.0, 1.0); }

Family Family::exotic2() { return Family(FamilyId::exotic2, 0.0, 1.0); }

Family Family::exotic3() { return Family(FamilyId::exotic3, -5.0 / 18.0, 1.0 / 18.0); }

Family Family::lerp(OffspringDistribution from, OffspringDistribution to) {
    if (!from.is_finite_support() || !to.is_finite_support())
        throw std::invalid_argument("lerp family needs finite-support endpoints");
    Family f(FamilyId::lerp, 0.0, 1.0);
    f.lerp_from_ = from.terms();
    f.lerp_to_ = to.terms();
    return f;
}

OffspringDistribution Family::at(double t) const {
    if (!(t >= range_.first && t <= range_.second))
        throw std::invalid_argument(name() + " parameter " + std::to_string(t) + " outside range");
    switch (id_) {
        case FamilyId::binary:
            return OffspringDistribution::finite({1.0 - t, 0.0, t});
        case FamilyId::poisson:
            return OffspringDistribution::poisson(t);
        case FamilyId::geometric:
            return OffspringDistribution::geometric(t);
        case FamilyId::binomial_n:
            return OffspringDistribution::binomial(binom_n_, t);
        case FamilyId::exotic1:
            return OffspringDistribution::finite_sparse({{0, 1.0 - t}, {2, 0.5 * t}, {10, 0.5 * t}});
        case FamilyId::exotic2:
            return OffspringDistribution::finite_sparse({{0, 1.0 - t}, {2, 0.15 * t}, {20, 0.85 * t}});
        case FamilyId::exotic3:
            return OffspringDistribution::finite_sparse(
                {{0, 1.0 / 18.0 - t}, {1, 2.0 / 3.0}, {3, 5.0 / 18.0 + t}});
        case FamilyId::lerp: {
            std::map<std::uint64_t, double> acc;
            for (const auto& [k, p] : lerp_from_) acc[k] += (1.0 - t) * p;
            for (const auto& [k, p] : lerp_to_) acc[k] += t * p;
            std::vector<OffspringDistribution::Term> terms(acc.begin(), acc.end());
            return OffspringDistribution::finite_sparse(std::move(terms));
        }
    }
    throw std::logic_error("unhandled family id");
}

std::string Family::name() const {
    switch (id_) {
        case FamilyId::binary: return "binary";
        case FamilyId::poisson: return "poisson";
        case FamilyId::geometric: return "geometric";
        case FamilyId::binomial_n: return "binomial:" + std::to_string(binom_n_);
        case FamilyId::exotic1: return "exotic1";
        case FamilyId::exotic2: return "exotic2";
        case FamilyId::exotic3: return "exotic3";
        case FamilyId::lerp: return "lerp";
    }
    return {};
}

Family parse_family(std::string_view text) {
    if (text == "binary") return Family::binary();
    if (text == "poisson") return Family::poisson();
    if (text == "geometric") return Family::geometric();
    if (text == "exotic1") return Family::exotic1();
    if (text == "exotic2") return Family::exotic2();
    if (text == "exotic3") return Family::exotic3();
    if (text.rfind("binomial:", 0) == 0)
        return Family::binomial(static_cast<int>(parse_long(text.substr(9))));
    throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

OffspringDistribution parse_distribution(std::string_view literal) {
    auto colon = literal.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("distribution literal needs a '<kind>:' prefix: '" +
                                    std::string(literal) + "'");
    const std::string_view kind = literal.substr(0, colon);
    const std::string_view body = literal.substr(colon + 1);

    if (kind == "finite") {
        std::vector<double> probs;
        for (auto part : split(body, ',')) probs.push_back(parse_double(part));
        return OffspringDistribution::finite(probs);
    }
    if (kind == "sparse") {
        std::vector<OffspringDistribution::Term> terms;
        for (auto part : split(body, ',')) {
            auto eq = part.find('=');
            if (eq == std::string_view::npos)
                throw std::invalid_argument("sparse term needs '<degree>=<prob>'");
            terms.emplace_back(static_cast<std::uint64_t>(parse_long(part.substr(0, eq))),
                               parse_double(part.substr(eq + 1)));
        }
        return OffspringDistribution::finite_sparse(std::move(terms));
    }
    if (kind == "poisson") return OffspringDistribution::poisson(parse_double(body));
    if (kind == "geometric") return OffspringDistribution::geometric(parse_double(body));
    if (kind == "binomial") {
        auto parts = split(body, ',');
        if (parts.size() != 2) throw std::invalid_argument("binomial literal is 'binomial:<n>,<p>'");
        return OffspringDistribution::binomial(static_cast<int>(parse_long(parts[0])),
                                               parse_double(parts[1]));
    }
    if (kind == "family") {
        auto at = body.rfind('@');
        if (at == std::string_view::npos)
            throw std::invalid_argument("family literal is 'family:<id>@<t>'");
        return parse_family(body.substr(0, at)).at(parse_double(body.substr(at + 1)));
    }
    throw std::invalid_argument("unknown distribution kind '" + std::string(kind) + "'");
}

} // namespace gwg
