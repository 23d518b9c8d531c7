#include "gwgames/offspring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gwgames/format.hpp"

namespace gwg {

namespace {

constexpr double kSumTolerance = 1e-12;
constexpr std::size_t kDenseHornerLimit = 257; // degree <= 256 gets a dense table

void check_unit_interval(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("generating-function argument outside [0,1]");
}

} // namespace

void OffspringDistribution::finalize_finite() {
    if (terms_.empty())
        throw std::invalid_argument("finite-support distribution needs at least one term");
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i].first == terms_[i - 1].first)
            throw std::invalid_argument("duplicate degree in finite-support distribution");

    double sum = 0.0;
    for (const Term& t : terms_) {
        if (!(t.second >= 0.0))
            throw std::invalid_argument("negative probability in finite-support distribution");
        sum += t.second;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw std::invalid_argument("finite-support probabilities sum to " + std::to_string(sum) +
                                    ", further than 1e-12 from 1");
    for (Term& t : terms_) t.second /= sum;
    // Nudge the largest cell so the double-precision sum is exactly 1.
    double resid = 1.0;
    for (const Term& t : terms_) resid -= t.second;
    auto largest = std::max_element(terms_.begin(), terms_.end(),
                                    [](const Term& a, const Term& b) { return a.second < b.second; });
    largest->second += resid;

    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [largest](const Term& t) { return t.second == 0.0 && t != *largest; }),
                 terms_.end());

    p0_ = p1_ = 0.0;
    mean_ = 0.0;
    for (const Term& t : terms_) {
        if (t.first == 0) p0_ = t.second;
        if (t.first == 1) p1_ = t.second;
        mean_ += static_cast<double>(t.first) * t.second;
    }

    coeffs_.clear();
    const std::uint64_t maxdeg = terms_.back().first;
    if (maxdeg + 1 <= kDenseHornerLimit) {
        coeffs_.assign(static_cast<std::size_t>(maxdeg) + 1, 0.0);
        for (const Term& t : terms_) coeffs_[static_cast<std::size_t>(t.first)] = t.second;
    }

    cdf_.resize(terms_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        acc += terms_[i].second;
        cdf_[i] = acc;
    }
    cdf_.back() = 1.0;
}

OffspringDistribution OffspringDistribution::finite(const std::vector<double>& probs) {
    std::vector<Term> terms;
    terms.reserve(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i)
        if (probs[i] != 0.0 || i == 0) terms.emplace_back(i, probs[i]);
    return finite_sparse(std::move(terms));
}

OffspringDistribution OffspringDistribution::finite_sparse(std::vector<Term> terms) {
    OffspringDistribution d;
    d.kind_ = Kind::finite_support;
    d.terms_ = std::move(terms);
    d.finalize_finite();
    return d;
}

OffspringDistribution OffspringDistribution::point_mass(std::uint64_t k) {
    return finite_sparse({{k, 1.0}});
}

OffspringDistribution OffspringDistribution::poisson(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("Poisson mean must be positive and finite");
    OffspringDistribution d;
    d.kind_ = Kind::poisson;
    d.lambda_ = lambda;
    d.p0_ = std::exp(-lambda);
    d.p1_ = lambda * d.p0_;
    d.mean_ = lambda;
    return d;
}

OffspringDistribution OffspringDistribution::geometric(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("geometric parameter must lie in (0,1)");
    OffspringDistribution d;
    d.kind_ = Kind::geometric;
    d.alpha_ = alpha;
    d.p0_ = 1.0 - alpha;
    d.p1_ = (1.0 - alpha) * alpha;
    d.mean_ = alpha / (1.0 - alpha);
    return d;
}

OffspringDistribution OffspringDistribution::binomial(int n, double p) {
    if (n < 1) throw std::invalid_argument("binomial n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial p must lie in [0,1]");
    OffspringDistribution d;
    d.kind_ = Kind::binomial;
    d.binom_n_ = n;
    d.binom_p_ = p;
    d.p0_ = std::pow(1.0 - p, n);
    d.p1_ = n * p * std::pow(1.0 - p, n - 1);
    d.mean_ = n * p;
    return d;
}

double OffspringDistribution::g(double x) const {
    check_unit_interval(x);
    if (x == 1.0) return 1.0;
    switch (kind_) {
        case Kind::finite_support: {
            if (x == 0.0) return p0_;
            if (!coeffs_.empty()) {
                double acc = 0.0;
                for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
                return acc;
            }
            double acc = 0.0;
            for (const Term& t : terms_)
                acc += t.second * std::pow(x, static_cast<double>(t.first));
            return acc;
        }
        case Kind::poisson:
            return std::exp(-lambda_ * (1.0 - x));
        case Kind::geometric:
            return (1.0 - alpha_) / (1.0 - alpha_ * x);
        case Kind::binomial:
            return std::pow(1.0 - binom_p_ + binom_p_ * x, binom_n_);
    }
    return 0.0; // unreachable
}

double OffspringDistribution::g_prime(double x) const {
    check_unit_interval(x);
    switch (kind_) {
        case Kind::finite_support: {
            if (!coeffs_.empty()) {
                double acc = 0.0;
                for (std::size_t i = coeffs_.size(); i-- > 1;)
                    acc = acc * x + static_cast<double>(i) * coeffs_[i];
                return acc;
            }
            double acc = 0.0;
            for (const Term& t : terms_) {
                if (t.first == 0) continue;
                acc += t.second * static_cast<double>(t.first) *
                       std::pow(x, static_cast<double>(t.first - 1));
            }
            return acc;
        }
        case Kind::poisson:
            return lambda_ * std::exp(-lambda_ * (1.0 - x));
        case Kind::geometric: {
            const double denom = 1.0 - alpha_ * x;
            return alpha_ * (1.0 - alpha_) / (denom * denom);
        }
        case Kind::binomial:
            return binom_n_ * binom_p_ * std::pow(1.0 - binom_p_ + binom_p_ * x, binom_n_ - 1);
    }
    return 0.0; // unreachable
}

double OffspringDistribution::prob(std::uint64_t k) const {
    switch (kind_) {
        case Kind::finite_support: {
            auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                       [](const Term& t, std::uint64_t key) { return t.first < key; });
            return (it != terms_.end() && it->first == k) ? it->second : 0.0;
        }
        case Kind::poisson: {
            double lp = -lambda_ + static_cast<double>(k) * std::log(lambda_) -
                        std::lgamma(static_cast<double>(k) + 1.0);
            return std::exp(lp);
        }
        case Kind::geometric:
            return (1.0 - alpha_) * std::pow(alpha_, static_cast<double>(k));
        case Kind::binomial: {
            if (k > static_cast<std::uint64_t>(binom_n_)) return 0.0;
            double lp = std::lgamma(binom_n_ + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
                        std::lgamma(binom_n_ - static_cast<double>(k) + 1.0);
            if (binom_p_ > 0.0) lp += static_cast<double>(k) * std::log(binom_p_);
            else if (k > 0) return 0.0;
            if (binom_p_ < 1.0) lp += (binom_n_ - static_cast<double>(k)) * std::log(1.0 - binom_p_);
            else if (k < static_cast<std::uint64_t>(binom_n_)) return 0.0;
            return std::exp(lp);
        }
    }
    return 0.0; // unreachable
}

std::uint64_t OffspringDistribution::sample_count(SplitMix64& rng) const {
    switch (kind_) {
        case Kind::finite_support: {
            const double u = rng.uniform01();
            // terms_ is short in every sampled workload; linear scan beats binary search
            for (std::size_t i = 0; i + 1 < cdf_.size(); ++i)
                if (u < cdf_[i]) return terms_[i].first;
            return terms_.back().first;
        }
        case Kind::poisson: {
            // CDF inversion; adequate for the moderate means used here
            const double u = rng.uniform01();
            double p = std::exp(-lambda_);
            double acc = p;
            std::uint64_t k = 0;
            while (u >= acc && k < 100000) {
                ++k;
                p *= lambda_ / static_cast<double>(k);
                acc += p;
            }
            return k;
        }
        case Kind::geometric: {
            // P(K >= k) = alpha^k
            const double u = 1.0 - rng.uniform01(); // in (0,1]
            if (u == 1.0) return 0;
            return static_cast<std::uint64_t>(std::log(u) / std::log(alpha_));
        }
        case Kind::binomial: {
            std::uint64_t k = 0;
            for (int i = 0; i < binom_n_; ++i)
                if (rng.uniform01() < binom_p_) ++k;
            return k;
        }
    }
    return 0; // unreachable
}

std::uint64_t OffspringDistribution::max_degree() const {
    if (kind_ != Kind::finite_support)
        throw std::invalid_argument("max_degree is defined for finite-support laws only");
    return terms_.back().first;
}

std::string OffspringDistribution::literal() const {
    switch (kind_) {
        case Kind::finite_support: {
            const std::uint64_t maxdeg = terms_.back().first;
            if (maxdeg <= 64) {
                std::string out = "finite:";
                std::size_t ti = 0;
                for (std::uint64_t k = 0; k <= maxdeg; ++k) {
                    double p = 0.0;
                    if (ti < terms_.size() && terms_[ti].first == k) p = terms_[ti++].second;
                    out += format_number(p);
                    if (k != maxdeg) out += ',';
                }
                return out;
            }
            std::string out = "sparse:";
            for (std::size_t i = 0; i < terms_.size(); ++i) {
                out += std::to_string(terms_[i].first) + "=" + format_number(terms_[i].second);
                if (i + 1 != terms_.size()) out += ',';
            }
            return out;
        }
        case Kind::poisson:
            return "poisson:" + format_number(lambda_);
        case Kind::geometric:
            return "geometric:" + format_number(alpha_);
        case Kind::binomial:
            return "binomial:" + std::to_string(binom_n_) + "," + format_number(binom_p_);
    }
    return {};
}

OffspringDistribution random_distribution(std::uint64_t seed, int max_support) {
    if (max_support < 0) throw std::invalid_argument("max_support must be >= 0");
    SplitMix64 rng(seed);
    std::vector<double> w(static_cast<std::size_t>(max_support) + 1);
    for (double& x : w) {
        double u = 1.0 - rng.uniform01();
        x = -std::log(u); // standard exponential
    }
    double sum = 0.0;
    for (double x : w) sum += x;
    for (double& x : w) x /= sum;
    return OffspringDistribution::finite(w);
}

} // namespace gwg
