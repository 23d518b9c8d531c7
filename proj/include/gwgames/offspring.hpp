#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwgames/rng.hpp"

namespace gwg {

enum class Kind { finite_support, poisson, geometric, binomial };

/// Offspring law of a branching process together with exact evaluators for
/// its generating function G, the derivative G', and the derived maps
/// F = 1 - G and H = 1 - G + p0.
///
/// Finite-support laws are stored sparsely as (degree, probability) terms so
/// that things like {p0 = p1 = 1/K, p_{K^3} = 1 - 2/K} stay cheap even for
/// K^3 ~ 1e9. Parametric families (Poisson / Geometric / Binomial) keep their
/// closed forms; no series truncation anywhere, so G(1) = 1 holds exactly and
/// fixed-point bisection downstream can trust ~1e-12 function values.
class OffspringDistribution {
public:
    using Term = std::pair<std::uint64_t, double>; // (degree, probability)

    /// Dense finite-support law p0..pd. Probabilities must be nonnegative and
    /// sum to 1 within 1e-12 (the vector is then renormalized); anything
    /// further off is rejected.
    static OffspringDistribution finite(const std::vector<double>& probs);

    /// Sparse finite-support law; degrees need not be contiguous or sorted.
    static OffspringDistribution finite_sparse(std::vector<Term> terms);

    static OffspringDistribution point_mass(std::uint64_t k);
    static OffspringDistribution poisson(double lambda);     // lambda > 0
    static OffspringDistribution geometric(double alpha);    // alpha in (0,1)
    static OffspringDistribution binomial(int n, double p);  // n >= 1, p in [0,1]

    Kind kind() const { return kind_; }
    bool is_finite_support() const { return kind_ == Kind::finite_support; }

    /// G(x) = sum_k p_k x^k for x in [0,1]; throws std::invalid_argument outside.
    double g(double x) const;
    /// G'(x), exact closed form per family.
    double g_prime(double x) const;
    /// F(x) = 1 - G(x).
    double f(double x) const { return 1.0 - g(x); }
    /// H(x) = 1 - G(x) + p0. H - F == p0 exactly.
    double h(double x) const { return (1.0 - g(x)) + p0_; }

    double p0() const { return p0_; }
    double p1() const { return p1_; }
    double mean() const { return mean_; }

    /// P(offspring = k), zero off the support.
    double prob(std::uint64_t k) const;

    /// Draw one offspring count.
    std::uint64_t sample_count(SplitMix64& rng) const;

    /// Sparse terms (finite support only, sorted by degree).
    const std::vector<Term>& terms() const { return terms_; }
    std::uint64_t max_degree() const;

    double lambda() const { return lambda_; }  // Poisson
    double alpha() const { return alpha_; }    // Geometric
    int binomial_n() const { return binom_n_; }
    double binomial_p() const { return binom_p_; }

    /// Literal of the form accepted by parse_distribution, e.g. "finite:0.5,0.5".
    std::string literal() const;

private:
    OffspringDistribution() = default;

    Kind kind_ = Kind::finite_support;
    std::vector<Term> terms_;     // finite support, sorted by degree
    std::vector<double> coeffs_;  // dense copy for Horner when the degree is small
    std::vector<double> cdf_;     // sampling table over terms_
    double lambda_ = 0.0;
    double alpha_ = 0.0;
    int binom_n_ = 0;
    double binom_p_ = 0.0;
    double p0_ = 0.0;
    double p1_ = 0.0;
    double mean_ = 0.0;

    void finalize_finite();
};

/// Parses distribution literals:
///   finite:0.15,0,0.85      dense finite support
///   sparse:0=0.01,1=0.01,1000000=0.98
///   poisson:2.5
///   geometric:0.4
///   binomial:3,0.8
///   family:binary@0.9       any family id accepted by parse_family
OffspringDistribution parse_distribution(std::string_view literal);

/// Finite-support law on {0..max_support} with probabilities obtained by
/// normalizing independent standard-exponential draws from a splitmix64
/// stream seeded with `seed`. Same seed, same law.
OffspringDistribution random_distribution(std::uint64_t seed, int max_support);

} // namespace gwg
