#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "gwgames/family.hpp"
#include "gwgames/offspring.hpp"
#include "gwgames/rng.hpp"

using namespace gwg;

TEST_SUITE_BEGIN("offspring");

TEST_CASE("construction validates probability vectors") {
    CHECK_THROWS_AS(OffspringDistribution::finite({0.5, -0.1, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(OffspringDistribution::finite({0.5, 0.4}), std::invalid_argument);
    CHECK_THROWS_AS(OffspringDistribution::finite({}), std::invalid_argument);
    CHECK_THROWS_AS(OffspringDistribution::poisson(0.0), std::invalid_argument);
    CHECK_THROWS_AS(OffspringDistribution::geometric(1.0), std::invalid_argument);
    CHECK_THROWS_AS(OffspringDistribution::binomial(0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(OffspringDistribution::finite_sparse({{2, 0.5}, {2, 0.5}}),
                    std::invalid_argument);

    // a 1e-13 defect is renormalized away
    const auto d = OffspringDistribution::finite({0.25, 0.25, 0.5 - 1e-13});
    CHECK(d.g(1.0) == 1.0);
}

TEST_CASE("generating function values") {
    const auto binary85 = Family::binary().at(0.85);
    CHECK(binary85.g(0.0) == doctest::Approx(0.15).epsilon(1e-14));
    CHECK(binary85.g(1.0) == 1.0);

    const auto pois = OffspringDistribution::poisson(2.0);
    CHECK(pois.g(0.5) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(pois.g(1.0) == 1.0);

    const auto geo = OffspringDistribution::geometric(0.4);
    CHECK(geo.g(0.25) == doctest::Approx(0.6 / (1.0 - 0.1)).epsilon(1e-14));

    const auto binom = OffspringDistribution::binomial(3, 0.8);
    CHECK(binom.g(0.5) == doctest::Approx(std::pow(0.6, 3)).epsilon(1e-14));

    CHECK_THROWS_AS(binary85.g(1.5), std::invalid_argument);
    CHECK_THROWS_AS(binary85.g(-0.1), std::invalid_argument);
}

TEST_CASE("derivatives and means") {
    for (double t : {0.3, 0.85}) {
        const auto d = Family::binary().at(t);
        for (double x : {0.0, 0.3, 0.9})
            CHECK(d.g_prime(x) == doctest::Approx(2.0 * t * x).epsilon(1e-13));
    }
    // G'(1) = mean for every family
    const OffspringDistribution dists[] = {
        Family::binary().at(0.6),
        OffspringDistribution::poisson(2.5),
        OffspringDistribution::geometric(0.4),
        OffspringDistribution::binomial(4, 0.3),
        random_distribution(7, 6),
    };
    for (const auto& d : dists)
        CHECK(d.g_prime(1.0) == doctest::Approx(d.mean()).epsilon(1e-12));

    CHECK(OffspringDistribution::geometric(0.4).mean() ==
          doctest::Approx(0.4 / 0.6).epsilon(1e-14));

    // at lambda = e the slope of G at 1 - 1/e is exactly 1
    const double e = std::exp(1.0);
    const auto pois = OffspringDistribution::poisson(e);
    CHECK(pois.g_prime(1.0 - 1.0 / e) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("f and h") {
    const double t = 0.7;
    const auto d = Family::binary().at(t);
    for (double x : {0.0, 0.25, 0.8, 1.0}) {
        CHECK(d.f(x) == doctest::Approx(t * (1.0 - x * x)).epsilon(1e-14));
        CHECK(d.h(x) == doctest::Approx(1.0 - t * x * x).epsilon(1e-14));
    }
    const auto leafless = OffspringDistribution::finite({0.0, 0.5, 0.5});
    for (double x : {0.1, 0.6}) CHECK(leafless.h(x) == leafless.f(x));
}

TEST_CASE("h - f equals p0 exactly") {
    SplitMix64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const auto d = random_distribution(rng.next(), 1 + i % 8);
        const double x = rng.uniform01();
        CHECK(std::abs((d.h(x) - d.f(x)) - d.p0()) <= 1e-14);
    }
}

TEST_CASE("convexity of g") {
    SplitMix64 rng(99);
    const OffspringDistribution dists[] = {
        random_distribution(3, 5),
        OffspringDistribution::poisson(3.0),
        OffspringDistribution::geometric(0.6),
        OffspringDistribution::binomial(5, 0.4),
    };
    for (const auto& d : dists) {
        for (int i = 0; i < 250; ++i) {
            double x = rng.uniform01(), y = rng.uniform01();
            if (x > y) std::swap(x, y);
            CHECK(d.g(0.5 * (x + y)) <= 0.5 * (d.g(x) + d.g(y)) + 1e-12);
        }
    }
}

TEST_CASE("finite truncation of a Poisson law matches the closed form") {
    const double lambda = 2.5;
    std::vector<double> probs;
    double mass = 0.0, term = std::exp(-lambda);
    for (int k = 0; mass < 1.0 - 1e-13; ++k) {
        probs.push_back(term);
        mass += term;
        term *= lambda / (k + 1);
    }
    // push the leftover mass into the last cell so the vector is admissible
    probs.back() += 1.0 - mass;
    const auto trunc = OffspringDistribution::finite(probs);
    const auto exact = OffspringDistribution::poisson(lambda);
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        CHECK(std::abs(trunc.g(x) - exact.g(x)) <= 1e-10);
    }
}

TEST_CASE("random_distribution is seeded and normalized") {
    const auto a = random_distribution(42, 5);
    const auto b = random_distribution(42, 5);
    REQUIRE(a.terms().size() == b.terms().size());
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        CHECK(a.terms()[i].first == b.terms()[i].first);
        CHECK(a.terms()[i].second == b.terms()[i].second);
    }
    CHECK(a.g(1.0) == 1.0);

    const auto c = random_distribution(43, 5);
    bool same = true;
    for (std::size_t i = 0; i < std::min(a.terms().size(), c.terms().size()); ++i)
        if (a.terms()[i].second != c.terms()[i].second) same = false;
    CHECK_FALSE(same);

    const auto point = random_distribution(1, 0);
    CHECK(point.p0() == 1.0);
}

TEST_CASE("literals parse and round-trip") {
    const char* literals[] = {
        "finite:0.15,0,0.85", "poisson:2.5", "geometric:0.4",
        "binomial:3,0.8",     "sparse:0=0.5,40=0.5",
    };
    for (const char* lit : literals) {
        const auto d = parse_distribution(lit);
        const auto d2 = parse_distribution(d.literal());
        CHECK(d2.mean() == doctest::Approx(d.mean()).epsilon(1e-12));
        CHECK(d2.g(0.37) == doctest::Approx(d.g(0.37)).epsilon(1e-12));
    }

    const auto fam = parse_distribution("family:binary@0.9");
    CHECK(fam.p0() == doctest::Approx(0.1).epsilon(1e-14));

    CHECK_THROWS_AS(parse_distribution("nope:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_distribution("finite:0.5,abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_distribution("poisson:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_distribution("family:binary"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("exotic9"), std::invalid_argument);
}

TEST_CASE("families match their definitions") {
    const auto ex1 = Family::exotic1().at(0.9);
    CHECK(ex1.p0() == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(ex1.g(0.5) ==
          doctest::Approx(0.1 + 0.9 * (0.5 * 0.25 + 0.5 * std::pow(0.5, 10))).epsilon(1e-13));

    const auto ex2 = Family::exotic2().at(0.99);
    CHECK(ex2.g(0.5) ==
          doctest::Approx(0.01 + 0.99 * (0.15 * 0.25 + 0.85 * std::pow(0.5, 20))).epsilon(1e-13));

    const auto ex3 = Family::exotic3().at(0.01);
    CHECK(ex3.p0() == doctest::Approx(1.0 / 18.0 - 0.01).epsilon(1e-13));
    CHECK(ex3.mean() == doctest::Approx(2.0 / 3.0 + 3.0 * (5.0 / 18.0 + 0.01)).epsilon(1e-13));
    CHECK_THROWS_AS(Family::exotic3().at(0.2), std::invalid_argument);

    const auto lerped = Family::lerp(OffspringDistribution::finite({1.0}),
                                     OffspringDistribution::finite({0.0, 0.0, 1.0}))
                            .at(0.25);
    CHECK(lerped.p0() == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(lerped.prob(2) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("samplers hit their means") {
    const OffspringDistribution dists[] = {
        random_distribution(5, 4),
        OffspringDistribution::poisson(2.0),
        OffspringDistribution::geometric(0.5),
        OffspringDistribution::binomial(5, 0.3),
    };
    for (const auto& d : dists) {
        SplitMix64 rng(stream_seed(777, 1));
        const int n = 20000;
        double sum = 0.0, sumsq = 0.0;
        for (int i = 0; i < n; ++i) {
            const double k = static_cast<double>(d.sample_count(rng));
            sum += k;
            sumsq += k * k;
        }
        const double mean = sum / n;
        const double sd = std::sqrt((sumsq - sum * mean) / (n - 1));
        CHECK(std::abs(mean - d.mean()) <= 3.5 * sd / std::sqrt(double(n)));
    }
}

TEST_SUITE_END();
