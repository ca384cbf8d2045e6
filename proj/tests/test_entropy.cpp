#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "entrex/entropy.hpp"
#include "support/synthetic.hpp"

using namespace entrex;
namespace ts = entrex::testsupport;

namespace {

// Closed forms for a uniform distribution over n bins.
double kani_uniform(int n, double kappa) {
    return (std::pow(n, kappa) - std::pow(n, -kappa)) / (2.0 * kappa);
}
double z_uniform(int n, double kappa) {
    return (std::pow(n, kappa) + std::pow(n, -kappa)) / 2.0;
}

// Direct plain-loop evaluations used as oracles for the conditional forms.
double shannon_direct(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p) {
        if (x > 0.0) s -= x * std::log(x);
    }
    return s;
}
double tsallis_direct(const std::vector<double>& p, double q) {
    double s = 0.0;
    for (double x : p) {
        if (x > 0.0) s += std::pow(x, q);
    }
    return (1.0 - s) / (q - 1.0);
}
double kani_direct(const std::vector<double>& p, double kappa) {
    double s = 0.0;
    for (double x : p) {
        if (x > 0.0) s -= (std::pow(x, 1.0 + kappa) - std::pow(x, 1.0 - kappa)) / (2.0 * kappa);
    }
    return s;
}
double z_direct(const std::vector<double>& p, double kappa) {
    double s = 0.0;
    for (double x : p) {
        if (x > 0.0) s += (std::pow(x, 1.0 + kappa) + std::pow(x, 1.0 - kappa)) / 2.0;
    }
    return s;
}

std::vector<double> to_vec(const ProbDist& d) { return {d.p.begin(), d.p.end()}; }

// Random joint supported on the first `side` tones of each axis.
JointDist random_small_joint(std::mt19937& rng, int side) {
    std::vector<double> m(256 * 256, 0.0);
    double sum = 0.0;
    for (int s = 0; s < side; ++s) {
        for (int t = 0; t < side; ++t) {
            const double w = -std::log(ts::u01(rng));
            m[static_cast<std::size_t>(s) * 256 + t] = w;
            sum += w;
        }
    }
    for (double& x : m) x /= sum;
    return JointDist::from_matrix(std::move(m));
}

}  // namespace

TEST_CASE("shannon entropy") {
    CHECK(shannon(ts::delta_dist(7)) == 0.0);
    ProbDist two;
    two.p[3] = 0.5;
    two.p[200] = 0.5;
    CHECK(shannon(two) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(shannon(ts::uniform_dist(256)) ==
          doctest::Approx(5.545177444479562).epsilon(1e-12));
}

TEST_CASE("tsallis entropy") {
    CHECK(tsallis(ts::delta_dist(0), 2.0) == 0.0);
    CHECK(tsallis(ts::delta_dist(0), 0.5) == 0.0);
    ProbDist two;
    two.p[0] = 0.5;
    two.p[1] = 0.5;
    CHECK(tsallis(two, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(tsallis(ts::uniform_dist(256), 2.0) ==
          doctest::Approx(1.0 - 1.0 / 256.0).epsilon(1e-12));
    SUBCASE("q = 1 routes to Shannon") {
        std::mt19937 rng(5);
        const ProbDist p = ts::random_dist(rng, 100);
        CHECK(tsallis(p, 1.0) == shannon(p));
    }
    SUBCASE("q <= 0 is rejected") {
        CHECK_THROWS_AS(tsallis(ts::uniform_dist(4), 0.0), std::invalid_argument);
        CHECK_THROWS_AS(tsallis(ts::uniform_dist(4), -1.0), std::invalid_argument);
    }
}

TEST_CASE("kaniadakis entropy") {
    CHECK(kaniadakis(ts::delta_dist(99), 0.05) == 0.0);
    CHECK(kaniadakis(ts::uniform_dist(256), 0.1) ==
          doctest::Approx(5.833759745468654).epsilon(1e-12));
    SUBCASE("kappa -> 0 recovers Shannon") {
        CHECK(std::abs(kaniadakis(ts::uniform_dist(256), 1e-6) -
                       shannon(ts::uniform_dist(256))) <= 1e-6);
        std::mt19937 rng(6);
        const ProbDist p = ts::random_dist(rng, 256);
        CHECK(kaniadakis(p, 0.0) == shannon(p));
    }
    SUBCASE("negative kappa is rejected") {
        CHECK_THROWS_AS(kaniadakis(ts::uniform_dist(4), -0.01), std::invalid_argument);
    }
}

TEST_CASE("z functional") {
    std::mt19937 rng(8);
    const ProbDist p = ts::random_dist(rng, 180);
    CHECK(z_functional(p, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(z_functional(ts::delta_dist(3), 0.07) == 1.0);
    CHECK(z_functional(ts::uniform_dist(256), 0.1) ==
          doctest::Approx(1.1577251520453828).epsilon(1e-12));
    CHECK_THROWS_AS(z_functional(p, -0.1), std::invalid_argument);

    SUBCASE("stays within C * kappa^2 of 1 for small kappa") {
        for (int iter = 0; iter < 50; ++iter) {
            const ProbDist d = ts::random_dist(rng, 2 + static_cast<int>(rng() % 255));
            for (double kappa : {0.01, 0.02, 0.05, 0.1}) {
                const double c = std::abs(z_functional(d, kappa) - 1.0) / (kappa * kappa);
                CHECK(c <= 50.0);
            }
        }
    }
}

TEST_CASE("joint entropies and additivity") {
    SUBCASE("Shannon additivity on uniform(4) x uniform(4)") {
        const JointDist j =
            JointDist::from_matrix(ts::product_matrix(ts::uniform_dist(4), ts::uniform_dist(4)));
        CHECK(joint_shannon(j) == doctest::Approx(std::log(16.0)).epsilon(1e-12));
    }
    SUBCASE("Kaniadakis generalized additivity on uniform(4) x uniform(4)") {
        const JointDist j =
            JointDist::from_matrix(ts::product_matrix(ts::uniform_dist(4), ts::uniform_dist(4)));
        const double lhs = joint_kaniadakis(j, 0.1);
        CHECK(lhs == doctest::Approx(kani_uniform(16, 0.1)).epsilon(1e-12));
        const double rhs = 2.0 * kani_uniform(4, 0.1) * z_uniform(4, 0.1);
        CHECK(std::abs(lhs - rhs) <= 1e-10);
    }
    SUBCASE("identities hold on random product joints") {
        std::mt19937 rng(21);
        for (int iter = 0; iter < 10; ++iter) {
            const ProbDist u = ts::random_dist(rng, 2 + static_cast<int>(rng() % 64));
            const ProbDist v = ts::random_dist(rng, 2 + static_cast<int>(rng() % 64));
            const JointDist j = JointDist::from_matrix(ts::product_matrix(u, v));

            CHECK(std::abs(joint_shannon(j) - (shannon(u) + shannon(v))) <= 1e-10);
            for (double q : {0.5, 2.0, 3.0}) {
                const double lhs = joint_tsallis(j, q);
                const double rhs =
                    tsallis(u, q) + tsallis(v, q) + (1.0 - q) * tsallis(u, q) * tsallis(v, q);
                CHECK(std::abs(lhs - rhs) <= 1e-10);
            }
            for (double kappa : {0.01, 0.05, 0.1}) {
                const double lhs = joint_kaniadakis(j, kappa);
                const double rhs = kaniadakis(u, kappa) * z_functional(v, kappa) +
                                   kaniadakis(v, kappa) * z_functional(u, kappa);
                CHECK(std::abs(lhs - rhs) <= 1e-10);
            }
        }
    }
}

TEST_CASE("tsallis conditional entropy") {
    std::mt19937 rng(31);
    SUBCASE("independence reduces to the first marginal") {
        const ProbDist u = ts::random_dist(rng, 30);
        const ProbDist v = ts::random_dist(rng, 50);
        const JointDist j = JointDist::from_matrix(ts::product_matrix(u, v));
        for (double q : {0.5, 2.0, 3.0}) {
            CHECK(std::abs(tsallis_conditional(j, q) - tsallis(u, q)) <= 1e-10);
        }
    }
    SUBCASE("identical images carry no extra information") {
        const ImageRgb8 img = ts::random_image(rng, 12, 9);
        const JointDist j = joint_histogram(img, img);
        CHECK(std::abs(tsallis_conditional(j, 2.0)) <= 1e-12);
    }
    SUBCASE("matches the direct term-by-term oracle") {
        for (int iter = 0; iter < 8; ++iter) {
            const JointDist j = random_small_joint(rng, 4);
            for (double q : {0.5, 2.0, 3.0}) {
                const double t_ab = tsallis_direct(j.p, q);
                const double t_b = tsallis_direct(to_vec(j.marginal_b), q);
                const double expected = (t_ab - t_b) / (1.0 + (1.0 - q) * t_b);
                CHECK(tsallis_conditional(j, q) == doctest::Approx(expected).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("kaniadakis conditional entropy (small-index form)") {
    std::mt19937 rng(41);
    SUBCASE("kappa = 0 is the Shannon conditional") {
        const JointDist j = random_small_joint(rng, 6);
        const double expected = joint_shannon(j) - shannon(j.marginal_b);
        CHECK(std::abs(kaniadakis_conditional(j, 0.0) - expected) <= 1e-12);
    }
    SUBCASE("independence reduces to the first marginal") {
        const ProbDist u = ts::random_dist(rng, 20);
        const ProbDist v = ts::random_dist(rng, 33);
        const JointDist j = JointDist::from_matrix(ts::product_matrix(u, v));
        CHECK(std::abs(kaniadakis_conditional(j, 0.05) - kaniadakis(u, 0.05)) <= 1e-10);
    }
    SUBCASE("matches the direct oracle, including the diagonal joint") {
        // For a diagonal (identical-image) joint the small-index form gives
        // K (1 - Z) / Z, a small negative value, not exactly zero.
        const ImageRgb8 img = ts::random_image(rng, 10, 10);
        const JointDist diag = joint_histogram(img, img);
        for (double kappa : {0.02, 0.05, 0.1}) {
            const double k_ab = kani_direct(diag.p, kappa);
            const double k_b = kani_direct(to_vec(diag.marginal_b), kappa);
            const double z_a = z_direct(to_vec(diag.marginal_a), kappa);
            const double z_b = z_direct(to_vec(diag.marginal_b), kappa);
            const double expected = (k_ab - k_b * z_a) / z_b;
            CHECK(kaniadakis_conditional(diag, kappa) ==
                  doctest::Approx(expected).epsilon(1e-11));
        }
        const JointDist j = random_small_joint(rng, 5);
        for (double kappa : {0.02, 0.05, 0.1}) {
            const double expected = (kani_direct(j.p, kappa) -
                                     kani_direct(to_vec(j.marginal_b), kappa) *
                                         z_direct(to_vec(j.marginal_a), kappa)) /
                                    z_direct(to_vec(j.marginal_b), kappa);
            CHECK(kaniadakis_conditional(j, kappa) ==
                  doctest::Approx(expected).epsilon(1e-11));
        }
    }
    SUBCASE("kappa outside the small-index range is rejected") {
        const JointDist j = random_small_joint(rng, 3);
        CHECK_THROWS_AS(kaniadakis_conditional(j, 0.2), std::invalid_argument);
        CHECK_THROWS_AS(kaniadakis_conditional(j, -0.01), std::invalid_argument);
    }
}

TEST_CASE("kaniadakis mutual entropy") {
    std::mt19937 rng(51);
    SUBCASE("independent pair carries zero mutual information") {
        const ProbDist u = ts::random_dist(rng, 24);
        const ProbDist v = ts::random_dist(rng, 31);
        const JointDist j = JointDist::from_matrix(ts::product_matrix(u, v));
        CHECK(std::abs(kaniadakis_mutual(j, 0.1)) <= 1e-10);
    }
    SUBCASE("identical images at kappa = 0 give the marginal Shannon entropy") {
        const ImageRgb8 img = ts::random_image(rng, 14, 6);
        const JointDist j = joint_histogram(img, img);
        CHECK(kaniadakis_mutual(j, 0.0) ==
              doctest::Approx(shannon(j.marginal_a)).epsilon(1e-12));
    }
    SUBCASE("matches K(A) minus the conditional oracle on correlated joints") {
        for (int iter = 0; iter < 6; ++iter) {
            const JointDist j = random_small_joint(rng, 4);
            const double kappa = 0.05;
            const double cond = (kani_direct(j.p, kappa) -
                                 kani_direct(to_vec(j.marginal_b), kappa) *
                                     z_direct(to_vec(j.marginal_a), kappa)) /
                                z_direct(to_vec(j.marginal_b), kappa);
            const double expected = kani_direct(to_vec(j.marginal_a), kappa) - cond;
            CHECK(kaniadakis_mutual(j, kappa) == doctest::Approx(expected).epsilon(1e-11));
        }
    }
}

TEST_CASE("entropy curve") {
    SUBCASE("delta distribution gives an all-zero curve") {
        const EntropyCurve c = entropy_curve(ts::delta_dist(100), 0.1, 11);
        for (double v : c.values) CHECK(v == 0.0);
    }
    SUBCASE("uniform(256) endpoints and monotonicity") {
        const EntropyCurve c = entropy_curve(ts::uniform_dist(256), 0.1, 11);
        REQUIRE(c.kappas.size() == 11);
        CHECK(c.kappas.front() == 0.0);
        CHECK(c.kappas.back() == 0.1);
        CHECK(c.values.front() == doctest::Approx(5.545177444479562).epsilon(1e-12));
        CHECK(c.values.back() == doctest::Approx(5.833759745468654).epsilon(1e-12));
        for (std::size_t i = 0; i + 1 < c.values.size(); ++i) {
            CHECK(c.values[i] < c.values[i + 1]);
        }
    }
    SUBCASE("first value is exactly the Shannon entropy") {
        std::mt19937 rng(61);
        const ProbDist p = ts::random_dist(rng, 77);
        const EntropyCurve c = entropy_curve(p, 0.1, 5);
        CHECK(c.values[0] == shannon(p));
    }
    SUBCASE("invalid arguments") {
        CHECK_THROWS_AS(entropy_curve(ts::uniform_dist(4), 0.0, 11), std::invalid_argument);
        CHECK_THROWS_AS(entropy_curve(ts::uniform_dist(4), 0.1, 1), std::invalid_argument);
    }
}

TEST_CASE("entropy limit and ordering properties") {
    std::mt19937 rng(71);
    SUBCASE("limit consistency on random distributions") {
        for (int iter = 0; iter < 100; ++iter) {
            const ProbDist p = ts::random_dist(rng, 2 + static_cast<int>(rng() % 63));
            const double s = shannon(p);
            CHECK(std::abs(kaniadakis(p, 1e-6) - s) <= 1e-5);
            CHECK(std::abs(tsallis(p, 1.0 + 1e-6) - s) <= 1e-5);
        }
    }
    SUBCASE("uniform maximizes every entropy at fixed support") {
        const int n = 64;
        const ProbDist uniform = ts::uniform_dist(n);
        const double s_max = shannon(uniform);
        const double t_max = tsallis(uniform, 2.0);
        const double k_max = kaniadakis(uniform, 0.1);
        for (int iter = 0; iter < 1000; ++iter) {
            ProbDist p;
            double sum = 0.0;
            for (int i = 0; i < n; ++i) {
                p.p[i] = 1.0 + 0.5 * (ts::u01(rng) - 0.5);
                sum += p.p[i];
            }
            for (int i = 0; i < n; ++i) p.p[i] /= sum;
            CHECK(shannon(p) <= s_max);
            CHECK(tsallis(p, 2.0) <= t_max);
            CHECK(kaniadakis(p, 0.1) <= k_max);
        }
    }
    SUBCASE("non-negativity") {
        for (int iter = 0; iter < 200; ++iter) {
            const ProbDist p = ts::random_dist(rng, 1 + static_cast<int>(rng() % 256));
            CHECK(shannon(p) >= 0.0);
            for (double q : {0.3, 0.9, 2.0, 5.0}) CHECK(tsallis(p, q) >= 0.0);
            for (double kappa : {0.01, 0.05, 0.1}) CHECK(kaniadakis(p, kappa) >= 0.0);
        }
    }
}
