#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gegwp/errors.hpp"
#include "gegwp/gegenbauer.hpp"
#include "gegwp/quadrature.hpp"
#include "support/oracles.hpp"

using namespace gegwp;
using gegwp::testing::random_tree;
using gegwp::testing::riemann_acv;

namespace {

GegenbauerModel white_noise(double sigma2 = 2.0 * std::numbers::pi) {
    return GegenbauerModel({}, sigma2);
}

GegenbauerModel one_factor(double d, Frequency nu) {
    return GegenbauerModel({{d, nu}});
}

GegenbauerModel random_model(std::mt19937_64& rng, int k) {
    std::uniform_real_distribution<double> ud(0.08, 0.42);
    std::uniform_real_distribution<double> un(0.02, 0.48);
    std::vector<GegenbauerFactor> f;
    while (static_cast<int>(f.size()) < k) {
        double nu = un(rng);
        bool clash = false;
        for (const auto& g : f) clash = clash || std::fabs(g.nu.value - nu) < 0.02;
        if (!clash) f.push_back({ud(rng), Frequency::of(nu)});
    }
    return GegenbauerModel(std::move(f));
}

} // namespace

TEST_CASE("model validation") {
    CHECK_THROWS_AS(one_factor(0.5, Frequency::of(0.1)), InvalidFrequency);
    CHECK_THROWS_AS(one_factor(-0.1, Frequency::of(0.1)), InvalidFrequency);
    CHECK_THROWS_AS(one_factor(0.3, Frequency::of(0.0)), InvalidFrequency);   // d<1/4 at 0
    CHECK_THROWS_AS(one_factor(0.3, Frequency::of(0.5)), InvalidFrequency);   // and at 1/2
    CHECK_NOTHROW(one_factor(0.2, Frequency::of(0.0)));
    CHECK_THROWS_AS(GegenbauerModel({{0.3, Frequency::of(0.1)}, {0.2, Frequency::of(0.1)}}),
                    DuplicateFrequency);
}

TEST_CASE("psd: white noise, hand value, divergence, singular rejection") {
    CHECK(psd(white_noise(), 0.3) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(psd(white_noise(4.0), 0.01) == doctest::Approx(4.0 / (2 * std::numbers::pi)));

    // d=0.4, nu=1/12, lambda=1/4: 4(cos(pi/2) - cos(pi/6))^2 = 3
    auto m = one_factor(0.4, Frequency::rational(1, 12));
    CHECK(psd(m, 0.25) == doctest::Approx(std::pow(3.0, -0.4)).epsilon(1e-12));

    double nu = 1.0 / 12.0;
    CHECK(psd(m, nu + 1e-8) > 1e4 * psd(m, nu + 1e-2));
    CHECK(psd(m, nu - 1e-8) > 1e4 * psd(m, nu - 1e-2));
    CHECK_THROWS_AS(psd(m, nu), SingularFrequency);

    for (double lam : {0.03, 0.21, 0.47})
        CHECK(psd(m, lam) > 0.0);
}

TEST_CASE("band-pass variance: white noise and additivity") {
    auto wn = white_noise();
    for (int j : {0, 1, 3, 5})
        for (int p : {0, (1 << j) - 1})
            CHECK(band_pass_variance(wn, j, p) ==
                  doctest::Approx(std::pow(2.0, -j)).epsilon(1e-10));

    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 4; ++rep) {
        auto m = random_model(rng, 1 + rep % 2);
        for (int j : {1, 2, 4}) {
            std::uniform_int_distribution<int> up(0, (1 << j) - 1);
            int p = up(rng);
            double parent = band_pass_variance(m, j, p, 1e-9);
            double kids = band_pass_variance(m, j + 1, 2 * p, 1e-9) +
                          band_pass_variance(m, j + 1, 2 * p + 1, 1e-9);
            CHECK(std::fabs(parent - kids) < 1e-6 * parent);
        }
    }
}

TEST_CASE("variance bookkeeping: leaf variances sum to gamma(0)") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 3; ++rep) {
        auto m = random_model(rng, 1 + rep % 2);
        auto tree = random_tree(6, rng);
        double total = 0.0;
        for (const auto& leaf : tree.leaves())
            total += band_pass_variance(m, leaf.j, leaf.p, 1e-9);
        double g0 = autocovariance(m, 0, 1e-8).gamma[0];
        double g0_oracle = riemann_acv(m, 0);
        CHECK(std::fabs(total - g0) < 1e-4 * g0);
        CHECK(std::fabs(g0 - g0_oracle) < 2e-3 * g0);
    }
}

TEST_CASE("autocovariance: white noise is a unit impulse") {
    auto acv = autocovariance(white_noise(1.0), 8, 1e-9);
    CHECK(acv.gamma[0] == doctest::Approx(1.0 / (2 * std::numbers::pi)).epsilon(1e-9));
    auto unit = autocovariance(GegenbauerModel({}, 1.0), 8);
    CHECK(unit(0) == doctest::Approx(1.0 / (2 * std::numbers::pi)));
    for (int h = 1; h <= 8; ++h) CHECK(std::fabs(unit(h)) < 1e-10 * unit(0));
}

TEST_CASE("autocovariance oscillates with period 1/nu and matches the grid oracle") {
    auto m = one_factor(0.4, Frequency::rational(1, 12));
    auto acv = autocovariance(m, 240, 1e-8);
    // sign changes of rho over h=48..240 should track cos(2 pi h/12):
    // one sign flip every 6 lags, i.e. 32 flips over 192 lags
    int flips = 0;
    for (int h = 49; h <= 240; ++h)
        if ((acv(h) > 0) != (acv(h - 1) > 0)) ++flips;
    CHECK(flips >= 28);
    CHECK(flips <= 36);
    for (int h : {0, 3, 24, 120})
        CHECK(std::fabs(acv(h) - riemann_acv(m, h)) <
              3e-3 * std::fabs(riemann_acv(m, 0)));
}

TEST_CASE("acv envelope decays like h^(2d-1)") {
    // d=0.2: envelope ratio between h=400 and h=200 is 2^(2d-1) within 15%
    auto m = one_factor(0.2, Frequency::rational(1, 12));
    auto acv = autocovariance(m, 440, 1e-8);
    auto envelope_near = [&](int h0) {
        double best = 0.0;
        for (int h = h0 - 12; h <= h0 + 12; ++h)
            best = std::max(best, std::fabs(acv.rho(h)));
        return best;
    };
    double ratio = envelope_near(400) / envelope_near(200);
    CHECK(std::fabs(ratio - std::pow(2.0, -0.6)) < 0.15 * std::pow(2.0, -0.6));
}

TEST_CASE("asymptotic slope of the log envelope is 2d-1 within 0.1") {
    for (double d : {0.2, 0.3, 0.4}) {
        auto m = one_factor(d, Frequency::rational(1, 12));
        auto acv = autocovariance(m, 500, 1e-8);
        // local maxima of |rho| over h in [100, 500]
        std::vector<double> lx, ly;
        for (int h = 101; h < 500; ++h) {
            double v = std::fabs(acv.rho(h));
            if (v > std::fabs(acv.rho(h - 1)) && v >= std::fabs(acv.rho(h + 1))) {
                lx.push_back(std::log(h));
                ly.push_back(std::log(v));
            }
        }
        REQUIRE(lx.size() >= 10);
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < lx.size(); ++i) { mx += lx[i]; my += ly[i]; }
        mx /= lx.size(); my /= ly.size();
        double sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            sxx += (lx[i] - mx) * (lx[i] - mx);
            sxy += (lx[i] - mx) * (ly[i] - my);
        }
        CHECK(std::fabs(sxy / sxx - (2 * d - 1)) < 0.1);
    }
}

TEST_CASE("acv asymptote reference values") {
    CHECK(acv_asymptote(0.4, 0.3, 1.0) ==
          doctest::Approx(std::cos(2 * std::numbers::pi * 0.3)));
    CHECK(acv_asymptote(0.25, 0.0, 16.0) == doctest::Approx(0.25));
    CHECK(acv_asymptote(0.4, 1.0 / 12.0, 12.0) ==
          doctest::Approx(std::pow(12.0, -0.2)).epsilon(1e-12));
}

TEST_CASE("covariance matrix: white noise, toeplitz structure, psd check") {
    auto wn = covariance_matrix(GegenbauerModel({}, 2 * std::numbers::pi), 8);
    CHECK((wn - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-9);

    auto m = one_factor(0.4, Frequency::rational(1, 12));
    auto G = covariance_matrix(m, 16);
    auto acv = autocovariance(m, 15);
    for (int s = 0; s < 16; ++s)
        for (int t = 0; t < 16; ++t)
            CHECK(G(s, t) == doctest::Approx(acv(s - t)).epsilon(1e-12));
}

TEST_CASE("quadrature failure surfaces instead of silently stalling") {
    auto wiggle = [](double x) { return std::sin(500.0 * x) / (1e-6 + x * x); };
    CHECK_THROWS_AS(adaptive_simpson(wiggle, 0.0, 1.0, 1e-300, 3), QuadratureFailure);
}
