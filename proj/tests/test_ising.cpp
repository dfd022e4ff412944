#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dadqc/dense.hpp"
#include "dadqc/ising.hpp"
#include "test_util.hpp"

using namespace dadqc;
using dadqc::testutil::make_graph;
using dadqc::testutil::random_instance;
using doctest::Approx;

TEST_SUITE_BEGIN("ising");

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("norm bounds") {
    const auto zero = IsingParams::create(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}, 2),
                                          {0, 0, 0}, {0, 0, 0});
    const auto nb0 = norm_bounds(zero);
    CHECK(nb0.hi_bound == 0.0);
    CHECK(nb0.k_bound == 0.0);

    const auto path = IsingParams::create(make_graph(4, {{0, 1}, {1, 2}, {2, 3}}),
                                          {1, 1, 1, 1}, {1, 1, 1});
    const auto nb1 = norm_bounds(path);
    CHECK(nb1.hi_bound == Approx(7.0));
    CHECK(nb1.k_bound == Approx(20.0));

    const auto factor = sample_d_factor(build_complete(6), 3, RandomSeed{3}, 0);
    const auto gs = graph_state_calibration(factor, 1.0);
    const auto nb2 = norm_bounds(gs);
    CHECK(nb2.hi_bound == Approx(9 * kPi / 4).epsilon(1e-14));
    CHECK(nb2.k_bound == Approx(9 * kPi).epsilon(1e-14));
}

TEST_CASE("energy table matches the direct double loop") {
    for (int n : {3, 6, 10}) {
        const auto params = random_instance(n, n > 3 ? 3 : 2, RandomSeed{7u + n});
        const auto table = energy_table(params);
        REQUIRE(table.size() == (1ull << n));
        for (std::uint64_t x = 0; x < table.size(); x += 7) {
            double e = 0;
            for (int i = 0; i < n; ++i) {
                e += params.h[i] * (((x >> i) & 1) ? -1.0 : 1.0);
            }
            for (std::size_t k = 0; k < params.J.size(); ++k) {
                const auto& [u, v] = params.graph.edges[k];
                const double zu = ((x >> u) & 1) ? -1.0 : 1.0;
                const double zv = ((x >> v) & 1) ? -1.0 : 1.0;
                e += params.J[k] * zu * zv;
            }
            CHECK(table[x] == Approx(e).epsilon(1e-12));
        }
    }
}

TEST_CASE("exact H_I norm on forced cases") {
    const auto single = IsingParams::create(make_graph(1, {}), {0.3}, {});
    CHECK(exact_hi_norm(single) == Approx(0.3));
    const auto pair = IsingParams::create(make_graph(2, {{0, 1}}, 1), {0, 0}, {1});
    CHECK(exact_hi_norm(pair) == Approx(1.0));
}

TEST_CASE("exact H_I norm equals the dense spectral norm") {
    for (std::uint64_t s : {1ull, 2ull, 3ull}) {
        const auto params = random_instance(10, 3, RandomSeed{s});
        CHECK(exact_hi_norm(params) ==
              Approx(spectral_norm_svd(dense_hi(params))).epsilon(1e-12));
    }
}

TEST_CASE("exact commutator norm on forced cases") {
    const auto zero = IsingParams::create(make_graph(2, {{0, 1}}, 1), {0, 0}, {0});
    CHECK(exact_commutator_norm(zero) == 0.0);
    // [X, Z] = -2iY has norm 2, matching the analytic cap 2|h|.
    const auto single = IsingParams::create(make_graph(1, {}), {1.0}, {});
    CHECK(exact_commutator_norm(single) == Approx(2.0).epsilon(1e-10));
    CHECK(norm_bounds(single).k_bound == Approx(2.0));
}

TEST_CASE("exact commutator norm equals the dense commutator SVD") {
    for (int n : {2, 4, 6}) {
        const auto params = random_instance(n, n - 1 - (n % 2), RandomSeed{11u + n});
        const CMatrix hx = dense_hx(n);
        const CMatrix hi = dense_hi(params);
        const double dense = spectral_norm_svd(hx * hi - hi * hx);
        CHECK(exact_commutator_norm(params) == Approx(dense).epsilon(1e-10));
    }
}

TEST_CASE("exact norms never exceed the analytic bounds") {
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + static_cast<int>(i % 9);
        int d = 1 + static_cast<int>((i / 3) % std::min(5, std::max(1, n - 1)));
        if ((n * d) % 2) d = (d > 1) ? d - 1 : d + 1;
        if (d >= n || (n * d) % 2) continue;
        const auto params = random_instance(n, d, RandomSeed{100u + i});
        const auto nb = norm_bounds(params);
        CHECK(exact_hi_norm(params) <= nb.hi_bound * (1 + 1e-12));
        if (n <= 10) {
            CHECK(exact_commutator_norm(params) <= nb.k_bound * (1 + 1e-10));
        }
    }
}

TEST_CASE("snap_to_grid") {
    const auto g = make_graph(2, {{0, 1}}, 1);
    const auto params = IsingParams::create(g, {0.4, kPi / 16}, {kPi / 4});
    const auto snapped = snap_to_grid(params, 1.0);
    CHECK(snapped.scaled_h[0] == Approx(kPi / 8).epsilon(1e-15));
    // Midpoint tie resolves toward the smaller grid index.
    CHECK(snapped.scaled_h[1] == 0.0);
    CHECK(snapped.scaled_J[0] == Approx(kPi / 4).epsilon(1e-15));
    CHECK(snapped.max_residual == Approx(kPi / 16).epsilon(1e-12));

    const auto lone = IsingParams::create(g, {0.4, 0.0}, {kPi / 4});
    CHECK(snap_to_grid(lone, 1.0).max_residual ==
          Approx(std::abs(0.4 - kPi / 8)).epsilon(1e-12));

    // Negative angles wrap into [0, pi).
    const auto neg = IsingParams::create(g, {-kPi / 8, 0}, {0});
    const auto snapped_neg = snap_to_grid(neg, 1.0);
    CHECK(snapped_neg.scaled_h[0] == Approx(7 * kPi / 8).epsilon(1e-15));

    CHECK_THROWS_AS(snap_to_grid(params, 0.0), std::invalid_argument);
}

TEST_CASE("snap_to_grid is idempotent") {
    const auto params = random_instance(6, 3, RandomSeed{17}, 2.0);
    const auto first = snap_to_grid(params, 1.3);
    const auto again = IsingParams::create(params.graph, first.scaled_h, first.scaled_J);
    const auto second = snap_to_grid(again, 1.0);
    CHECK(second.max_residual <= 1e-12);
    for (std::size_t i = 0; i < first.scaled_h.size(); ++i) {
        CHECK(second.scaled_h[i] == Approx(first.scaled_h[i]).scale(1).epsilon(1e-15));
    }
    for (std::size_t k = 0; k < first.scaled_J.size(); ++k) {
        CHECK(second.scaled_J[k] == Approx(first.scaled_J[k]).scale(1).epsilon(1e-15));
    }
}

TEST_CASE("graph-state calibration") {
    const auto tri = make_graph(3, {{0, 1}, {0, 2}, {1, 2}}, 2);
    const auto a = graph_state_calibration(tri, 1.0);
    for (const double j : a.J) CHECK(j == Approx(kPi / 4).epsilon(1e-15));
    for (const double h : a.h) CHECK(h == 0.0);
    const auto b = graph_state_calibration(tri, kPi / 4);
    for (const double j : b.J) CHECK(j == Approx(1.0).epsilon(1e-15));
    const auto empty = graph_state_calibration(make_graph(3, {}), 2.0);
    CHECK(empty.J.empty());
    CHECK(norm_bounds(empty).hi_bound == 0.0);
}

TEST_CASE("perturbation bound") {
    CHECK(perturbation_bound(std::vector<double>{}, std::vector<double>{}) == 0.0);
    const std::vector<double> dh(4, 0.05);
    const std::vector<double> dJ(6, 0.05);
    CHECK(perturbation_bound(dh, dJ) == Approx((4 + 6) * 0.05).epsilon(1e-14));
    // m = d*n/2 gives the (1 + d/2) n delta_par form.
    const int n = 6, d = 3;
    const std::vector<double> dh2(n, 0.01), dJ2(n * d / 2, 0.01);
    CHECK(perturbation_bound(dh2, dJ2) ==
          Approx((1 + d / 2.0) * n * 0.01).epsilon(1e-14));
}

TEST_CASE("coefficient caps are enforced") {
    const auto g = make_graph(2, {{0, 1}}, 1);
    CHECK_THROWS_AS(IsingParams::create(g, {10.0, 0}, {0}), std::invalid_argument);
    CHECK_NOTHROW(IsingParams::create(g, {10.0, 0}, {0}, 10.0, kPi));
}

TEST_SUITE_END();
