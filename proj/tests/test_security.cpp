#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lat/chainparams.hpp"
#include "lat/security.hpp"

using namespace lat;

namespace {

// Long double references evaluated straight from the closed forms, without
// the iterative/log-space term construction the library uses.

long double oracle_race_bound(double q, int k) {
    long double rho = static_cast<long double>(q) / (1.0L - q);
    long double b = powl(rho, k);
    return b > 1.0L ? 1.0L : b;
}

long double oracle_poisson_race(double q, int k) {
    if (k == 0) return 1.0L;
    long double rho = static_cast<long double>(q) / (1.0L - q);
    long double lambda = k * rho;
    long double covered = 0.0L;
    for (int i = 0; i < k; ++i) {
        long double log_term = -lambda + i * logl(lambda) - lgammal(i + 1.0L);
        covered += expl(log_term) * (1.0L - powl(rho, k - i));
    }
    long double p = 1.0L - covered;
    return p < 0.0L ? 0.0L : p;
}

int oracle_confirmations(double q, double p_target) {
    if (p_target >= 1.0) return 0;
    long double rho = static_cast<long double>(q) / (1.0L - q);
    for (int k = 1;; ++k)
        if (powl(rho, k) < p_target) return k;
}

}  // namespace

TEST_CASE("race tail bound") {
    CHECK(double_spend_bound({0.1, 0}) == 1.0);
    CHECK(double_spend_bound({0.0, 5}) == 0.0);
    // Published double-spend table anchors: 0.14% and 1.56% at three
    // confirmations.
    CHECK(double_spend_bound({0.1, 3}) ==
          doctest::Approx(1.0 / 729.0).epsilon(1e-12));
    CHECK(double_spend_bound({0.2, 3}) == doctest::Approx(0.015625).epsilon(1e-12));
    for (double q : {0.01, 0.1, 0.25, 0.4, 0.45, 0.49}) {
        for (int k : {1, 2, 3, 6, 12, 50, 200}) {
            double got = double_spend_bound({q, k});
            CHECK(got == doctest::Approx(static_cast<double>(oracle_race_bound(q, k)))
                             .epsilon(1e-12));
            CHECK(got <= 1.0);
        }
    }
    CHECK_THROWS_AS(double_spend_bound({0.5, 3}), std::domain_error);
    CHECK_THROWS_AS(double_spend_bound({-0.1, 3}), std::domain_error);
    CHECK_THROWS_AS(double_spend_bound({1.2, 3}), std::domain_error);
    CHECK_THROWS_AS(double_spend_bound({0.1, -1}), std::domain_error);
}

TEST_CASE("poisson race probability matches the closed form") {
    CHECK(double_spend_poisson({0.3, 0}) == 1.0);
    CHECK(double_spend_poisson({0.0, 4}) == 0.0);
    for (double q : {0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.45, 0.49}) {
        for (int k : {1, 2, 3, 5, 10, 20, 30, 31, 32, 40, 50, 80, 120}) {
            double got = double_spend_poisson({q, k});
            double want = static_cast<double>(oracle_poisson_race(q, k));
            // Log-space reconstruction above k = 30 costs a little
            // precision; Approx keeps its default absolute scale so the
            // cancellation floor of 1 - covered (~1e-15) passes for tiny
            // probabilities.
            double tol = k <= 30 ? 1e-12 : 1e-9;
            CHECK(got == doctest::Approx(want).epsilon(tol));
        }
    }
    CHECK_THROWS_AS(double_spend_poisson({0.5, 3}), std::domain_error);
}

TEST_CASE("poisson race dominates the pure race bound") {
    // Each pre-mined block relaxes the remaining deficit, so the mixture
    // can only sit above rho^k.
    for (double q : {0.05, 0.1, 0.2, 0.3, 0.45}) {
        for (int k : {1, 2, 3, 5, 10, 25, 35, 60}) {
            CHECK(double_spend_poisson({q, k}) >= double_spend_bound({q, k}) - 1e-12);
        }
    }
}

TEST_CASE("poisson race agrees with direct simulation of the model") {
    // Draw the pre-mined lead from the Poisson, then the k-i deficit race
    // succeeds with probability rho^(k-i). Generators come from <random>,
    // fully independent of the library code.
    std::mt19937_64 g(20260819);
    auto run = [&](double q, int k, int trials) {
        double rho = q / (1.0 - q);
        std::poisson_distribution<int> lead(k * rho);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::vector<double> win(static_cast<size_t>(k) + 1, 1.0);
        for (int j = k - 1; j >= 0; --j) win[static_cast<size_t>(j)] = win[static_cast<size_t>(j) + 1] * rho;
        // win[i] = rho^(k-i) for i <= k
        int hits = 0;
        for (int t = 0; t < trials; ++t) {
            int i = lead(g);
            if (i >= k || u(g) < win[static_cast<size_t>(i)]) ++hits;
        }
        return static_cast<double>(hits) / trials;
    };
    struct Point {
        double q;
        int k;
    };
    for (Point pt : {Point{0.3, 8}, Point{0.45, 35}, Point{0.45, 50}}) {
        const int trials = 500'000;
        double p = double_spend_poisson({pt.q, pt.k});
        double hat = run(pt.q, pt.k, trials);
        double sigma = std::sqrt(p * (1.0 - p) / trials);
        CHECK(std::abs(hat - p) <= 3.0 * sigma);
    }
}

TEST_CASE("confirmation depth for a target risk") {
    CHECK(finality_confirmations(0.1, 1.0) == 0);
    CHECK(finality_confirmations(0.1, 2.0) == 0);
    CHECK(finality_confirmations(0.1, 0.001) == 4);
    CHECK(finality_confirmations(0.3, 0.001) == 9);
    CHECK(finality_confirmations(0.45, 1e-6) == 69);

    std::mt19937_64 g(7);
    std::uniform_real_distribution<double> uq(0.02, 0.48);
    std::uniform_real_distribution<double> ue(-9.0, -0.3);
    for (int i = 0; i < 100; ++i) {
        double q = uq(g);
        double p = std::pow(10.0, ue(g));
        int k = finality_confirmations(q, p);
        CHECK(k == oracle_confirmations(q, p));
        // Defining property of the returned depth.
        CHECK(double_spend_bound({q, k}) < p);
        if (k > 1) CHECK(double_spend_bound({q, k - 1}) >= p);
    }
    CHECK_THROWS_AS(finality_confirmations(0.0, 0.01), std::domain_error);
    CHECK_THROWS_AS(finality_confirmations(0.5, 0.01), std::domain_error);
    CHECK_THROWS_AS(finality_confirmations(0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(finality_confirmations(0.1, -0.5), std::domain_error);
}

TEST_CASE("propagation race loss") {
    CHECK(orphan_probability({0.0, 1e6, 3.0, 240.0}) == 0.0);
    NetworkLink link{4'000'000.0, 1.25e6, 3.0, 240.0};
    double x = link.block_bytes * link.diameter_hops / (link.bandwidth_bps * link.block_time_s);
    CHECK(orphan_probability(link) == doctest::Approx(-std::expm1(-x)).epsilon(1e-14));
    // Monotone in payload size.
    double prev = 0.0;
    for (double bytes : {1e3, 1e5, 1e7, 1e9}) {
        double r = orphan_probability({bytes, 1.25e6, 3.0, 240.0});
        CHECK(r > prev);
        CHECK(r < 1.0);
        prev = r;
    }
    CHECK_THROWS_AS(orphan_probability({-1.0, 1e6, 3.0, 240.0}), std::domain_error);
    CHECK_THROWS_AS(orphan_probability({1.0, 0.0, 3.0, 240.0}), std::domain_error);
    CHECK_THROWS_AS(orphan_probability({1.0, 1e6, 0.0, 240.0}), std::domain_error);
    CHECK_THROWS_AS(orphan_probability({1.0, 1e6, 3.0, 0.0}), std::domain_error);
}

TEST_CASE("majority rental cost") {
    CostModel m;
    m.honest_hashrate = 1000.0;
    m.core_hashrate = 10.0;
    m.cpu_usd_per_core_hour = 0.05;
    m.ram_usd_per_2gb = 2.5;
    m.duration_hours = 6.0;
    CHECK(attack_cost_51(m) == doctest::Approx(101.0 * (0.3 + 5.0)).epsilon(1e-12));
    m.duration_hours = 0.0;
    CHECK(attack_cost_51(m) == doctest::Approx(101.0 * 5.0).epsilon(1e-12));
    m.core_hashrate = 0.0;
    CHECK_THROWS_AS(attack_cost_51(m), std::domain_error);
    m.core_hashrate = 10.0;
    m.ram_usd_per_2gb = -1.0;
    CHECK_THROWS_AS(attack_cost_51(m), std::domain_error);
}

TEST_CASE("memory time trade-off floor") {
    CHECK(memory_time_bound(2e9, 2e9, 1e-7, 1e6) ==
          doctest::Approx(8.0 * 1e-7 * 1e6).epsilon(1e-12));
    CHECK(memory_time_bound(1e9, 2e9, 1e-7, 1e6) ==
          doctest::Approx(16.0 * 1e-7 * 1e6).epsilon(1e-12));
    CHECK_THROWS_AS(memory_time_bound(0.0, 2e9, 1e-7, 1e6), std::domain_error);
    CHECK_THROWS_AS(memory_time_bound(3e9, 2e9, 1e-7, 1e6), std::domain_error);
}

TEST_CASE("lattice sieving cost exponents") {
    LatticeCost c = lattice_attack_bits(1024);
    CHECK(c.classical_bits == doctest::Approx(299.008).epsilon(1e-12));
    CHECK(c.quantum_bits == doctest::Approx(271.36).epsilon(1e-12));
    LatticeCost half = lattice_attack_bits(512);
    CHECK(half.classical_bits == doctest::Approx(149.504).epsilon(1e-12));
    CHECK_THROWS_AS(lattice_attack_bits(0), std::domain_error);
    CHECK_THROWS_AS(lattice_attack_bits(-8), std::domain_error);
}

TEST_CASE("throughput, storage and sync ceilings") {
    // tx count per block floors before dividing by the block time
    CHECK(tps_max(1000, 300, 10.0) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(tps_max(999, 500, 1.0) == 1.0);
    CHECK_THROWS_AS(tps_max(1000, 0, 10.0), std::domain_error);
    CHECK_THROWS_AS(tps_max(1000, 300, 0.0), std::domain_error);

    CHECK(storage_growth(1.0, 240, 240.0) == doctest::Approx(SECONDS_PER_YEAR).epsilon(1e-12));
    CHECK(storage_growth(0.5, 240, 240.0) ==
          doctest::Approx(SECONDS_PER_YEAR / 2.0).epsilon(1e-12));
    CHECK(storage_growth(0.0, 240, 240.0) == 0.0);
    CHECK_THROWS_AS(storage_growth(1.5, 240, 240.0), std::domain_error);
    CHECK_THROWS_AS(storage_growth(-0.1, 240, 240.0), std::domain_error);

    CHECK(ibd_verify_time(6'580'000.0, 500.0, 8) == doctest::Approx(1645.0).epsilon(1e-12));
    CHECK_THROWS_AS(ibd_verify_time(-1.0, 500.0, 8), std::domain_error);
    CHECK_THROWS_AS(ibd_verify_time(1.0, 0.0, 8), std::domain_error);
    CHECK_THROWS_AS(ibd_verify_time(1.0, 500.0, 0), std::domain_error);

    CHECK(degraded_block_time(0.5, 240.0) == doctest::Approx(480.0).epsilon(1e-12));
    CHECK(degraded_block_time(0.8, 240.0) == doctest::Approx(1200.0).epsilon(1e-12));
    CHECK(degraded_block_time(0.0, 240.0) == 240.0);
    CHECK_THROWS_AS(degraded_block_time(1.0, 240.0), std::domain_error);
    CHECK_THROWS_AS(degraded_block_time(-0.2, 240.0), std::domain_error);
}
