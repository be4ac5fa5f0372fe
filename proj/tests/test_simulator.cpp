#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "lat/simulator.hpp"

using namespace lat;

namespace {

ScenarioSpec base_spec() {
    ScenarioSpec spec;
    spec.h0 = 1e6;
    spec.horizon = 400;
    spec.seed = 7;
    spec.start_height = 100'000;
    spec.trials = 1;
    return spec;
}

bool same_double(double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || a == b;
}

bool same_average(const TrialAverage& a, const TrialAverage& b) {
    if (a.trials != b.trials || a.start_height != b.start_height) return false;
    if (a.mean_solve_time_s != b.mean_solve_time_s) return false;
    if (a.mean_deviation != b.mean_deviation) return false;
    if (a.mean_abs_deviation != b.mean_abs_deviation) return false;
    return same_double(a.avg_block_time_s, b.avg_block_time_s) &&
           same_double(a.mean_half_life_blocks, b.mean_half_life_blocks) &&
           same_double(a.mean_recovery_blocks, b.mean_recovery_blocks) &&
           a.recovered_trials == b.recovered_trials;
}

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << body;
    return path;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    size_t pos = 0;
    for (;;) {
        size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

}  // namespace

TEST_CASE("equilibrium target inverts the hashrate") {
    ChainParams p;
    U256 eq = equilibrium_target(p, 1e6);
    CHECK(eq == div_u256(U256::max(), U256::from_u64(240'000'000)));
    CHECK_THROWS_AS(equilibrium_target(p, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(equilibrium_target(p, 1e17), std::invalid_argument);
}

TEST_CASE("hashrate schedule composes steps and oscillations") {
    ScenarioSpec spec = base_spec();
    spec.events = {{ScenarioEvent::Kind::Step, 100'050, 0, 2.0},
                   {ScenarioEvent::Kind::Oscillation, 0, 10, 3.0}};
    CHECK(scenario_hashrate(spec, 0) == 1e6);
    CHECK(scenario_hashrate(spec, 4) == 1e6);
    CHECK(scenario_hashrate(spec, 5) == 3e6);   // second half of the period
    CHECK(scenario_hashrate(spec, 9) == 3e6);
    CHECK(scenario_hashrate(spec, 10) == 1e6);
    CHECK(scenario_hashrate(spec, 50) == 2e6);  // step landed, first half
    CHECK(scenario_hashrate(spec, 55) == 6e6);  // both factors
    CHECK(scenario_hashrate(spec, 400) == 2e6);
}

TEST_CASE("scenario invariants are enforced") {
    CHECK_NOTHROW(base_spec().validate());
    auto reject = [](void (*tweak)(ScenarioSpec&)) {
        ScenarioSpec spec = base_spec();
        tweak(spec);
        CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    };
    reject([](ScenarioSpec& s) { s.h0 = 0.0; });
    reject([](ScenarioSpec& s) { s.h0 = INFINITY; });
    reject([](ScenarioSpec& s) { s.horizon = s.params.lwma_window; });
    reject([](ScenarioSpec& s) { s.start_height = s.params.lwma_window + 1; });
    reject([](ScenarioSpec& s) { s.start_height = 5'000; });  // inside warm-up
    reject([](ScenarioSpec& s) { s.recovery_tolerance = 0.0; });
    reject([](ScenarioSpec& s) { s.trials = 0; });
    reject([](ScenarioSpec& s) {
        s.events = {{ScenarioEvent::Kind::Step, 100'100, 0, 0.0}};
    });
    reject([](ScenarioSpec& s) {
        s.events = {{ScenarioEvent::Kind::Step, 100'200, 0, 2.0},
                    {ScenarioEvent::Kind::Step, 100'100, 0, 3.0}};
    });
    reject([](ScenarioSpec& s) {
        s.events = {{ScenarioEvent::Kind::Oscillation, 0, 1, 2.0}};
    });
    reject([](ScenarioSpec& s) { s.h0 = 1e-3; });
    reject([](ScenarioSpec& s) { s.h0 = 1e18; });
}

TEST_CASE("chain runs are deterministic in the seed") {
    ScenarioSpec spec = base_spec();
    Trajectory a = simulate_chain(spec);
    Trajectory b = simulate_chain(spec);
    REQUIRE(a.points.size() == spec.horizon);
    CHECK(trajectory_csv(a) == trajectory_csv(b));

    Trajectory c = simulate_chain_trial(spec, 3);
    Trajectory d = simulate_chain_trial(spec, 3);
    CHECK(trajectory_csv(c) == trajectory_csv(d));
    CHECK(trajectory_csv(a) != trajectory_csv(c));

    spec.seed = 8;
    CHECK(trajectory_csv(simulate_chain(spec)) != trajectory_csv(a));
}

TEST_CASE("undisturbed runs stay near the steady spacing") {
    ScenarioSpec spec = base_spec();
    spec.horizon = 2'000;
    Trajectory t = simulate_chain(spec);
    CHECK(std::abs(t.avg_block_time_s - 240.0) < 20.0);
    CHECK(t.avg_abs_deviation < 0.2);
    CHECK(std::isnan(t.half_life_blocks));  // no step to converge from
    CHECK(t.recovery_blocks == 0);
    for (const TrajectoryPoint& pt : t.points) CHECK(pt.solve_time_s > 0.0);
}

TEST_CASE("a hashrate step shows up as a deviation and dies out") {
    ScenarioSpec spec = base_spec();
    spec.horizon = 800;
    spec.events = {{ScenarioEvent::Kind::Step, 100'200, 0, 2.0}};
    Trajectory t = simulate_chain(spec);
    // Doubling the hashrate halves the expected solve time before the
    // window reacts: deviation near 1/delta - 1 = -0.5 plus window noise.
    CHECK(t.points[200].deviation < -0.3);
    CHECK(t.points[200].deviation > -0.7);
    CHECK(!std::isnan(t.half_life_blocks));
    CHECK(t.half_life_blocks >= 1.0);
    CHECK(t.half_life_blocks < 300.0);
    CHECK(t.recovery_blocks >= 0);
    CHECK(t.recovery_blocks < 600);
    double tail = std::abs(t.points[spec.horizon - 1].deviation);
    CHECK(tail < 0.35);
}

TEST_CASE("trial aggregation is exact and thread-count invariant") {
    ScenarioSpec spec = base_spec();
    spec.horizon = 150;
    spec.trials = 130;  // spans three reduction chunks
    TrialAverage one = aggregate_trials(spec, 1);
    TrialAverage four = aggregate_trials(spec, 4);
    CHECK(same_average(one, four));

    // The aggregate is the plain trial mean, summed in trial order.
    std::vector<double> solve_sum(spec.horizon, 0.0);
    for (uint64_t t = 0; t < spec.trials; ++t) {
        Trajectory tr = simulate_chain_trial(spec, t);
        for (uint64_t i = 0; i < spec.horizon; ++i) solve_sum[i] += tr.points[i].solve_time_s;
    }
    // Same fold shape as the implementation only when all trials share one
    // chunk, so compare against a fresh sum within tolerance instead.
    for (uint64_t i = 0; i < spec.horizon; ++i) {
        double mean = solve_sum[i] / static_cast<double>(spec.trials);
        CHECK(one.mean_solve_time_s[i] == doctest::Approx(mean).epsilon(1e-12));
    }
    CHECK(one.trials == 130);
    CHECK(one.start_height == spec.start_height);
    CHECK(std::isnan(one.mean_half_life_blocks));  // no step events anywhere
}

TEST_CASE("analytic step envelope") {
    CHECK(theorem1_bound(2.0, 0, 120) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(theorem1_bound(0.5, 0, 120) == doctest::Approx(1.0).epsilon(1e-12));
    double r = 119.0 / 121.0;
    for (uint64_t m : {1ULL, 10ULL, 119ULL}) {
        CHECK(theorem1_bound(2.0, m + 1, 120) / theorem1_bound(2.0, m, 120) ==
              doctest::Approx(r).epsilon(1e-12));
    }
    CHECK(theorem1_bound(2.0, 120, 120) ==
          doctest::Approx(0.5 * std::pow(r, 120.0)).epsilon(1e-12));
    CHECK_THROWS_AS(theorem1_bound(0.0, 1, 120), std::domain_error);
    CHECK_THROWS_AS(theorem1_bound(2.0, 1, 1), std::domain_error);

    CHECK(recovery_blocks(0.1, 0.07, 120) == 292);
    CHECK(recovery_blocks(2.0, 0.6, 120) == 0);
    int64_t m = recovery_blocks(0.25, 0.01, 120);
    CHECK(theorem1_bound(0.25, static_cast<uint64_t>(m), 120) < 0.01);
    CHECK(theorem1_bound(0.25, static_cast<uint64_t>(m - 1), 120) >= 0.01);
    CHECK_THROWS_AS(recovery_blocks(0.1, 0.0, 120), std::domain_error);

    CHECK(theorem2_avg_bound(2.0, 240, 120) ==
          doctest::Approx(0.5 / (1.0 + 480.0 / 121.0)).epsilon(1e-12));
    CHECK_THROWS_AS(theorem2_avg_bound(2.0, 0, 120), std::domain_error);
}

TEST_CASE("double spend race matches the ruin probability") {
    struct Point {
        double q;
        int k;
    };
    for (Point pt : {Point{0.1, 1}, Point{0.1, 2}, Point{0.25, 4}, Point{0.4, 6}}) {
        const uint64_t trials = 200'000;
        double rho = pt.q / (1.0 - pt.q);
        double want = std::pow(rho, pt.k);
        double hat = simulate_double_spend_race(pt.q, pt.k, trials, 11);
        double sigma = std::sqrt(want * (1.0 - want) / static_cast<double>(trials));
        CHECK(std::abs(hat - want) <= 3.0 * sigma);
    }
    CHECK(simulate_double_spend_race(0.3, 0, 1'000, 5) == 1.0);
    // The per-trial substream makes the hit count independent of threading.
    CHECK(simulate_double_spend_race(0.2, 3, 50'000, 42, 1) ==
          simulate_double_spend_race(0.2, 3, 50'000, 42, 3));
    CHECK_THROWS_AS(simulate_double_spend_race(0.0, 3, 100, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_double_spend_race(0.5, 3, 100, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_double_spend_race(0.2, -1, 100, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_double_spend_race(0.2, 3, 0, 1), std::domain_error);
}

TEST_CASE("scenario files load and reject junk") {
    ChainParams params;
    std::string good = write_temp("scn_good.cfg",
                                  "h0 = 1e6\n"
                                  "horizon = 400\n"
                                  "seed = 9\n"
                                  "start_height = 200000\n"
                                  "recovery_tolerance = 0.05\n"
                                  "trials = 4\n"
                                  "event = step:200100,2.5\n"
                                  "event = osc:16,0.5\n");
    ScenarioSpec spec = load_scenario(good, params);
    CHECK(spec.h0 == 1e6);
    CHECK(spec.horizon == 400);
    CHECK(spec.seed == 9);
    CHECK(spec.start_height == 200'000);
    CHECK(spec.recovery_tolerance == 0.05);
    CHECK(spec.trials == 4);
    REQUIRE(spec.events.size() == 2);
    CHECK(spec.events[0].kind == ScenarioEvent::Kind::Step);
    CHECK(spec.events[0].trigger_height == 200'100);
    CHECK(spec.events[0].multiplier == 2.5);
    CHECK(spec.events[1].kind == ScenarioEvent::Kind::Oscillation);
    CHECK(spec.events[1].period == 16);
    CHECK(spec.events[1].multiplier == 0.5);
    std::remove(good.c_str());

    auto expect_throw = [&](const char* name, const std::string& body) {
        std::string path = write_temp(name, body);
        CHECK_THROWS_AS(load_scenario(path, params), std::runtime_error);
        std::remove(path.c_str());
    };
    expect_throw("scn_nohorizon.cfg", "h0 = 1e6\n");
    expect_throw("scn_unknown.cfg", "horizon = 400\nwindow = 5\n");
    expect_throw("scn_badnum.cfg", "horizon = 400\nh0 = abc\n");
    expect_throw("scn_hugenum.cfg", "horizon = 99999999999999999999999\n");
    expect_throw("scn_badevent.cfg", "horizon = 400\nevent = step:5\n");
    expect_throw("scn_nocolon.cfg", "horizon = 400\nevent = 5,2\n");
    expect_throw("scn_badkind.cfg", "horizon = 400\nevent = ramp:5,2\n");

    // Structural violations surface from validate(), not the parser.
    std::string invalid = write_temp("scn_invalid.cfg", "horizon = 10\n");
    CHECK_THROWS_AS(load_scenario(invalid, params), std::invalid_argument);
    std::remove(invalid.c_str());
}

TEST_CASE("trajectory and average tables render with exact doubles") {
    ScenarioSpec spec = base_spec();
    spec.horizon = 130;
    Trajectory t = simulate_chain(spec);
    std::string csv = trajectory_csv(t);
    REQUIRE(csv.rfind("height,solve_time_s,target_hex,deviation\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 131);

    size_t line_start = csv.find('\n') + 1;
    for (int skip = 0; skip < 5; ++skip) line_start = csv.find('\n', line_start) + 1;
    std::string row = csv.substr(line_start, csv.find('\n', line_start) - line_start);
    std::vector<std::string> fields = split_csv_line(row);
    REQUIRE(fields.size() == 4);
    CHECK(std::stoull(fields[0]) == t.points[5].height);
    CHECK(std::strtod(fields[1].c_str(), nullptr) == t.points[5].solve_time_s);
    CHECK(fields[2] == t.points[5].target.to_hex());
    CHECK(std::strtod(fields[3].c_str(), nullptr) == t.points[5].deviation);

    spec.trials = 3;
    TrialAverage avg = aggregate_trials(spec, 1);
    std::string acsv = trial_average_csv(avg);
    REQUIRE(acsv.rfind("height,mean_solve_time_s,mean_deviation,mean_abs_deviation\n", 0) == 0);
    CHECK(std::count(acsv.begin(), acsv.end(), '\n') == 131);
    std::string first = acsv.substr(acsv.find('\n') + 1);
    first = first.substr(0, first.find('\n'));
    std::vector<std::string> afields = split_csv_line(first);
    REQUIRE(afields.size() == 4);
    CHECK(std::stoull(afields[0]) == spec.start_height);
    CHECK(std::strtod(afields[1].c_str(), nullptr) == avg.mean_solve_time_s[0]);
}
