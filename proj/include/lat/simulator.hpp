#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lat/chainparams.hpp"
#include "lat/u256.hpp"

namespace lat {

struct ScenarioEvent {
    enum class Kind { Step, Oscillation };
    Kind kind = Kind::Step;
    uint64_t trigger_height = 0;  // step only: absolute height the multiplier lands at
    uint64_t period = 0;          // oscillation only: square-wave period in blocks
    double multiplier = 1.0;      // > 0
};

struct ScenarioSpec {
    ChainParams params;
    double h0 = 1.0;  // base network hashrate, H/s
    std::vector<ScenarioEvent> events;
    uint64_t horizon = 0;  // blocks to mine
    uint64_t seed = 0;
    uint64_t start_height = 100'000;
    double recovery_tolerance = 0.07;  // |deviation| counted as recovered below this
    uint64_t trials = 1;

    // Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

struct TrajectoryPoint {
    uint64_t height = 0;
    double solve_time_s = 0.0;  // continuous exponential draw
    U256 target;
    // Relative error of the expected block time implied by (target, true
    // hashrate): 2^256/(target H) / T - 1. The realized solve time is noise
    // around it and is reported separately.
    double deviation = 0.0;
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;  // length = horizon
    double avg_block_time_s = 0.0;        // mean realized solve time
    double avg_abs_deviation = 0.0;       // time average of |deviation|
    double half_life_blocks = 0.0;        // NaN when no step event or never halved
    int64_t recovery_blocks = 0;          // blocks after the last step until
                                          // |deviation| < tolerance; -1 = never
};

// Target whose expected solve time at hashrate h0 equals the steady spacing.
U256 equilibrium_target(const ChainParams& params, double h0);

// Hashrate in force for the block at sim index `i` (height start_height+i):
// h0 times every step multiplier already triggered, times the oscillation
// square wave (second half of each period runs at the multiplier).
double scenario_hashrate(const ScenarioSpec& spec, uint64_t i);

// One seeded run: blocks mined against live LWMA retargeting from a
// pre-seeded equilibrium window. Deterministic in (spec, seed).
Trajectory simulate_chain(const ScenarioSpec& spec);

// Same run under the per-trial substream (seed, trial); trial 0..trials-1
// are mutually independent and reproducible in isolation.
Trajectory simulate_chain_trial(const ScenarioSpec& spec, uint64_t trial);

struct TrialAverage {
    uint64_t trials = 0;
    uint64_t start_height = 0;
    std::vector<double> mean_solve_time_s;    // per sim index, across trials
    std::vector<double> mean_deviation;       // signed mean
    std::vector<double> mean_abs_deviation;   // mean of |deviation|
    double avg_block_time_s = 0.0;            // grand mean
    double mean_half_life_blocks = 0.0;       // over trials that halved (NaN if none)
    double mean_recovery_blocks = 0.0;        // over recovered trials (NaN if none)
    uint64_t recovered_trials = 0;
};

// Runs spec.trials substreams (threads <= 0 picks the hardware count) and
// averages them. Reduction is chunked in fixed trial order, so the result
// is bit-identical for any thread count.
TrialAverage aggregate_trials(const ScenarioSpec& spec, int threads);

// Analytic step-response envelope |1/delta - 1| ((N-1)/(N+1))^m.
double theorem1_bound(double delta, uint64_t m, uint64_t n_window);

// Smallest m with theorem1_bound(delta, m) < epsilon; 0 when already inside.
int64_t recovery_blocks(double delta, double epsilon, uint64_t n_window);

// Oscillation time-average envelope |1/delta - 1| / (1 + 2P/(N+1)).
double theorem2_avg_bound(double delta, uint64_t period, uint64_t n_window);

// Fraction of trials in which an attacker starting k blocks behind ever
// catches up (gambler's ruin walk, capped k+2000 behind). Deterministic in
// (seed, trial index); thread count only partitions the work.
double simulate_double_spend_race(double q, int k, uint64_t trials, uint64_t seed,
                                  int threads = 1);

// Scenario key=value file: h0, horizon, seed, start_height, trials,
// recovery_tolerance, event (repeatable, "step:HEIGHT,MULT" or
// "osc:PERIOD,MULT"). Unknown keys are rejected.
ScenarioSpec load_scenario(const std::string& path, const ChainParams& params);

// CSV with columns height,solve_time_s,target_hex,deviation. Doubles are
// rendered with enough digits to round-trip exactly.
std::string trajectory_csv(const Trajectory& t);

// CSV with columns height,mean_solve_time_s,mean_deviation,mean_abs_deviation.
std::string trial_average_csv(const TrialAverage& avg);

}  // namespace lat
