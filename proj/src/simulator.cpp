#include "lat/simulator.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lat/lwma.hpp"
#include "lat/rng.hpp"

namespace lat {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

void ScenarioSpec::validate() const {
    params.validate();
    if (!(h0 > 0.0) || !std::isfinite(h0))
        throw std::invalid_argument("scenario: base hashrate must be positive");
    uint64_t n = params.lwma_window;
    if (horizon < n + 1)
        throw std::invalid_argument("scenario: horizon must cover at least one window (N+1)");
    if (start_height <= n + 1 || start_height <= params.warmup_blocks)
        throw std::invalid_argument(
            "scenario: start height must lie past the warm-up and bootstrap regions");
    if (!(recovery_tolerance > 0.0))
        throw std::invalid_argument("scenario: recovery tolerance must be positive");
    if (trials < 1) throw std::invalid_argument("scenario: trials must be at least 1");
    uint64_t prev_step = 0;
    for (const ScenarioEvent& e : events) {
        if (!(e.multiplier > 0.0) || !std::isfinite(e.multiplier))
            throw std::invalid_argument("scenario: event multipliers must be positive");
        if (e.kind == ScenarioEvent::Kind::Step) {
            if (e.trigger_height < prev_step)
                throw std::invalid_argument("scenario: step events must be sorted by height");
            prev_step = e.trigger_height;
        } else {
            if (e.period < 2)
                throw std::invalid_argument("scenario: oscillation period must be >= 2 blocks");
        }
    }
    double denom = h0 * static_cast<double>(params.spacing);
    if (!(denom >= 1.0) || denom > 9e18)
        throw std::invalid_argument("scenario: hashrate * spacing out of range");
}

U256 equilibrium_target(const ChainParams& params, double h0) {
    double denom = h0 * static_cast<double>(params.spacing);
    if (!(denom >= 1.0) || denom > 9e18)
        throw std::invalid_argument("equilibrium target: hashrate * spacing out of range");
    return div_u256(U256::max(), U256::from_u64(static_cast<uint64_t>(std::llround(denom))));
}

double scenario_hashrate(const ScenarioSpec& spec, uint64_t i) {
    uint64_t height = spec.start_height + i;
    double factor = 1.0;
    for (const ScenarioEvent& e : spec.events) {
        if (e.kind == ScenarioEvent::Kind::Step) {
            if (height >= e.trigger_height) factor *= e.multiplier;
        } else {
            if (i % e.period >= e.period / 2) factor *= e.multiplier;
        }
    }
    return spec.h0 * factor;
}

namespace {

Trajectory run_one(const ScenarioSpec& spec, Rng rng) {
    const uint64_t n = spec.params.lwma_window;
    const double t_spacing = static_cast<double>(spec.params.spacing);
    const U256 eq = equilibrium_target(spec.params, spec.h0);
    const double two256 = U256::max().to_double();

    // Pre-seeded history: N+1 blocks at perfect spacing ending at start-1,
    // so the first simulated block sees an equilibrium window.
    LwmaWindow window;
    window.records.reserve(n + 1);
    for (uint64_t j = 0; j <= n; ++j) {
        uint64_t height = spec.start_height - 1 - n + j;
        int64_t ts = -static_cast<int64_t>(n - j) * spec.params.spacing;
        window.records.push_back({height, ts, eq});
    }
    LwmaState state(spec.params, window, spec.start_height);

    Trajectory out;
    out.points.resize(spec.horizon);
    double solve_sum = 0.0;
    double absdev_sum = 0.0;
    for (uint64_t i = 0; i < spec.horizon; ++i) {
        U256 target = state.next_target();
        double hashrate = scenario_hashrate(spec, i);
        double expected = two256 / (target.to_double() * hashrate);
        double dt = rng.exponential(expected);
        out.points[i] = {spec.start_height + i, dt, target, expected / t_spacing - 1.0};
        solve_sum += dt;
        absdev_sum += std::abs(out.points[i].deviation);
        state.push(std::llround(dt), target);
    }
    out.avg_block_time_s = solve_sum / static_cast<double>(spec.horizon);
    out.avg_abs_deviation = absdev_sum / static_cast<double>(spec.horizon);

    // Convergence bookkeeping is measured from the last step event.
    out.half_life_blocks = std::numeric_limits<double>::quiet_NaN();
    out.recovery_blocks = 0;
    uint64_t event_index = 0;
    bool have_step = false;
    for (const ScenarioEvent& e : spec.events) {
        if (e.kind == ScenarioEvent::Kind::Step && e.trigger_height >= spec.start_height &&
            e.trigger_height < spec.start_height + spec.horizon) {
            event_index = e.trigger_height - spec.start_height;
            have_step = true;
        }
    }
    if (have_step) {
        double dev0 = std::abs(out.points[event_index].deviation);
        out.recovery_blocks = -1;
        for (uint64_t m = 0; event_index + m < spec.horizon; ++m) {
            double d = std::abs(out.points[event_index + m].deviation);
            if (m > 0 && std::isnan(out.half_life_blocks) && d <= dev0 / 2.0)
                out.half_life_blocks = static_cast<double>(m);
            if (d < spec.recovery_tolerance) {
                out.recovery_blocks = static_cast<int64_t>(m);
                break;
            }
        }
    }
    return out;
}

}  // namespace

Trajectory simulate_chain(const ScenarioSpec& spec) {
    spec.validate();
    return run_one(spec, Rng(spec.seed));
}

Trajectory simulate_chain_trial(const ScenarioSpec& spec, uint64_t trial) {
    spec.validate();
    return run_one(spec, Rng::stream(spec.seed, trial));
}

namespace {

struct ChunkStats {
    std::vector<double> solve_sum;
    std::vector<double> dev_sum;
    std::vector<double> absdev_sum;
    double block_time_sum = 0.0;
    double half_life_sum = 0.0;
    uint64_t half_life_count = 0;
    double recovery_sum = 0.0;
    uint64_t recovered = 0;
};

}  // namespace

TrialAverage aggregate_trials(const ScenarioSpec& spec, int threads) {
    spec.validate();
    const uint64_t chunk_size = 64;  // fixed so reduction order never depends on threads
    const uint64_t n_chunks = (spec.trials + chunk_size - 1) / chunk_size;
    std::vector<ChunkStats> chunks(n_chunks);

    std::atomic<uint64_t> next_chunk{0};
    auto worker = [&]() {
        for (;;) {
            uint64_t c = next_chunk.fetch_add(1);
            if (c >= n_chunks) return;
            ChunkStats& st = chunks[c];
            st.solve_sum.assign(spec.horizon, 0.0);
            st.dev_sum.assign(spec.horizon, 0.0);
            st.absdev_sum.assign(spec.horizon, 0.0);
            uint64_t lo = c * chunk_size;
            uint64_t hi = std::min(spec.trials, lo + chunk_size);
            for (uint64_t t = lo; t < hi; ++t) {
                Trajectory tr = run_one(spec, Rng::stream(spec.seed, t));
                for (uint64_t i = 0; i < spec.horizon; ++i) {
                    st.solve_sum[i] += tr.points[i].solve_time_s;
                    st.dev_sum[i] += tr.points[i].deviation;
                    st.absdev_sum[i] += std::abs(tr.points[i].deviation);
                }
                st.block_time_sum += tr.avg_block_time_s;
                if (!std::isnan(tr.half_life_blocks)) {
                    st.half_life_sum += tr.half_life_blocks;
                    ++st.half_life_count;
                }
                if (tr.recovery_blocks >= 0) {
                    st.recovery_sum += static_cast<double>(tr.recovery_blocks);
                    ++st.recovered;
                }
            }
        }
    };

    int n_threads = resolve_threads(threads);
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    TrialAverage avg;
    avg.trials = spec.trials;
    avg.start_height = spec.start_height;
    avg.mean_solve_time_s.assign(spec.horizon, 0.0);
    avg.mean_deviation.assign(spec.horizon, 0.0);
    avg.mean_abs_deviation.assign(spec.horizon, 0.0);
    double block_time_sum = 0.0, half_life_sum = 0.0, recovery_sum = 0.0;
    uint64_t half_life_count = 0;
    for (const ChunkStats& st : chunks) {
        for (uint64_t i = 0; i < spec.horizon; ++i) {
            avg.mean_solve_time_s[i] += st.solve_sum[i];
            avg.mean_deviation[i] += st.dev_sum[i];
            avg.mean_abs_deviation[i] += st.absdev_sum[i];
        }
        block_time_sum += st.block_time_sum;
        half_life_sum += st.half_life_sum;
        half_life_count += st.half_life_count;
        recovery_sum += st.recovery_sum;
        avg.recovered_trials += st.recovered;
    }
    double inv = 1.0 / static_cast<double>(spec.trials);
    for (uint64_t i = 0; i < spec.horizon; ++i) {
        avg.mean_solve_time_s[i] *= inv;
        avg.mean_deviation[i] *= inv;
        avg.mean_abs_deviation[i] *= inv;
    }
    avg.avg_block_time_s = block_time_sum * inv;
    avg.mean_half_life_blocks =
        half_life_count ? half_life_sum / static_cast<double>(half_life_count)
                        : std::numeric_limits<double>::quiet_NaN();
    avg.mean_recovery_blocks =
        avg.recovered_trials ? recovery_sum / static_cast<double>(avg.recovered_trials)
                             : std::numeric_limits<double>::quiet_NaN();
    return avg;
}

double theorem1_bound(double delta, uint64_t m, uint64_t n_window) {
    if (!(delta > 0.0)) throw std::domain_error("multiplier must be positive");
    if (n_window < 2) throw std::domain_error("window must be at least 2");
    double ratio = (static_cast<double>(n_window) - 1.0) / (static_cast<double>(n_window) + 1.0);
    return std::abs(1.0 / delta - 1.0) * std::pow(ratio, static_cast<double>(m));
}

int64_t recovery_blocks(double delta, double epsilon, uint64_t n_window) {
    if (!(delta > 0.0)) throw std::domain_error("multiplier must be positive");
    if (!(epsilon > 0.0)) throw std::domain_error("tolerance must be positive");
    if (n_window < 2) throw std::domain_error("window must be at least 2");
    double dev0 = std::abs(1.0 / delta - 1.0);
    if (epsilon >= dev0) return 0;
    double growth = (static_cast<double>(n_window) + 1.0) / (static_cast<double>(n_window) - 1.0);
    int64_t m = static_cast<int64_t>(std::ceil(std::log(dev0 / epsilon) / std::log(growth)));
    if (m < 1) m = 1;
    // Settle floating point slop so bound(m) < eps <= bound(m-1) exactly.
    while (theorem1_bound(delta, static_cast<uint64_t>(m), n_window) >= epsilon) ++m;
    while (m > 0 && theorem1_bound(delta, static_cast<uint64_t>(m - 1), n_window) < epsilon) --m;
    return m;
}

double theorem2_avg_bound(double delta, uint64_t period, uint64_t n_window) {
    if (!(delta > 0.0)) throw std::domain_error("multiplier must be positive");
    if (period < 1) throw std::domain_error("period must be at least 1");
    if (n_window < 2) throw std::domain_error("window must be at least 2");
    double p = static_cast<double>(period);
    double n = static_cast<double>(n_window);
    return std::abs(1.0 / delta - 1.0) / (1.0 + 2.0 * p / (n + 1.0));
}

namespace {

// Catch-up walk from `k` behind, absorbing at 0 (success) or k+2000 (fail).
// Once the deficit is deep enough that the remaining success probability is
// exact to compute, one Bernoulli draw with the gambler's-ruin absorption
// probability replaces the rest of the walk; the strong Markov property
// makes this distribution-identical to walking the tail out.
bool race_once(Rng& rng, double q, int k, int telescope_depth) {
    if (k == 0) return true;
    const uint64_t attacker_threshold =
        static_cast<uint64_t>(q * 18446744073709551616.0);  // q * 2^64
    const int fail_bound = k + 2000;
    const int deep = std::min(k + telescope_depth, fail_bound);
    int deficit = k;
    for (;;) {
        if (rng.next() < attacker_threshold) {
            if (--deficit == 0) return true;
        } else {
            if (++deficit == deep) break;
        }
    }
    if (deep == fail_bound) return false;
    long double rho = static_cast<long double>(q) / (1.0L - static_cast<long double>(q));
    long double rho_b = std::pow(rho, static_cast<long double>(fail_bound));
    long double p_catch = (std::pow(rho, static_cast<long double>(deep)) - rho_b) / (1.0L - rho_b);
    return rng.uniform01() < static_cast<double>(p_catch);
}

}  // namespace

double simulate_double_spend_race(double q, int k, uint64_t trials, uint64_t seed, int threads) {
    if (!(q > 0.0 && q < 0.5)) throw std::domain_error("fraction must be in (0, 0.5)");
    if (k < 0) throw std::domain_error("confirmations must be non-negative");
    if (trials < 1) throw std::domain_error("trials must be at least 1");

    double rho = q / (1.0 - q);
    // Deep enough that the pre-telescope walk already resolves all but
    // ~1e-12 of the success probability mass.
    int telescope_depth =
        static_cast<int>(std::ceil(std::log(1e12) / std::log(1.0 / rho)));
    telescope_depth = std::min(std::max(telescope_depth, 1), 2000);

    int n_threads = resolve_threads(threads);
    std::atomic<uint64_t> next_trial{0};
    std::vector<uint64_t> successes(static_cast<size_t>(n_threads), 0);
    const uint64_t batch = 1024;
    auto worker = [&](int who) {
        uint64_t local = 0;
        for (;;) {
            uint64_t lo = next_trial.fetch_add(batch);
            if (lo >= trials) break;
            uint64_t hi = std::min(trials, lo + batch);
            for (uint64_t t = lo; t < hi; ++t) {
                Rng rng = Rng::stream(seed, t);
                if (race_once(rng, q, k, telescope_depth)) ++local;
            }
        }
        successes[static_cast<size_t>(who)] = local;
    };
    if (n_threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker, i);
        for (std::thread& th : pool) th.join();
    }
    uint64_t total = 0;
    for (uint64_t s : successes) total += s;
    return static_cast<double>(total) / static_cast<double>(trials);
}

ScenarioSpec load_scenario(const std::string& path, const ChainParams& params) {
    ScenarioSpec spec;
    spec.params = params;
    bool have_horizon = false;
    for (const auto& [key, value] : read_kv_file(path)) {
        try {
            if (key == "h0") {
                spec.h0 = std::stod(value);
            } else if (key == "horizon") {
                spec.horizon = std::stoull(value);
                have_horizon = true;
            } else if (key == "seed") {
                spec.seed = std::stoull(value);
            } else if (key == "start_height") {
                spec.start_height = std::stoull(value);
            } else if (key == "recovery_tolerance") {
                spec.recovery_tolerance = std::stod(value);
            } else if (key == "trials") {
                spec.trials = std::stoull(value);
            } else if (key == "event") {
                size_t colon = value.find(':');
                size_t comma = value.find(',');
                if (colon == std::string::npos || comma == std::string::npos || comma < colon)
                    throw std::runtime_error("malformed event");
                std::string kind = value.substr(0, colon);
                std::string first = value.substr(colon + 1, comma - colon - 1);
                std::string second = value.substr(comma + 1);
                ScenarioEvent e;
                e.multiplier = std::stod(second);
                if (kind == "step") {
                    e.kind = ScenarioEvent::Kind::Step;
                    e.trigger_height = std::stoull(first);
                } else if (kind == "osc") {
                    e.kind = ScenarioEvent::Kind::Oscillation;
                    e.period = std::stoull(first);
                } else {
                    throw std::runtime_error("unknown event kind '" + kind + "'");
                }
                spec.events.push_back(e);
            } else {
                throw std::runtime_error("unknown scenario key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("scenario " + path + ": bad value for '" + key + "'");
        } catch (const std::out_of_range&) {
            throw std::runtime_error("scenario " + path + ": value out of range for '" + key +
                                     "'");
        }
    }
    if (!have_horizon) throw std::runtime_error("scenario " + path + ": missing 'horizon'");
    spec.validate();
    return spec;
}

std::string trajectory_csv(const Trajectory& t) {
    std::ostringstream os;
    os << "height,solve_time_s,target_hex,deviation\n";
    for (const TrajectoryPoint& p : t.points) {
        os << p.height << ',' << fmt_double(p.solve_time_s) << ',' << p.target.to_hex() << ','
           << fmt_double(p.deviation) << '\n';
    }
    return os.str();
}

std::string trial_average_csv(const TrialAverage& avg) {
    std::ostringstream os;
    os << "height,mean_solve_time_s,mean_deviation,mean_abs_deviation\n";
    for (size_t i = 0; i < avg.mean_solve_time_s.size(); ++i) {
        os << (avg.start_height + i) << ',' << fmt_double(avg.mean_solve_time_s[i]) << ','
           << fmt_double(avg.mean_deviation[i]) << ',' << fmt_double(avg.mean_abs_deviation[i])
           << '\n';
    }
    return os.str();
}

}  // namespace lat
