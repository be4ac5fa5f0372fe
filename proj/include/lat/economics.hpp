#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lat/chainparams.hpp"

namespace lat {

struct MinerSpec {
    std::string id;
    double hashrate = 0.0;        // H/s, > 0
    double cost_per_block = 0.0;  // USD per block interval, >= 0
};

struct MarketState {
    double price_usd = 0.0;      // USD per LAT
    double fees_lat = 0.0;       // fees per block
    double subsidy_lat = 0.0;    // block subsidy
    double fee_variance = 0.0;   // LAT^2
};

struct PowerModel {
    double node_watts = 0.0;     // > 0
    double usd_per_kwh = 0.0;    // > 0
};

struct BotnetEstimate {
    double total_hashrate;      // H/s
    double equivalent_nodes;    // dedicated-node equivalents
};

// Expected honest-mining margin alpha (R_s + F) p - c per block interval.
// Defection pays a flat 0, so a miner stays iff this is non-negative.
double miner_payoff_honest(double alpha, const MarketState& market, double cost_per_block);

// Electricity spend for one node over the given duration:
// watts * duration / 3.6e6 * price per kWh.
double marginal_cost_per_block(const PowerModel& pm, double duration_s);

// Coin price at which a block's energy bill equals its subsidy.
double break_even_price(double subsidy_lat, double energy_cost_usd);

// Fixed point of synchronous defection dynamics: every miner whose payoff
// at current hashrate shares is negative exits, shares are recomputed, and
// the process repeats until stable. Exits only raise the survivors' shares,
// so the loop terminates in at most n rounds. Survivors keep their input
// order. Throws std::invalid_argument on an empty or invalid set.
std::vector<MinerSpec> equilibrium_miners(const std::vector<MinerSpec>& miners,
                                          const MarketState& market);

// Cantelli tail bound sigma^2 / (sigma^2 + R_s^2) on the probability that
// one block's fees exceed the subsidy (the fee-sniping temptation).
double fee_sniping_probability_bound(double fee_variance, double subsidy_lat);

// Annual issuance value at the given height plus fee revenue:
// blocks/year * subsidy * price + annual_fees, with blocks/year taken from
// the spacing in force at that height.
double security_budget(const ChainParams& params, uint64_t height, double price_usd,
                       double annual_fees_usd);

// Aggregate botnet hashrate and its dedicated-node equivalent.
BotnetEstimate botnet_hashrate(uint64_t n_bots, double per_bot_hashrate,
                               double dedicated_node_rate = 6667.0);

struct SoloMinerRow {
    double nodes = 0.0;
    double days_to_block = 0.0;
    double kwh_per_block = 0.0;
    double energy_cost_usd = 0.0;
    double break_even_usd = 0.0;
};

// Solo-CPU miner expectations in a network of n_nodes equal miners: time to
// one block, energy drawn over that time, its cost, and the token price at
// which the block subsidy covers it. Spacing and subsidy are taken at
// `height`.
SoloMinerRow solo_miner_economics(const ChainParams& params, uint64_t height, double n_nodes,
                                  const PowerModel& pm);

}  // namespace lat
