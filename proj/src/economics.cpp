#include "lat/economics.hpp"

#include <cmath>
#include <stdexcept>

#include "lat/emission.hpp"

namespace lat {

double miner_payoff_honest(double alpha, const MarketState& market, double cost_per_block) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("hashrate share must be in [0,1]");
    if (market.price_usd < 0.0 || market.fees_lat < 0.0 || market.subsidy_lat < 0.0 ||
        cost_per_block < 0.0)
        throw std::domain_error("market fields and cost must be non-negative");
    return alpha * (market.subsidy_lat + market.fees_lat) * market.price_usd - cost_per_block;
}

double marginal_cost_per_block(const PowerModel& pm, double duration_s) {
    if (!(pm.node_watts > 0.0) || !(pm.usd_per_kwh > 0.0))
        throw std::domain_error("power model fields must be positive");
    if (duration_s < 0.0) throw std::domain_error("duration must be non-negative");
    return pm.node_watts * duration_s / 3.6e6 * pm.usd_per_kwh;
}

double break_even_price(double subsidy_lat, double energy_cost_usd) {
    if (!(subsidy_lat > 0.0)) throw std::domain_error("subsidy must be positive");
    if (energy_cost_usd < 0.0) throw std::domain_error("energy cost must be non-negative");
    return energy_cost_usd / subsidy_lat;
}

std::vector<MinerSpec> equilibrium_miners(const std::vector<MinerSpec>& miners,
                                          const MarketState& market) {
    if (miners.empty()) throw std::invalid_argument("equilibrium needs at least one miner");
    for (const MinerSpec& m : miners) {
        if (!(m.hashrate > 0.0)) throw std::invalid_argument("miner hashrate must be positive");
        if (m.cost_per_block < 0.0) throw std::invalid_argument("miner cost must be non-negative");
    }

    std::vector<MinerSpec> alive = miners;
    for (;;) {
        double total = 0.0;
        for (const MinerSpec& m : alive) total += m.hashrate;
        std::vector<MinerSpec> next;
        next.reserve(alive.size());
        for (const MinerSpec& m : alive) {
            if (miner_payoff_honest(m.hashrate / total, market, m.cost_per_block) >= 0.0)
                next.push_back(m);
        }
        if (next.size() == alive.size() || next.empty()) return next;
        alive = std::move(next);
    }
}

double fee_sniping_probability_bound(double fee_variance, double subsidy_lat) {
    if (fee_variance < 0.0) throw std::domain_error("fee variance must be non-negative");
    if (!(subsidy_lat > 0.0)) throw std::domain_error("subsidy must be positive");
    return fee_variance / (fee_variance + subsidy_lat * subsidy_lat);
}

double security_budget(const ChainParams& params, uint64_t height, double price_usd,
                       double annual_fees_usd) {
    if (price_usd < 0.0) throw std::domain_error("price must be non-negative");
    if (annual_fees_usd < 0.0) throw std::domain_error("fees must be non-negative");
    double blocks_per_year = SECONDS_PER_YEAR / static_cast<double>(target_spacing(params, height));
    double subsidy_lat = static_cast<double>(block_subsidy(params, height)) / SHORS_PER_LAT;
    return blocks_per_year * subsidy_lat * price_usd + annual_fees_usd;
}

BotnetEstimate botnet_hashrate(uint64_t n_bots, double per_bot_hashrate,
                               double dedicated_node_rate) {
    if (!(per_bot_hashrate > 0.0)) throw std::domain_error("per-bot hashrate must be positive");
    if (!(dedicated_node_rate > 0.0)) throw std::domain_error("node rate must be positive");
    double total = static_cast<double>(n_bots) * per_bot_hashrate;
    return {total, total / dedicated_node_rate};
}

SoloMinerRow solo_miner_economics(const ChainParams& params, uint64_t height, double n_nodes,
                                  const PowerModel& pm) {
    if (!(n_nodes > 0.0) || !std::isfinite(n_nodes))
        throw std::domain_error("node count must be positive and finite");
    double duration_s = n_nodes * static_cast<double>(target_spacing(params, height));
    SoloMinerRow row;
    row.nodes = n_nodes;
    row.days_to_block = duration_s / 86'400.0;
    row.kwh_per_block = pm.node_watts * duration_s / 3.6e6;
    row.energy_cost_usd = marginal_cost_per_block(pm, duration_s);
    row.break_even_usd = break_even_price(
        static_cast<double>(block_subsidy(params, height)) / SHORS_PER_LAT,
        row.energy_cost_usd);
    return row;
}

}  // namespace lat
