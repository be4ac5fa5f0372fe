#include "lat/security.hpp"

#include <cmath>
#include <stdexcept>

#include "lat/chainparams.hpp"

namespace lat {

namespace {

void check_profile(const AttackerProfile& a) {
    if (!(a.q >= 0.0 && a.q < 1.0)) throw std::domain_error("attacker fraction must be in [0,1)");
    if (a.k < 0) throw std::domain_error("confirmations must be non-negative");
    if (a.q >= 0.5) throw std::domain_error("race bound needs a minority attacker (q < 0.5)");
}

}  // namespace

double double_spend_bound(const AttackerProfile& a) {
    check_profile(a);
    double rho = a.q / (1.0 - a.q);
    return std::min(1.0, std::pow(rho, a.k));
}

double double_spend_poisson(const AttackerProfile& a) {
    check_profile(a);
    if (a.k == 0) return 1.0;
    double rho = a.q / (1.0 - a.q);
    double lambda = a.k * rho;
    if (lambda == 0.0) return 0.0;

    double covered = 0.0;
    if (a.k <= 30) {
        double term = std::exp(-lambda);  // e^-l l^i / i!, built up iteratively
        for (int i = 0; i < a.k; ++i) {
            if (i > 0) term *= lambda / i;
            covered += term * (1.0 - std::pow(rho, a.k - i));
        }
    } else {
        double log_lambda = std::log(lambda);
        for (int i = 0; i < a.k; ++i) {
            double log_term = -lambda + i * log_lambda - std::lgamma(i + 1.0);
            covered += std::exp(log_term) * (1.0 - std::pow(rho, a.k - i));
        }
    }
    return std::max(0.0, 1.0 - covered);
}

int finality_confirmations(double q, double p_target) {
    if (!(q > 0.0 && q < 0.5)) throw std::domain_error("fraction must be in (0, 0.5)");
    if (!(p_target > 0.0)) throw std::domain_error("target probability must be positive");
    if (p_target >= 1.0) return 0;

    double rho = q / (1.0 - q);
    double est = std::ceil(std::log(p_target) / std::log(rho));
    int k = est < 1.0 ? 1 : static_cast<int>(est);
    // Nudge off any floating point slop so that rho^k < p <= rho^(k-1).
    while (std::pow(rho, k) >= p_target) ++k;
    while (k > 1 && std::pow(rho, k - 1) < p_target) --k;
    return k;
}

double orphan_probability(const NetworkLink& link) {
    if (link.block_bytes < 0.0) throw std::domain_error("block size must be non-negative");
    if (!(link.bandwidth_bps > 0.0) || !(link.diameter_hops > 0.0) || !(link.block_time_s > 0.0))
        throw std::domain_error("bandwidth, diameter and block time must be positive");
    double propagation = link.block_bytes * link.diameter_hops /
                         (link.bandwidth_bps * link.block_time_s);
    return 1.0 - std::exp(-propagation);
}

double attack_cost_51(const CostModel& m) {
    if (!(m.core_hashrate > 0.0)) throw std::domain_error("core hashrate must be positive");
    if (m.honest_hashrate < 0.0 || m.cpu_usd_per_core_hour < 0.0 || m.ram_usd_per_2gb < 0.0 ||
        m.duration_hours < 0.0)
        throw std::domain_error("cost model fields must be non-negative");
    double cores = m.honest_hashrate / m.core_hashrate + 1.0;
    return cores * (m.cpu_usd_per_core_hour * m.duration_hours + 2.0 * m.ram_usd_per_2gb);
}

double memory_time_bound(double mem_bytes, double dataset_bytes, double t_mem_s,
                         double iterations) {
    if (!(mem_bytes > 0.0) || mem_bytes > dataset_bytes)
        throw std::domain_error("memory must be in (0, dataset]");
    return 8.0 * dataset_bytes / mem_bytes * t_mem_s * iterations;
}

LatticeCost lattice_attack_bits(int dimension) {
    if (dimension <= 0) throw std::domain_error("lattice dimension must be positive");
    return {0.292 * dimension, 0.265 * dimension};
}

double tps_max(uint64_t max_weight, uint64_t tx_weight, double block_time_s) {
    if (tx_weight == 0) throw std::domain_error("transaction weight must be positive");
    if (!(block_time_s > 0.0)) throw std::domain_error("block time must be positive");
    return static_cast<double>(max_weight / tx_weight) / block_time_s;
}

double storage_growth(double utilization, uint64_t max_weight, double block_time_s) {
    if (!(utilization >= 0.0 && utilization <= 1.0))
        throw std::domain_error("utilization must be in [0,1]");
    if (!(block_time_s > 0.0)) throw std::domain_error("block time must be positive");
    return static_cast<double>(max_weight) * utilization / block_time_s * SECONDS_PER_YEAR;
}

double ibd_verify_time(double n_sigs, double sigs_per_s_per_core, int cores) {
    if (n_sigs < 0.0) throw std::domain_error("signature count must be non-negative");
    if (!(sigs_per_s_per_core > 0.0) || cores < 1)
        throw std::domain_error("verification rate and core count must be positive");
    return n_sigs / (sigs_per_s_per_core * cores);
}

double degraded_block_time(double loss, double block_time_s) {
    if (!(loss >= 0.0 && loss < 1.0)) throw std::domain_error("loss fraction must be in [0,1)");
    if (!(block_time_s > 0.0)) throw std::domain_error("block time must be positive");
    return block_time_s / (1.0 - loss);
}

}  // namespace lat
