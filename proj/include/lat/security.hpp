#pragma once

#include <cstdint>

namespace lat {

struct AttackerProfile {
    double q = 0.0;  // attacker hashrate fraction, 0 <= q < 1
    int k = 0;       // confirmation depth, k >= 0
};

struct NetworkLink {
    double block_bytes = 0.0;      // s >= 0
    double bandwidth_bps = 1.0;    // B > 0, bytes per second
    double diameter_hops = 1.0;    // d > 0
    double block_time_s = 1.0;     // T > 0
};

struct CostModel {
    double honest_hashrate = 0.0;   // H/s across the honest network
    double core_hashrate = 1.0;     // H/s per rented core, > 0
    double cpu_usd_per_core_hour = 0.0;
    double ram_usd_per_2gb = 0.0;
    double duration_hours = 0.0;
};

struct LatticeCost {
    double classical_bits;
    double quantum_bits;
};

// Catch-up race tail bound min(1, (q/(1-q))^k). Throws std::domain_error
// for q >= 0.5 (vacuous) or inputs outside the profile invariants.
double double_spend_bound(const AttackerProfile& a);

// Poisson-weighted race probability
//   1 - sum_{i=0}^{k-1} e^{-l} l^i / i! * (1 - (q/(1-q))^{k-i}),  l = k q/(1-q).
// Terms switch to log space above k = 30 to avoid underflow.
double double_spend_poisson(const AttackerProfile& a);

// Smallest k with (q/(1-q))^k < p_target. p_target >= 1 is vacuous and
// returns 0. Throws std::domain_error for q outside (0, 0.5) or p <= 0.
int finality_confirmations(double q, double p_target);

// Propagation race loss estimate 1 - exp(-s d / (B T)).
double orphan_probability(const NetworkLink& link);

// Sustained majority-rental cost (H_honest/H_core + 1)(c_cpu t + 2 c_ram).
double attack_cost_51(const CostModel& m);

// Memory/time trade-off lower bound (8 dataset / M) t_mem r, seconds.
// Throws std::domain_error unless 0 < mem_bytes <= dataset_bytes.
double memory_time_bound(double mem_bytes, double dataset_bytes, double t_mem_s,
                         double iterations);

// log2 sieving-attack costs (0.292 d, 0.265 d) for lattice dimension d > 0.
LatticeCost lattice_attack_bits(int dimension);

// floor(max_weight / tx_weight) / T, transactions per second.
double tps_max(uint64_t max_weight, uint64_t tx_weight, double block_time_s);

// Worst-case chain growth (max_weight u / T) bytes/s scaled to a year.
double storage_growth(double utilization, uint64_t max_weight, double block_time_s);

// Signature-check wall time n / (rate * cores), seconds.
double ibd_verify_time(double n_sigs, double sigs_per_s_per_core, int cores);

// Instantaneous block time T / (1 - loss) after a hashrate drop, before
// the difficulty window adapts.
double degraded_block_time(double loss, double block_time_s);

}  // namespace lat
