#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lat/compact.hpp"
#include "lat/u256.hpp"

namespace lat {

constexpr uint64_t SHORS_PER_LAT = 100'000'000;
// 365.25 days of 240 s blocks; used for every annualized figure.
constexpr uint64_t BLOCKS_PER_YEAR = 131'490;
constexpr double SECONDS_PER_YEAR = 365.25 * 86400.0;

struct WeightStage {
    uint64_t activation_height;
    uint64_t max_weight;
};

struct ChainParams {
    uint64_t warmup_blocks = 5'670;
    int64_t warmup_spacing = 53;
    int64_t spacing = 240;
    uint64_t warmup_subsidy = 25 * SHORS_PER_LAT;
    uint64_t initial_subsidy = 50 * SHORS_PER_LAT;
    uint64_t halving_interval = 295'000;
    uint64_t tail_emission = 15'000'000;  // 0.15 LAT in shors
    CompactBits pow_limit_bits = 0x207fffff;
    uint64_t lwma_window = 120;
    std::vector<WeightStage> weight_stages = {
        {0, 11'000'000}, {50'000, 28'000'000}, {100'000, 56'000'000}};
    uint64_t max_money = 42'000'000 * SHORS_PER_LAT;
    uint64_t coinbase_maturity = 100;

    U256 pow_limit() const { return expand_compact(pow_limit_bits); }
    // Throws std::invalid_argument when a field violates its invariants.
    void validate() const;
};

int64_t target_spacing(const ChainParams& params, uint64_t height);
uint64_t max_block_weight(const ChainParams& params, uint64_t height);

// Loads params from a key=value file ('#' comments). Unknown keys are
// rejected; missing keys keep their defaults. The result is validated.
ChainParams load_chain_params(const std::string& path);

struct BlockRecord {
    uint64_t height = 0;
    int64_t timestamp = 0;
    U256 target;
};

// Shared key=value reader: returns (key, value) pairs in file order,
// preserving duplicates. Throws std::runtime_error on I/O or syntax errors.
std::vector<std::pair<std::string, std::string>> read_kv_file(const std::string& path);

}  // namespace lat
