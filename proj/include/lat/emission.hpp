#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lat/chainparams.hpp"

namespace lat {

// All amounts are integer shors (1 LAT = 10^8 shors); monetary arithmetic
// never touches floating point.

uint64_t block_subsidy(const ChainParams& params, uint64_t height);

// Sum of block_subsidy over heights 0..height inclusive, in closed form.
// Throws std::range_error (naming the offending height) when the total
// would exceed max_money.
uint64_t cumulative_supply(const ChainParams& params, uint64_t height);

// First height paying the tail subsidy.
uint64_t tail_start_height(const ChainParams& params);

// Supply already issued when the tail begins (cumulative at tail start - 1).
uint64_t supply_at_tail_start(const ChainParams& params);

struct ScheduleRow {
    std::string phase;
    uint64_t first_height;
    uint64_t last_height;  // UINT64_MAX marks the open-ended tail row
    uint64_t reward_shors;
    int64_t block_time_s;
    std::string date_label;     // display-only approximation
    uint64_t cumulative_shors;  // at last_height; max_money for the tail row
};

// One row per phase: warm-up, each halving era above the tail floor, tail.
std::vector<ScheduleRow> emission_schedule(const ChainParams& params);

std::string schedule_csv(const std::vector<ScheduleRow>& rows);
std::string schedule_markdown(const std::vector<ScheduleRow>& rows);

// Annual issuance once the tail is active, in LAT.
double annual_tail_emission_lat(const ChainParams& params);

// Inflation rate (fraction per year) t years after tail onset.
double inflation_rate(const ChainParams& params, double years_after_tail);

// Years after tail onset until the supply cap is reached, rounded down.
int64_t max_money_year(const ChainParams& params);

// Expected seconds since genesis to reach the given height.
int64_t height_to_time(const ChainParams& params, uint64_t height);

// Fixed-point rendering of shors as a LAT string with 8 decimals.
std::string format_lat(uint64_t shors);

}  // namespace lat
