#include "lat/emission.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lat {

namespace {

constexpr int GENESIS_YEAR = 2026;

using u128 = unsigned __int128;

// First halving index whose shifted subsidy is at or below the tail floor.
uint64_t tail_era(const ChainParams& params) {
    uint64_t j = 0;
    while (j < 64 && (params.initial_subsidy >> j) > params.tail_emission) ++j;
    return j;
}

std::string trim_amount(uint64_t shors) {
    // LAT amount with trailing zeros trimmed (at least one decimal kept).
    std::string s = format_lat(shors);
    size_t last = s.find_last_not_of('0');
    if (s[last] == '.') ++last;
    return s.substr(0, last + 1);
}

int year_of(const ChainParams& params, uint64_t height) {
    return GENESIS_YEAR +
           static_cast<int>(static_cast<double>(height_to_time(params, height)) / SECONDS_PER_YEAR);
}

}  // namespace

uint64_t block_subsidy(const ChainParams& params, uint64_t height) {
    if (params.warmup_subsidy > 0 && params.warmup_blocks > 0 && height < params.warmup_blocks)
        return params.warmup_subsidy;
    uint64_t halvings = height / params.halving_interval;
    if (halvings >= 64) return params.tail_emission;
    uint64_t subsidy = params.initial_subsidy >> halvings;
    return std::max(subsidy, params.tail_emission);
}

uint64_t cumulative_supply(const ChainParams& params, uint64_t height) {
    const uint64_t wb = params.warmup_blocks;
    const uint64_t interval = params.halving_interval;
    u128 total = 0;

    u128 warm_count = height < wb ? static_cast<u128>(height) + 1 : wb;
    total += warm_count * params.warmup_subsidy;

    if (height >= wb) {
        const uint64_t last_era = height / interval;
        const uint64_t jt = tail_era(params);
        for (uint64_t j = 0; j <= last_era && j < jt; ++j) {
            uint64_t lo = std::max(j * interval, wb);
            u128 era_end = static_cast<u128>(j + 1) * interval - 1;
            uint64_t hi = era_end < height ? static_cast<uint64_t>(era_end) : height;
            if (lo > hi) continue;
            total += static_cast<u128>(hi - lo + 1) * (params.initial_subsidy >> j);
        }
        if (last_era >= jt) {
            uint64_t lo = std::max(jt * interval, wb);
            if (lo <= height) total += static_cast<u128>(height - lo + 1) * params.tail_emission;
        }
    }

    if (total > params.max_money)
        throw std::range_error("cumulative supply exceeds max_money at height " +
                               std::to_string(height));
    return static_cast<uint64_t>(total);
}

uint64_t tail_start_height(const ChainParams& params) {
    return std::max(tail_era(params) * params.halving_interval, params.warmup_blocks);
}

uint64_t supply_at_tail_start(const ChainParams& params) {
    return cumulative_supply(params, tail_start_height(params) - 1);
}

std::vector<ScheduleRow> emission_schedule(const ChainParams& params) {
    std::vector<ScheduleRow> rows;
    const uint64_t wb = params.warmup_blocks;
    const uint64_t interval = params.halving_interval;
    const uint64_t jt = tail_era(params);

    if (wb > 0) {
        double hours = static_cast<double>(height_to_time(params, wb)) / 3600.0;
        std::ostringstream date;
        date << GENESIS_YEAR << " (" << std::fixed;
        date.precision(1);
        date << hours << "h)";
        rows.push_back({"Warm-up", 0, wb - 1, params.warmup_subsidy, params.warmup_spacing,
                        date.str(), cumulative_supply(params, wb - 1)});
    }

    for (uint64_t j = 0; j < jt; ++j) {
        uint64_t first = std::max(j * interval, wb);
        uint64_t last = (j + 1) * interval - 1;
        if (first > last) continue;
        std::string date = std::to_string(year_of(params, first)) + "--" +
                           std::to_string(year_of(params, last));
        rows.push_back({"Halving " + std::to_string(j), first, last, params.initial_subsidy >> j,
                        params.spacing, date, cumulative_supply(params, last)});
    }

    uint64_t tail_first = tail_start_height(params);
    rows.push_back({"Tail", tail_first, UINT64_MAX, params.tail_emission, params.spacing,
                    std::to_string(year_of(params, tail_first)) + "+", params.max_money});
    return rows;
}

namespace {

std::string blocks_label(const ScheduleRow& row) {
    if (row.last_height == UINT64_MAX) return std::to_string(row.first_height) + "+";
    return std::to_string(row.first_height) + "--" + std::to_string(row.last_height);
}

std::string cumulative_label(const ScheduleRow& row) {
    if (row.last_height == UINT64_MAX) {
        double annual = static_cast<double>(row.reward_shors) / SHORS_PER_LAT *
                        (SECONDS_PER_YEAR / static_cast<double>(row.block_time_s));
        std::ostringstream os;
        os << "+" << std::fixed;
        os.precision(1);
        os << annual << "/yr";
        return os.str();
    }
    return trim_amount(row.cumulative_shors);
}

}  // namespace

std::string schedule_csv(const std::vector<ScheduleRow>& rows) {
    std::ostringstream os;
    os << "phase,first_height,last_height,reward_lat,block_time_s,approx_date,cumulative_lat\n";
    for (const ScheduleRow& r : rows) {
        os << r.phase << ',' << r.first_height << ',';
        if (r.last_height == UINT64_MAX)
            os << "";
        else
            os << r.last_height;
        os << ',' << format_lat(r.reward_shors) << ',' << r.block_time_s << ',' << r.date_label
           << ',';
        if (r.last_height == UINT64_MAX)
            os << "";
        else
            os << format_lat(r.cumulative_shors);
        os << '\n';
    }
    return os.str();
}

std::string schedule_markdown(const std::vector<ScheduleRow>& rows) {
    // Column order follows the published timeline table.
    std::ostringstream os;
    os << "| Phase | Blocks | Reward | Block Time | Approx. Date | Cumul. Supply |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const ScheduleRow& r : rows) {
        os << "| " << r.phase << " | " << blocks_label(r) << " | " << trim_amount(r.reward_shors)
           << " LAT | " << r.block_time_s << "s | " << r.date_label << " | "
           << cumulative_label(r) << " |\n";
    }
    return os.str();
}

double annual_tail_emission_lat(const ChainParams& params) {
    return static_cast<double>(params.tail_emission) / SHORS_PER_LAT * BLOCKS_PER_YEAR;
}

double inflation_rate(const ChainParams& params, double years_after_tail) {
    if (years_after_tail < 0) throw std::domain_error("inflation: years must be non-negative");
    double annual = annual_tail_emission_lat(params);
    double s0 = static_cast<double>(supply_at_tail_start(params)) / SHORS_PER_LAT;
    return annual / (s0 + annual * years_after_tail);
}

int64_t max_money_year(const ChainParams& params) {
    uint64_t s0 = supply_at_tail_start(params);
    double headroom_lat = static_cast<double>(params.max_money - s0) / SHORS_PER_LAT;
    return static_cast<int64_t>(std::floor(headroom_lat / annual_tail_emission_lat(params)));
}

int64_t height_to_time(const ChainParams& params, uint64_t height) {
    u128 warm = static_cast<u128>(std::min(height, params.warmup_blocks)) *
                static_cast<u128>(params.warmup_spacing);
    u128 steady = height > params.warmup_blocks
                      ? static_cast<u128>(height - params.warmup_blocks) *
                            static_cast<u128>(params.spacing)
                      : 0;
    u128 total = warm + steady;
    if (total > static_cast<u128>(INT64_MAX)) throw std::range_error("height_to_time overflow");
    return static_cast<int64_t>(total);
}

std::string format_lat(uint64_t shors) {
    uint64_t whole = shors / SHORS_PER_LAT;
    uint64_t frac = shors % SHORS_PER_LAT;
    std::string f = std::to_string(frac);
    f.insert(0, 8 - f.size(), '0');
    return std::to_string(whole) + "." + f;
}

}  // namespace lat
