#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lat/chainparams.hpp"
#include "lat/report.hpp"

namespace lat {

// Ids of the published tables this library reproduces analytically,
// in presentation order.
std::vector<std::string> table_sections();

// Build one table by id ("4.3", "8.8.2", "scenario7", ...).
// Throws std::invalid_argument for unknown ids.
TableReport build_table(const ChainParams& params, const std::string& section);

// Every analytic table, in table_sections() order.
std::vector<TableReport> build_all_tables(const ChainParams& params);

// Step response measured by simulation: mean deviation across `seeds`
// independent trials of a 10x hashrate drop, sampled at the same offsets
// as the analytic 8.8.3 rows. Rows are derived-only: the published column
// holds the analytic-envelope cells for side-by-side comparison, not a
// value the measurement is gated on.
TableReport measured_step_response(const ChainParams& params, uint64_t seeds,
                                   uint64_t seed, int threads);

}  // namespace lat
