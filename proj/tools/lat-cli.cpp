// lat: consensus parameter engine CLI. All protocol arithmetic lives in the
// library; this binary only parses arguments, loads parameters, and formats
// results as human-readable text, CSV, or JSON.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lat/chainparams.hpp"
#include "lat/compact.hpp"
#include "lat/economics.hpp"
#include "lat/emission.hpp"
#include "lat/lwma.hpp"
#include "lat/report.hpp"
#include "lat/security.hpp"
#include "lat/simulator.hpp"
#include "lat/tables.hpp"
#include "lat/u256.hpp"

namespace {

using nlohmann::ordered_json;

std::string human_value(const ordered_json& v) {
    if (v.is_number_float()) {
        char buf[64];
        snprintf(buf, sizeof(buf), "%.6g", v.get<double>());
        return buf;
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_value(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();  // shortest round-trip for doubles, null for NaN
}

void print_kv(const std::string& format, const ordered_json& j) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "key,value\n";
        for (auto it = j.begin(); it != j.end(); ++it)
            std::cout << it.key() << "," << csv_value(it.value()) << "\n";
        return;
    }
    size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = j.begin(); it != j.end(); ++it)
        std::cout << it.key() << std::string(width - it.key().size() + 2, ' ')
                  << human_value(it.value()) << "\n";
}

void print_rows(const std::string& format, const std::vector<std::string>& columns,
                const std::vector<ordered_json>& rows) {
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) arr.push_back(r);
        std::cout << arr.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (size_t i = 0; i < columns.size(); ++i)
            std::cout << columns[i] << (i + 1 < columns.size() ? "," : "\n");
        for (const auto& r : rows) {
            for (size_t i = 0; i < columns.size(); ++i)
                std::cout << csv_value(r.at(columns[i]))
                          << (i + 1 < columns.size() ? "," : "\n");
        }
        return;
    }
    std::vector<size_t> widths(columns.size());
    for (size_t i = 0; i < columns.size(); ++i) widths[i] = columns[i].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        std::vector<std::string> line;
        for (size_t i = 0; i < columns.size(); ++i) {
            line.push_back(human_value(r.at(columns[i])));
            widths[i] = std::max(widths[i], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    for (size_t i = 0; i < columns.size(); ++i)
        std::cout << columns[i] << std::string(widths[i] - columns[i].size() + 2, ' ');
    std::cout << "\n";
    for (const auto& line : cells) {
        for (size_t i = 0; i < columns.size(); ++i)
            std::cout << line[i] << std::string(widths[i] - line[i].size() + 2, ' ');
        std::cout << "\n";
    }
}

// Window file: one block per line, "height,timestamp,target_hex". Blank
// lines, '#' comments, and a "height,..." header line are skipped.
std::vector<lat::BlockRecord> parse_window_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open window file: " + path);
    std::vector<lat::BlockRecord> records;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line.rfind("height", 0) == 0) continue;
        std::istringstream ss(line);
        std::string h, ts, hex;
        if (!std::getline(ss, h, ',') || !std::getline(ss, ts, ',') || !std::getline(ss, hex))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected height,timestamp,target_hex");
        try {
            records.push_back({std::stoull(h), std::stoll(ts), lat::U256::from_hex(hex)});
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (records.empty()) throw std::runtime_error(path + ": no block records");
    return records;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice consensus parameter engine"};
    app.require_subcommand(1);
    app.fallthrough();  // lets subcommands accept the global --params/--format

    std::string params_path;
    std::string format = "human";
    app.add_option("--params", params_path, "chain parameter key=value file")
        ->envname("LAT_PARAMS");
    app.add_option("--format", format, "output format: human, csv, or json")
        ->check(CLI::IsMember({"human", "csv", "json"}));

    auto params = [&]() {
        lat::ChainParams p;
        if (!params_path.empty()) p = lat::load_chain_params(params_path);
        p.validate();
        return p;
    };

    int exit_code = 0;

    // subsidy <height>
    uint64_t subsidy_height = 0;
    CLI::App* subsidy = app.add_subcommand("subsidy", "block subsidy at a height");
    subsidy->add_option("height", subsidy_height, "block height")->required();
    subsidy->callback([&] {
        lat::ChainParams p = params();
        uint64_t shors = lat::block_subsidy(p, subsidy_height);
        ordered_json j;
        j["height"] = subsidy_height;
        j["subsidy_shors"] = shors;
        j["subsidy_lat"] = lat::format_lat(shors);
        print_kv(format, j);
    });

    // supply <height>
    uint64_t supply_height = 0;
    CLI::App* supply = app.add_subcommand("supply", "cumulative supply after a height");
    supply->add_option("height", supply_height, "block height")->required();
    supply->callback([&] {
        lat::ChainParams p = params();
        uint64_t shors = lat::cumulative_supply(p, supply_height);
        ordered_json j;
        j["height"] = supply_height;
        j["supply_shors"] = shors;
        j["supply_lat"] = lat::format_lat(shors);
        print_kv(format, j);
    });

    // schedule
    CLI::App* schedule = app.add_subcommand("schedule", "emission schedule table");
    schedule->callback([&] {
        lat::ChainParams p = params();
        std::vector<lat::ScheduleRow> rows = lat::emission_schedule(p);
        if (format == "csv") {
            std::cout << lat::schedule_csv(rows);
        } else if (format == "json") {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json j;
                j["phase"] = r.phase;
                j["first_height"] = r.first_height;
                if (r.last_height == UINT64_MAX)
                    j["last_height"] = nullptr;
                else
                    j["last_height"] = r.last_height;
                j["reward_shors"] = r.reward_shors;
                j["block_time_s"] = r.block_time_s;
                j["approx_date"] = r.date_label;
                if (r.last_height == UINT64_MAX)
                    j["cumulative_shors"] = nullptr;
                else
                    j["cumulative_shors"] = r.cumulative_shors;
                arr.push_back(j);
            }
            std::cout << arr.dump(2) << "\n";
        } else {
            std::cout << lat::schedule_markdown(rows);
        }
    });

    // difficulty next --window FILE [--next-height H]
    CLI::App* difficulty = app.add_subcommand("difficulty", "difficulty retargeting");
    CLI::App* diff_next = difficulty->add_subcommand("next", "next target from a block window");
    std::string window_path;
    uint64_t next_height = 0;
    diff_next->add_option("--window", window_path, "CSV of height,timestamp,target_hex")
        ->required();
    CLI::Option* next_height_opt =
        diff_next->add_option("--next-height", next_height, "height being retargeted for "
                                                            "(default: last window height + 1)");
    diff_next->callback([&] {
        lat::ChainParams p = params();
        lat::LwmaWindow window{parse_window_csv(window_path)};
        uint64_t h = *next_height_opt ? next_height : window.records.back().height + 1;
        lat::U256 target = lat::lwma_next_target(p, window, h);
        char bits[16];
        snprintf(bits, sizeof(bits), "0x%08x", lat::compress_compact(target));
        ordered_json j;
        j["next_height"] = h;
        j["target"] = target.to_hex();
        j["bits"] = bits;
        print_kv(format, j);
    });
    difficulty->require_subcommand(1);

    // attack double-spend / attack cost51
    CLI::App* attack = app.add_subcommand("attack", "attack cost and success models");
    attack->require_subcommand(1);

    CLI::App* ds = attack->add_subcommand("double-spend", "double-spend success probability");
    double ds_q = 0.0;
    int ds_k = 0;
    uint64_t ds_trials = 0;
    uint64_t ds_seed = 1;
    int ds_threads = 1;
    ds->add_option("--q", ds_q, "attacker hashrate fraction")->required();
    ds->add_option("--k", ds_k, "confirmation depth")->required();
    ds->add_option("--monte-carlo", ds_trials, "verify by race simulation with this many trials");
    ds->add_option("--seed", ds_seed, "simulation seed");
    ds->add_option("--threads", ds_threads, "simulation worker threads");
    ds->callback([&] {
        params();
        lat::AttackerProfile a{ds_q, ds_k};
        ordered_json j;
        j["q"] = ds_q;
        j["k"] = ds_k;
        j["catch_up_bound"] = lat::double_spend_bound(a);
        j["poisson_race"] = lat::double_spend_poisson(a);
        if (ds_trials > 0) {
            j["monte_carlo_trials"] = ds_trials;
            j["monte_carlo"] =
                lat::simulate_double_spend_race(ds_q, ds_k, ds_trials, ds_seed, ds_threads);
        }
        print_kv(format, j);
    });

    CLI::App* c51 = attack->add_subcommand("cost51", "sustained 51% attack rental cost");
    double c51_honest = 0.0;
    double c51_core = 5'000.0;
    double c51_cpu = 0.05;
    double c51_ram = 0.0;
    double c51_hours = 1.0;
    c51->add_option("--honest", c51_honest, "honest network hashrate (H/s)")->required();
    c51->add_option("--core", c51_core, "hashrate per rented core (H/s)");
    c51->add_option("--cpu-hour", c51_cpu, "USD per core-hour");
    c51->add_option("--ram-2gb", c51_ram, "USD per 2 GB RAM for the attack duration");
    c51->add_option("--hours", c51_hours, "attack duration in hours");
    c51->callback([&] {
        params();
        lat::CostModel m{c51_honest, c51_core, c51_cpu, c51_ram, c51_hours};
        ordered_json j;
        j["honest_hashrate"] = c51_honest;
        j["duration_hours"] = c51_hours;
        j["attack_cost_usd"] = lat::attack_cost_51(m);
        print_kv(format, j);
    });

    // orphan
    CLI::App* orphan = app.add_subcommand("orphan", "orphan probability from propagation delay");
    double or_bytes = 0.0;
    double or_bandwidth = 1e6;
    double or_hops = 6.0;
    double or_bt = 0.0;
    orphan->add_option("--bytes", or_bytes, "block size in bytes")->required();
    orphan->add_option("--bandwidth", or_bandwidth, "link bandwidth, bytes/s");
    orphan->add_option("--hops", or_hops, "network diameter in hops");
    CLI::Option* or_bt_opt =
        orphan->add_option("--block-time", or_bt, "block time in seconds (default: spacing)");
    orphan->callback([&] {
        lat::ChainParams p = params();
        double bt = *or_bt_opt ? or_bt : double(p.spacing);
        lat::NetworkLink link{or_bytes, or_bandwidth, or_hops, bt};
        ordered_json j;
        j["block_bytes"] = or_bytes;
        j["block_time_s"] = bt;
        j["orphan_probability"] = lat::orphan_probability(link);
        print_kv(format, j);
    });

    // storage
    CLI::App* storage = app.add_subcommand("storage", "chain storage growth per year");
    double st_util = 1.0;
    uint64_t st_height = 100'000;
    storage->add_option("--utilization", st_util, "average block fullness, 0..1");
    storage->add_option("--height", st_height, "height whose weight limit and spacing apply");
    storage->callback([&] {
        lat::ChainParams p = params();
        uint64_t w = lat::max_block_weight(p, st_height);
        int64_t spacing = lat::target_spacing(p, st_height);
        double growth = lat::storage_growth(st_util, w, double(spacing));
        ordered_json j;
        j["utilization"] = st_util;
        j["max_block_weight"] = w;
        j["target_spacing_s"] = spacing;
        j["bytes_per_year"] = growth;
        j["terabytes_per_year"] = growth / 1e12;
        print_kv(format, j);
    });

    // budget
    CLI::App* budget = app.add_subcommand("budget", "annual security budget");
    uint64_t bu_height = 0;
    double bu_price = 1.0;
    double bu_fees = 0.0;
    CLI::Option* bu_height_opt =
        budget->add_option("--height", bu_height, "single height (omit for the era table)");
    budget->add_option("--price", bu_price, "token price, USD/LAT");
    budget->add_option("--fees", bu_fees, "annual fee revenue, USD");
    budget->callback([&] {
        lat::ChainParams p = params();
        if (*bu_height_opt) {
            ordered_json j;
            j["height"] = bu_height;
            j["price_usd"] = bu_price;
            j["budget_usd_per_year"] = lat::security_budget(p, bu_height, bu_price, bu_fees);
            print_kv(format, j);
            return;
        }
        std::vector<ordered_json> rows;
        for (const lat::ScheduleRow& r : lat::emission_schedule(p)) {
            ordered_json j;
            j["phase"] = r.phase;
            j["height"] = r.first_height;
            j["subsidy_lat"] = double(r.reward_shors) / double(lat::SHORS_PER_LAT);
            j["usd_at_1"] = lat::security_budget(p, r.first_height, 1.0, bu_fees);
            j["usd_at_10"] = lat::security_budget(p, r.first_height, 10.0, bu_fees);
            j["usd_at_100"] = lat::security_budget(p, r.first_height, 100.0, bu_fees);
            rows.push_back(std::move(j));
        }
        print_rows(format, {"phase", "height", "subsidy_lat", "usd_at_1", "usd_at_10",
                            "usd_at_100"},
                   rows);
    });

    // econ
    CLI::App* econ = app.add_subcommand("econ", "solo CPU miner economics");
    std::vector<double> ec_nodes;
    double ec_watts = 100.0;
    double ec_kwh = 0.12;
    uint64_t ec_height = 0;
    econ->add_option("--nodes", ec_nodes, "network sizes to tabulate");
    econ->add_option("--watts", ec_watts, "node power draw");
    econ->add_option("--kwh-price", ec_kwh, "electricity price, USD/kWh");
    CLI::Option* ec_height_opt =
        econ->add_option("--height", ec_height, "height for spacing and subsidy "
                                                "(default: first post-warm-up block)");
    econ->callback([&] {
        lat::ChainParams p = params();
        uint64_t h = *ec_height_opt ? ec_height : p.warmup_blocks;
        if (ec_nodes.empty()) ec_nodes = {10.0, 100.0, 1'000.0, 10'000.0, 100'000.0};
        lat::PowerModel pm{ec_watts, ec_kwh};
        std::vector<ordered_json> rows;
        for (double n : ec_nodes) {
            lat::SoloMinerRow r = lat::solo_miner_economics(p, h, n, pm);
            ordered_json j;
            j["nodes"] = r.nodes;
            j["days_to_block"] = r.days_to_block;
            j["kwh_per_block"] = r.kwh_per_block;
            j["energy_cost_usd"] = r.energy_cost_usd;
            j["break_even_usd"] = r.break_even_usd;
            rows.push_back(std::move(j));
        }
        print_rows(format, {"nodes", "days_to_block", "kwh_per_block", "energy_cost_usd",
                            "break_even_usd"},
                   rows);
    });

    // scenario run
    CLI::App* scenario = app.add_subcommand("scenario", "stochastic chain simulation");
    scenario->require_subcommand(1);
    CLI::App* sc_run = scenario->add_subcommand("run", "run a scenario file");
    std::string sc_file;
    uint64_t sc_seed = 0;
    std::string sc_out;
    int sc_threads = 1;
    sc_run->add_option("file", sc_file, "scenario key=value file")->required();
    CLI::Option* sc_seed_opt =
        sc_run->add_option("--seed", sc_seed, "override the scenario seed");
    sc_run->add_option("--out", sc_out, "write the trajectory CSV here");
    sc_run->add_option("--threads", sc_threads, "worker threads for multi-trial runs");
    sc_run->callback([&] {
        lat::ChainParams p = params();
        lat::ScenarioSpec spec = lat::load_scenario(sc_file, p);
        if (*sc_seed_opt) spec.seed = sc_seed;
        std::string csv;
        ordered_json j;
        j["trials"] = spec.trials;
        j["horizon"] = spec.horizon;
        j["seed"] = spec.seed;
        if (spec.trials <= 1) {
            lat::Trajectory t = lat::simulate_chain(spec);
            csv = lat::trajectory_csv(t);
            j["avg_block_time_s"] = t.avg_block_time_s;
            j["avg_abs_deviation"] = t.avg_abs_deviation;
            j["half_life_blocks"] = t.half_life_blocks;
            j["recovery_blocks"] = t.recovery_blocks;
        } else {
            lat::TrialAverage avg = lat::aggregate_trials(spec, sc_threads);
            csv = lat::trial_average_csv(avg);
            j["avg_block_time_s"] = avg.avg_block_time_s;
            j["mean_half_life_blocks"] = avg.mean_half_life_blocks;
            j["mean_recovery_blocks"] = avg.mean_recovery_blocks;
            j["recovered_trials"] = avg.recovered_trials;
        }
        if (sc_out.empty()) {
            std::cout << csv;
        } else {
            write_file(sc_out, csv);
            print_kv(format, j);
        }
    });

    // tables reproduce / tables deltas
    CLI::App* tables = app.add_subcommand("tables", "published-table reproduction");
    tables->require_subcommand(1);

    CLI::App* reproduce = tables->add_subcommand(
        "reproduce", "recompute published tables; exit 1 when a gated row misses");
    std::string tb_section;
    reproduce->add_option("--section", tb_section, "one table id (default: all)");
    reproduce->callback([&] {
        lat::ChainParams p = params();
        std::vector<lat::TableReport> reports;
        if (tb_section.empty())
            reports = lat::build_all_tables(p);
        else
            reports.push_back(lat::build_table(p, tb_section));
        if (format == "csv")
            std::cout << lat::render_csv(reports);
        else if (format == "json")
            std::cout << lat::render_json(reports) << "\n";
        else
            std::cout << lat::render_human(reports);
        if (!lat::reports_ok(reports)) exit_code = 1;
    });

    CLI::App* deltas = tables->add_subcommand(
        "deltas", "full delta report including the measured step response");
    uint64_t dl_seeds = 2'000;
    uint64_t dl_seed = 1;
    int dl_threads = 1;
    deltas->add_option("--seeds", dl_seeds, "simulation trials for the measured table");
    deltas->add_option("--seed", dl_seed, "base seed");
    deltas->add_option("--threads", dl_threads, "worker threads");
    deltas->callback([&] {
        lat::ChainParams p = params();
        std::vector<lat::TableReport> reports = lat::build_all_tables(p);
        reports.push_back(lat::measured_step_response(p, dl_seeds, dl_seed, dl_threads));
        if (format == "csv")
            std::cout << lat::render_csv(reports);
        else if (format == "json")
            std::cout << lat::render_json(reports) << "\n";
        else
            std::cout << lat::render_human(reports);
        if (!lat::reports_ok(reports)) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
