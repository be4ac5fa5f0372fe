#include "lat/chainparams.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lat {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        if (!v.empty() && v[0] == '-') throw std::invalid_argument("negative");
        uint64_t r = std::stoull(v, &pos, 0);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return r;
    } catch (const std::exception&) {
        throw std::runtime_error("config: bad value for " + key + ": '" + v + "'");
    }
}

std::vector<WeightStage> parse_weight_stages(const std::string& v) {
    // Format: "height:weight,height:weight,..."
    std::vector<WeightStage> stages;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("config: weight_stages entries must be height:weight");
        stages.push_back({parse_u64("weight_stages", trim(item.substr(0, colon))),
                          parse_u64("weight_stages", trim(item.substr(colon + 1)))});
    }
    return stages;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_kv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        pairs.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return pairs;
}

void ChainParams::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("chain params: " + msg); };
    if (warmup_spacing <= 0 || spacing <= 0) fail("spacing must be positive");
    if (warmup_subsidy == 0 || initial_subsidy == 0) fail("subsidy must be positive");
    if (halving_interval == 0) fail("halving_interval must be positive");
    if (tail_emission == 0) fail("tail_emission must be positive");
    if (lwma_window == 0) fail("lwma_window must be positive");
    if (max_money == 0) fail("max_money must be positive");
    if (coinbase_maturity == 0) fail("coinbase_maturity must be positive");
    if (tail_emission >= initial_subsidy) fail("tail_emission must be below initial_subsidy");
    if (warmup_subsidy > initial_subsidy) fail("warmup_subsidy must not exceed initial_subsidy");
    if (weight_stages.empty()) fail("weight_stages must be non-empty");
    for (size_t i = 0; i < weight_stages.size(); ++i) {
        if (weight_stages[i].max_weight == 0) fail("stage weight must be positive");
        if (i > 0) {
            if (weight_stages[i].activation_height <= weight_stages[i - 1].activation_height)
                fail("stage heights must be strictly increasing");
            if (weight_stages[i].max_weight < weight_stages[i - 1].max_weight)
                fail("stage weights must be non-decreasing");
        }
    }
    expand_compact(pow_limit_bits);  // must decode
}

int64_t target_spacing(const ChainParams& params, uint64_t height) {
    return height < params.warmup_blocks ? params.warmup_spacing : params.spacing;
}

uint64_t max_block_weight(const ChainParams& params, uint64_t height) {
    uint64_t weight = params.weight_stages.front().max_weight;
    for (const WeightStage& stage : params.weight_stages) {
        if (stage.activation_height <= height) weight = stage.max_weight;
    }
    return weight;
}

ChainParams load_chain_params(const std::string& path) {
    ChainParams p;
    for (const auto& [key, value] : read_kv_file(path)) {
        if (key == "warmup_blocks") p.warmup_blocks = parse_u64(key, value);
        else if (key == "warmup_spacing") p.warmup_spacing = static_cast<int64_t>(parse_u64(key, value));
        else if (key == "spacing") p.spacing = static_cast<int64_t>(parse_u64(key, value));
        else if (key == "warmup_subsidy") p.warmup_subsidy = parse_u64(key, value);
        else if (key == "initial_subsidy") p.initial_subsidy = parse_u64(key, value);
        else if (key == "halving_interval") p.halving_interval = parse_u64(key, value);
        else if (key == "tail_emission") p.tail_emission = parse_u64(key, value);
        else if (key == "pow_limit") p.pow_limit_bits = static_cast<CompactBits>(parse_u64(key, value));
        else if (key == "lwma_window") p.lwma_window = parse_u64(key, value);
        else if (key == "weight_stages") p.weight_stages = parse_weight_stages(value);
        else if (key == "max_money") p.max_money = parse_u64(key, value);
        else if (key == "coinbase_maturity") p.coinbase_maturity = parse_u64(key, value);
        else throw std::runtime_error("config: unknown key '" + key + "'");
    }
    p.validate();
    return p;
}

}  // namespace lat
