#pragma once

#include <cstdint>
#include <vector>

#include "lat/chainparams.hpp"
#include "lat/u256.hpp"

namespace lat {

// N+1 consecutive block records, oldest first. Timestamps may be
// non-monotonic; the solve-time clamp absorbs disorder.
struct LwmaWindow {
    std::vector<BlockRecord> records;
};

int64_t clamp_solvetime(int64_t dt, int64_t T);

// Linearly weighted moving average retarget, evaluated for the block at
// next_height. Weight 1 goes to the oldest solve time in the window and
// weight N to the newest. Returns powLimit for next_height <= N (the window
// is not yet full) and at the warm-up boundary reset.
// Throws std::invalid_argument when the window is too short or its heights
// do not line up with next_height.
U256 lwma_next_target(const ChainParams& params, const LwmaWindow& window, uint64_t next_height);

// Incremental evaluator producing bit-identical results to lwma_next_target
// while sliding one block at a time. Valid only within a fixed spacing
// regime (the clamp band and weighted-sum normalizer depend on it) and away
// from the warm-up boundary; the constructor enforces the starting regime.
class LwmaState {
  public:
    LwmaState(const ChainParams& params, const LwmaWindow& window, uint64_t next_height);

    U256 next_target() const;
    // Slides the window: the block just mined took raw_dt seconds (clamped
    // internally) and was mined against `target`.
    void push(int64_t raw_dt, const U256& target);

  private:
    U256 pow_limit_;
    uint64_t n_;
    int64_t t_;
    int64_t k_;
    std::vector<int64_t> dt_ring_;
    std::vector<U256> qt_ring_;
    size_t head_ = 0;
    int64_t sum_dt_ = 0;
    int64_t sum_wdt_ = 0;
    U256 sum_qt_;
};

}  // namespace lat
