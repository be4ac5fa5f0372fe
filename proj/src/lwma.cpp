#include "lat/lwma.hpp"

#include <stdexcept>

namespace lat {

namespace {

int64_t weighted_sum_norm(uint64_t n, int64_t t) {
    int64_t k = static_cast<int64_t>(n) * static_cast<int64_t>(n + 1) * t / 2;
    // The combine step casts k and the clamped weighted sum (at most 6k)
    // to 32 bits, mirroring the consensus code.
    if (k < 10 || 6 * k > static_cast<int64_t>(UINT32_MAX))
        throw std::invalid_argument("lwma: window/spacing out of 32-bit range");
    return k;
}

// (sum of target/N over the window) * weightedSolveTimeSum / k, branch
// ordered to stay within 256 bits. A divide-first product that still
// overflows is already past powLimit, so it saturates there.
U256 combine(const U256& sum_qt, int64_t wsum, int64_t k, const U256& pow_limit) {
    U256 next;
    if (!shr(sum_qt, 192).is_zero()) {
        U256 q = div_u32(sum_qt, static_cast<uint32_t>(k)).quot;
        MulU32Result m = mul_u32(q, static_cast<uint32_t>(wsum));
        next = m.carry ? pow_limit : m.value;
    } else {
        next = div_u32(mul_u32_checked(sum_qt, static_cast<uint32_t>(wsum)),
                       static_cast<uint32_t>(k))
                   .quot;
    }
    return next > pow_limit ? pow_limit : next;
}

}  // namespace

int64_t clamp_solvetime(int64_t dt, int64_t T) {
    if (dt > 6 * T) return 6 * T;
    if (dt < -6 * T) return -6 * T;
    return dt;
}

U256 lwma_next_target(const ChainParams& params, const LwmaWindow& window, uint64_t next_height) {
    const uint64_t N = params.lwma_window;
    const U256 pow_limit = params.pow_limit();
    if (params.warmup_blocks > 0 && next_height == params.warmup_blocks) return pow_limit;
    if (next_height <= N) return pow_limit;
    if (window.records.size() < N + 1)
        throw std::invalid_argument("lwma: window must hold N+1 consecutive blocks");

    // Use the newest N+1 records; they must end at next_height - 1.
    const size_t base = window.records.size() - (N + 1);
    if (window.records.back().height != next_height - 1)
        throw std::invalid_argument("lwma: window does not end at next_height - 1");
    for (size_t i = base + 1; i < window.records.size(); ++i) {
        if (window.records[i].height != window.records[i - 1].height + 1)
            throw std::invalid_argument("lwma: window heights not consecutive");
    }

    const int64_t T = target_spacing(params, next_height);
    const int64_t k = weighted_sum_norm(N, T);

    U256 sum_qt;
    int64_t wsum = 0;
    for (uint64_t j = 1; j <= N; ++j) {
        const BlockRecord& cur = window.records[base + j];
        const BlockRecord& prev = window.records[base + j - 1];
        int64_t solvetime = clamp_solvetime(cur.timestamp - prev.timestamp, T);
        wsum += solvetime * static_cast<int64_t>(j);
        sum_qt = add_checked(sum_qt, div_u32(cur.target, static_cast<uint32_t>(N)).quot);
    }
    if (wsum < k / 10) wsum = k / 10;
    return combine(sum_qt, wsum, k, pow_limit);
}

LwmaState::LwmaState(const ChainParams& params, const LwmaWindow& window, uint64_t next_height) {
    const uint64_t N = params.lwma_window;
    if (window.records.size() < N + 1)
        throw std::invalid_argument("lwma: window must hold N+1 consecutive blocks");
    if (next_height <= N || (params.warmup_blocks > 0 && next_height == params.warmup_blocks))
        throw std::invalid_argument("lwma state: starting height must be past the boundary cases");

    pow_limit_ = params.pow_limit();
    n_ = N;
    t_ = target_spacing(params, next_height);
    k_ = weighted_sum_norm(N, t_);
    dt_ring_.resize(N);
    qt_ring_.resize(N);

    const size_t base = window.records.size() - (N + 1);
    for (uint64_t j = 1; j <= N; ++j) {
        const BlockRecord& cur = window.records[base + j];
        const BlockRecord& prev = window.records[base + j - 1];
        int64_t st = clamp_solvetime(cur.timestamp - prev.timestamp, t_);
        dt_ring_[j - 1] = st;
        qt_ring_[j - 1] = div_u32(cur.target, static_cast<uint32_t>(N)).quot;
        sum_dt_ += st;
        sum_wdt_ += st * static_cast<int64_t>(j);
        sum_qt_ = add_checked(sum_qt_, qt_ring_[j - 1]);
    }
}

U256 LwmaState::next_target() const {
    int64_t wsum = sum_wdt_ < k_ / 10 ? k_ / 10 : sum_wdt_;
    return combine(sum_qt_, wsum, k_, pow_limit_);
}

void LwmaState::push(int64_t raw_dt, const U256& target) {
    int64_t st = clamp_solvetime(raw_dt, t_);
    int64_t old_dt = dt_ring_[head_];
    U256 old_qt = qt_ring_[head_];
    U256 new_qt = div_u32(target, static_cast<uint32_t>(n_)).quot;

    // Sliding the window demotes every weight by one: the departing oldest
    // solve time had weight 1, the entering one gets weight N.
    sum_wdt_ = sum_wdt_ - sum_dt_ + static_cast<int64_t>(n_) * st;
    sum_dt_ = sum_dt_ - old_dt + st;
    sum_qt_ = add_checked(sub_checked(sum_qt_, old_qt), new_qt);

    dt_ring_[head_] = st;
    qt_ring_[head_] = new_qt;
    head_ = (head_ + 1) % n_;
}

}  // namespace lat
