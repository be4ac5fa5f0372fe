#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lat/u256.hpp"

namespace lat {

// Arbitrary-precision unsigned integer (little-endian 64-bit limbs, no
// leading zero limbs; empty means zero). Only what cumulative work needs.
struct BigUint {
    std::vector<uint64_t> w;

    static BigUint from_u64(uint64_t v);
    static BigUint from_u256(const U256& v);
    bool is_zero() const { return w.empty(); }
    std::string to_hex() const;

    friend bool operator==(const BigUint&, const BigUint&) = default;
};

BigUint add(const BigUint& a, const BigUint& b);
int cmp(const BigUint& a, const BigUint& b);

// Work contributed by one block: floor(2^256 / target).
// Throws std::domain_error on a zero target.
BigUint block_work(const U256& target);

// Sum of block_work over the sequence; exact at any chain length.
BigUint chain_work(const std::vector<U256>& targets);

}  // namespace lat
