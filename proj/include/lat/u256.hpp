#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace lat {

// 256-bit unsigned integer with little-endian 64-bit limbs.
// Arithmetic is exact and wrap-free within 256 bits; any operation that
// would need more than 256 bits throws std::overflow_error.
struct U256 {
    std::array<uint64_t, 4> w{};

    static U256 zero() { return U256{}; }
    static U256 from_u64(uint64_t v);
    static U256 max();
    static U256 from_hex(const std::string& hex);
    std::string to_hex() const;

    bool is_zero() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
    bool bit(unsigned i) const { return (w[i / 64] >> (i % 64)) & 1; }
    // Index of the highest set bit plus one; 0 for zero.
    unsigned bit_length() const;
    double to_double() const;

    friend bool operator==(const U256&, const U256&) = default;
};

int cmp(const U256& a, const U256& b);
inline bool operator<(const U256& a, const U256& b) { return cmp(a, b) < 0; }
inline bool operator<=(const U256& a, const U256& b) { return cmp(a, b) <= 0; }
inline bool operator>(const U256& a, const U256& b) { return cmp(a, b) > 0; }
inline bool operator>=(const U256& a, const U256& b) { return cmp(a, b) >= 0; }

U256 add_checked(const U256& a, const U256& b);
U256 sub_checked(const U256& a, const U256& b);

struct MulU32Result {
    U256 value;
    uint32_t carry;  // nonzero means the true product needs more than 256 bits
};
MulU32Result mul_u32(const U256& a, uint32_t m);
U256 mul_u32_checked(const U256& a, uint32_t m);

struct DivU32Result {
    U256 quot;
    uint32_t rem;
};
DivU32Result div_u32(const U256& a, uint32_t d);

U256 shl_checked(const U256& a, unsigned n);
U256 shr(const U256& a, unsigned n);

// Floor division; throws std::domain_error when den is zero.
U256 div_u256(const U256& num, const U256& den);

bool is_power_of_two(const U256& a);

}  // namespace lat
