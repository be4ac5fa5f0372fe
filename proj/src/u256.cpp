#include "lat/u256.hpp"

#include <cmath>
#include <stdexcept>

namespace lat {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

U256 U256::from_u64(uint64_t v) {
    U256 r;
    r.w[0] = v;
    return r;
}

U256 U256::max() {
    U256 r;
    r.w.fill(~uint64_t{0});
    return r;
}

U256 U256::from_hex(const std::string& hex) {
    size_t start = 0;
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) start = 2;
    if (start == hex.size()) throw std::invalid_argument("empty hex string");
    if (hex.size() - start > 64) throw std::invalid_argument("hex string wider than 256 bits");
    U256 r;
    for (size_t i = start; i < hex.size(); ++i) {
        int d = hex_digit(hex[i]);
        if (d < 0) throw std::invalid_argument("invalid hex digit");
        // r = r*16 + d; cannot overflow because at most 64 digits are accepted
        for (int limb = 3; limb > 0; --limb)
            r.w[limb] = (r.w[limb] << 4) | (r.w[limb - 1] >> 60);
        r.w[0] = (r.w[0] << 4) | static_cast<uint64_t>(d);
    }
    return r;
}

std::string U256::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s(64, '0');
    for (int i = 0; i < 64; ++i) {
        unsigned limb = (63 - i) / 16;
        unsigned shift = ((63 - i) % 16) * 4;
        s[i] = digits[(w[limb] >> shift) & 0xf];
    }
    return s;
}

unsigned U256::bit_length() const {
    for (int limb = 3; limb >= 0; --limb) {
        if (w[limb]) return 64 * limb + (64 - __builtin_clzll(w[limb]));
    }
    return 0;
}

double U256::to_double() const {
    return std::ldexp(static_cast<double>(w[3]), 192) + std::ldexp(static_cast<double>(w[2]), 128) +
           std::ldexp(static_cast<double>(w[1]), 64) + static_cast<double>(w[0]);
}

int cmp(const U256& a, const U256& b) {
    for (int i = 3; i >= 0; --i) {
        if (a.w[i] < b.w[i]) return -1;
        if (a.w[i] > b.w[i]) return 1;
    }
    return 0;
}

U256 add_checked(const U256& a, const U256& b) {
    U256 r;
    unsigned __int128 carry = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 s = static_cast<unsigned __int128>(a.w[i]) + b.w[i] + carry;
        r.w[i] = static_cast<uint64_t>(s);
        carry = s >> 64;
    }
    if (carry) throw std::overflow_error("U256 addition overflow");
    return r;
}

U256 sub_checked(const U256& a, const U256& b) {
    U256 r;
    uint64_t borrow = 0;
    for (int i = 0; i < 4; ++i) {
        uint64_t bi = b.w[i];
        uint64_t d = a.w[i] - bi;
        uint64_t borrow2 = (a.w[i] < bi) ? 1 : 0;
        uint64_t d2 = d - borrow;
        if (d < borrow) borrow2 = 1;
        r.w[i] = d2;
        borrow = borrow2;
    }
    if (borrow) throw std::overflow_error("U256 subtraction underflow");
    return r;
}

MulU32Result mul_u32(const U256& a, uint32_t m) {
    MulU32Result r{};
    unsigned __int128 carry = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 p = static_cast<unsigned __int128>(a.w[i]) * m + carry;
        r.value.w[i] = static_cast<uint64_t>(p);
        carry = p >> 64;
    }
    r.carry = static_cast<uint32_t>(carry);
    return r;
}

U256 mul_u32_checked(const U256& a, uint32_t m) {
    MulU32Result r = mul_u32(a, m);
    if (r.carry) throw std::overflow_error("U256 multiply overflow");
    return r.value;
}

DivU32Result div_u32(const U256& a, uint32_t d) {
    if (d == 0) throw std::domain_error("U256 division by zero");
    DivU32Result r{};
    unsigned __int128 rem = 0;
    for (int i = 3; i >= 0; --i) {
        unsigned __int128 cur = (rem << 64) | a.w[i];
        r.quot.w[i] = static_cast<uint64_t>(cur / d);
        rem = cur % d;
    }
    r.rem = static_cast<uint32_t>(rem);
    return r;
}

U256 shl_checked(const U256& a, unsigned n) {
    if (n >= 256) {
        if (!a.is_zero()) throw std::overflow_error("U256 shift overflow");
        return U256::zero();
    }
    if (n != 0 && a.bit_length() + n > 256) throw std::overflow_error("U256 shift overflow");
    U256 r;
    unsigned limbs = n / 64, bits = n % 64;
    for (int i = 3; i >= 0; --i) {
        uint64_t v = 0;
        int src = i - static_cast<int>(limbs);
        if (src >= 0) {
            v = a.w[src] << bits;
            if (bits && src > 0) v |= a.w[src - 1] >> (64 - bits);
        }
        r.w[i] = v;
    }
    return r;
}

U256 shr(const U256& a, unsigned n) {
    if (n >= 256) return U256::zero();
    U256 r;
    unsigned limbs = n / 64, bits = n % 64;
    for (int i = 0; i < 4; ++i) {
        uint64_t v = 0;
        unsigned src = i + limbs;
        if (src < 4) {
            v = a.w[src] >> bits;
            if (bits && src + 1 < 4) v |= a.w[src + 1] << (64 - bits);
        }
        r.w[i] = v;
    }
    return r;
}

U256 div_u256(const U256& num, const U256& den) {
    if (den.is_zero()) throw std::domain_error("U256 division by zero");
    if (cmp(num, den) < 0) return U256::zero();
    unsigned nbits = num.bit_length();
    U256 quot;
    U256 rem;
    for (int i = static_cast<int>(nbits) - 1; i >= 0; --i) {
        // rem = rem*2 + bit(i); rem < den beforehand, so the doubled value fits
        // in 257 bits and `carry` holds the bit shifted past limb 3.
        bool carry = rem.bit(255);
        for (int limb = 3; limb > 0; --limb)
            rem.w[limb] = (rem.w[limb] << 1) | (rem.w[limb - 1] >> 63);
        rem.w[0] <<= 1;
        if (num.bit(static_cast<unsigned>(i))) rem.w[0] |= 1;
        if (carry || cmp(rem, den) >= 0) {
            // wrapping subtraction: with carry set this is (2^256 + rem) - den
            uint64_t borrow = 0;
            for (int limb = 0; limb < 4; ++limb) {
                uint64_t d = den.w[limb];
                uint64_t v = rem.w[limb] - d;
                uint64_t b2 = (rem.w[limb] < d) ? 1 : 0;
                uint64_t v2 = v - borrow;
                if (v < borrow) b2 = 1;
                rem.w[limb] = v2;
                borrow = b2;
            }
            quot.w[i / 64] |= uint64_t{1} << (i % 64);
        }
    }
    return quot;
}

bool is_power_of_two(const U256& a) {
    if (a.is_zero()) return false;
    int set = 0;
    for (uint64_t limb : a.w) set += __builtin_popcountll(limb);
    return set == 1;
}

}  // namespace lat
