#include "lat/compact.hpp"

#include <stdexcept>

namespace lat {

U256 expand_compact(CompactBits bits) {
    unsigned exponent = bits >> 24;
    uint32_t mantissa = bits & 0x007fffff;
    if (bits & 0x00800000) throw std::invalid_argument("compact bits: sign flag set");
    if (mantissa != 0 &&
        (exponent > 34 || (mantissa > 0xff && exponent > 33) || (mantissa > 0xffff && exponent > 32)))
        throw std::invalid_argument("compact bits: target exceeds 256 bits");
    if (mantissa == 0) return U256::zero();
    if (exponent <= 3) return U256::from_u64(mantissa >> (8 * (3 - exponent)));
    return shl_checked(U256::from_u64(mantissa), 8 * (exponent - 3));
}

CompactBits compress_compact(const U256& target) {
    if (target.is_zero()) return 0;
    unsigned size = (target.bit_length() + 7) / 8;
    uint32_t mantissa;
    if (size <= 3) {
        mantissa = static_cast<uint32_t>(target.w[0] << (8 * (3 - size)));
    } else {
        mantissa = static_cast<uint32_t>(shr(target, 8 * (size - 3)).w[0]);
    }
    // Keep the mantissa below the sign bit.
    if (mantissa & 0x00800000) {
        mantissa >>= 8;
        ++size;
    }
    return (static_cast<uint32_t>(size) << 24) | mantissa;
}

}  // namespace lat
