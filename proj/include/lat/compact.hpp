#pragma once

#include <cstdint>

#include "lat/u256.hpp"

namespace lat {

// 4-byte exponent/mantissa target encoding: high byte is a base-256 exponent,
// low 3 bytes the mantissa. Bit 0x00800000 is a sign flag and is illegal for
// targets.
using CompactBits = uint32_t;

// Throws std::invalid_argument on a malformed encoding (sign flag set, or a
// value that does not fit in 256 bits).
U256 expand_compact(CompactBits bits);

// Lossy inverse: keeps the top 23-24 mantissa bits. compress(expand(x)) == x
// for canonical x; expand(compress(v)) <= v with relative error < 2^-23.
CompactBits compress_compact(const U256& target);

}  // namespace lat
