#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lat/chainwork.hpp"
#include "oracle_bigint.hpp"

using namespace lat;

namespace {

// First-principles expected work: floor(2^256 / target), computed in full
// width so the power-of-two exactness needs no special case.
OBig oracle_work(const OBig& target) { return odivmod(OBig::pow2(256), target).quot; }

OBig rand_target(std::mt19937_64& g) {
    unsigned bits = 1 + static_cast<unsigned>(g() % 256);
    OBig r;
    r.d.assign((bits + 31) / 32, 0);
    for (uint32_t& limb : r.d) limb = static_cast<uint32_t>(g());
    unsigned top = (bits - 1) % 32;
    r.d.back() &= (top == 31) ? ~uint32_t{0} : ((uint32_t{1} << (top + 1)) - 1);
    r.d.back() |= uint32_t{1} << top;
    return r;
}

}  // namespace

TEST_CASE("block work matches the full-width oracle") {
    std::mt19937_64 g(21);
    for (int i = 0; i < 20; ++i) {
        OBig t = rand_target(g);
        BigUint w = block_work(U256::from_hex(t.to_hex()));
        CHECK(w.to_hex() == oracle_work(t).to_hex());
    }
}

TEST_CASE("block work at the exact and near-power-of-two boundaries") {
    // 2^255 divides 2^256 exactly: the quotient must be 2, not 1.
    U256 half = shl_checked(U256::from_u64(1), 255);
    CHECK(block_work(half).to_hex() == "2");
    CHECK(block_work(sub_checked(half, U256::from_u64(1))).to_hex() == "2");
    CHECK(block_work(add_checked(half, U256::from_u64(1))).to_hex() == "1");
    CHECK(block_work(U256::max()).to_hex() == "1");
    CHECK(block_work(U256::from_u64(1)).to_hex() == OBig::pow2(256).to_hex());
    for (unsigned n = 0; n < 256; ++n) {
        U256 t = shl_checked(U256::from_u64(1), n);
        CHECK(block_work(t).to_hex() == OBig::pow2(256 - n).to_hex());
    }
    CHECK_THROWS_AS(block_work(U256::zero()), std::domain_error);
}

TEST_CASE("chain work is the exact sum of block works") {
    std::mt19937_64 g(22);
    std::vector<U256> targets;
    OBig expected;
    for (int i = 0; i < 50; ++i) {
        OBig t = rand_target(g);
        targets.push_back(U256::from_hex(t.to_hex()));
        expected = oadd(expected, oracle_work(t));
    }
    CHECK(chain_work(targets).to_hex() == expected.to_hex());
    CHECK(chain_work({}).is_zero());
    CHECK(chain_work({}).to_hex() == "0");

    // Accumulation must keep exceeding 256 bits without losing precision.
    std::vector<U256> ones(3, U256::from_u64(1));
    CHECK(chain_work(ones).to_hex() == omul_u32(OBig::pow2(256), 3).to_hex());
}

TEST_CASE("big integer helpers behave") {
    CHECK(BigUint::from_u64(0).is_zero());
    CHECK(BigUint::from_u64(0x1234).to_hex() == "1234");
    CHECK(BigUint::from_u256(U256::max()).to_hex() == std::string(64, 'f'));
    BigUint a = BigUint::from_u64(~uint64_t{0});
    CHECK(add(a, BigUint::from_u64(1)).to_hex() == "10000000000000000");
    CHECK(cmp(BigUint::from_u64(5), BigUint::from_u64(7)) < 0);
    CHECK(cmp(BigUint::from_u64(7), BigUint::from_u64(7)) == 0);
    CHECK(cmp(add(a, a), a) > 0);
}
