#include "lat/chainwork.hpp"

#include <stdexcept>

namespace lat {

namespace {

void normalize(BigUint& a) {
    while (!a.w.empty() && a.w.back() == 0) a.w.pop_back();
}

}  // namespace

BigUint BigUint::from_u64(uint64_t v) {
    BigUint r;
    if (v) r.w.push_back(v);
    return r;
}

BigUint BigUint::from_u256(const U256& v) {
    BigUint r;
    r.w.assign(v.w.begin(), v.w.end());
    normalize(r);
    return r;
}

std::string BigUint::to_hex() const {
    if (w.empty()) return "0";
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (size_t i = w.size(); i-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            char c = digits[(w[i] >> (nib * 4)) & 0xf];
            if (s.empty() && c == '0') continue;
            s.push_back(c);
        }
    }
    return s;
}

BigUint add(const BigUint& a, const BigUint& b) {
    BigUint r;
    size_t n = std::max(a.w.size(), b.w.size());
    r.w.resize(n, 0);
    unsigned __int128 carry = 0;
    for (size_t i = 0; i < n; ++i) {
        unsigned __int128 s = carry;
        if (i < a.w.size()) s += a.w[i];
        if (i < b.w.size()) s += b.w[i];
        r.w[i] = static_cast<uint64_t>(s);
        carry = s >> 64;
    }
    if (carry) r.w.push_back(static_cast<uint64_t>(carry));
    return r;
}

int cmp(const BigUint& a, const BigUint& b) {
    if (a.w.size() != b.w.size()) return a.w.size() < b.w.size() ? -1 : 1;
    for (size_t i = a.w.size(); i-- > 0;) {
        if (a.w[i] < b.w[i]) return -1;
        if (a.w[i] > b.w[i]) return 1;
    }
    return 0;
}

BigUint block_work(const U256& target) {
    if (target.is_zero()) throw std::domain_error("chain work: zero target");
    // floor(2^256 / t) == floor((2^256 - 1) / t) unless t divides 2^256,
    // i.e. unless t is a power of two.
    BigUint work = BigUint::from_u256(div_u256(U256::max(), target));
    if (is_power_of_two(target)) work = add(work, BigUint::from_u64(1));
    return work;
}

BigUint chain_work(const std::vector<U256>& targets) {
    BigUint total;
    for (const U256& t : targets) total = add(total, block_work(t));
    return total;
}

}  // namespace lat
