#!/usr/bin/env python3
"""Reference generator for the vectors frozen in test_rng.cpp.

Implements SplitMix64 and xoshiro256++ from their published definitions,
plus this project's seeding and substream rules, entirely in Python so the
C++ engine can be checked against an independent implementation.
"""

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & MASK


class SplitMix64:
    def __init__(self, seed):
        self.x = seed & MASK

    def next(self):
        self.x = (self.x + GOLDEN) & MASK
        z = self.x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)


class Xoshiro256pp:
    def __init__(self, seed):
        sm = SplitMix64(seed)
        self.s = [sm.next() for _ in range(4)]
        if all(w == 0 for w in self.s):
            self.s[0] = GOLDEN

    @staticmethod
    def stream(seed, trial):
        sm = SplitMix64(seed)
        a = sm.next()
        b = sm.next()
        return Xoshiro256pp(a ^ ((b + trial * GOLDEN) & MASK))

    def next(self):
        s = self.s
        result = (rotl((s[0] + s[3]) & MASK, 23) + s[0]) & MASK
        t = (s[1] << 17) & MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = rotl(s[3], 45)
        return result

    def uniform01(self):
        return ((self.next() >> 11) + 1) * 2.0 ** -53

    def exponential(self, mean):
        import math

        return -mean * math.log(self.uniform01())


def main():
    for seed in (0, 42):
        g = Xoshiro256pp(seed)
        print(f"raw seed={seed}: " + ", ".join(f"0x{g.next():016x}" for _ in range(5)))
    for trial in (0, 1, 7):
        g = Xoshiro256pp.stream(42, trial)
        print(f"stream(42,{trial}): " + ", ".join(f"0x{g.next():016x}" for _ in range(3)))
    g = Xoshiro256pp(123)
    print("uniform seed=123: " + ", ".join(f"{g.uniform01():.17g}" for _ in range(4)))
    g = Xoshiro256pp(123)
    print("expo(240) seed=123: " + ", ".join(f"{g.exponential(240.0):.17g}" for _ in range(4)))


if __name__ == "__main__":
    main()
