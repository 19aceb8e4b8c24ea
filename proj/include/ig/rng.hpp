#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace ig {

// splitmix64: tiny, portable, identical output on every platform.  All
// randomness in the artifact flows through this so runs are reproducible
// from a single 64-bit seed.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(uint64_t seed = 0) : state_(seed) {}

    uint64_t u64() { return splitmix64(state_); }

    // uniform in [0, bound), bound > 0
    uint64_t below(uint64_t bound) {
        // rejection sampling to avoid modulo bias
        uint64_t limit = bound * ((~uint64_t{0}) / bound);
        for (;;) {
            uint64_t v = u64();
            if (v < limit) return v % bound;
        }
    }

    bool bit() { return (u64() & 1) != 0; }

    double unit() { return double(u64() >> 11) * (1.0 / 9007199254740992.0); }

    // uniform in [0, bound), bound > 0
    mpz_class mpz_below(const mpz_class& bound) {
        size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
        size_t words = (bits + 63) / 64;
        for (;;) {
            mpz_class v = 0;
            for (size_t i = 0; i < words; ++i) {
                v <<= 64;
                v += mpz_class(u64());
            }
            v >>= (words * 64 - bits);
            if (v < bound) return v;
        }
    }

    // derive an independent stream; used by parallel kernels so that
    // iteration i draws the same values no matter the thread schedule
    static Rng derive(uint64_t seed, uint64_t index) {
        uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (index + 0x51ed2701));
        Rng r(s);
        r.u64();
        return r;
    }

    // Fisher-Yates over [0, n)
    std::vector<uint32_t> permutation(uint32_t n) {
        std::vector<uint32_t> p(n);
        for (uint32_t i = 0; i < n; ++i) p[i] = i;
        for (uint32_t i = n; i > 1; --i) {
            uint32_t j = uint32_t(below(i));
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

private:
    uint64_t state_;
};

} // namespace ig
