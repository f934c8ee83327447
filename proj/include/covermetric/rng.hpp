#ifndef COVERMETRIC_RNG_HPP
#define COVERMETRIC_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace covermetric {

// Deterministic, platform-independent RNG. std::uniform_int_distribution is
// implementation-defined, so all sampling goes through this splitmix64
// stream; identical seeds give identical sample streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). bound >= 1. Masked rejection keeps the result
    // unbiased without 128-bit arithmetic.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            std::uint64_t v = next_u64() & mask;
            if (v < bound) return v;
        }
    }

    // Uniform s-subset of {0, ..., n-1}, returned sorted ascending.
    std::vector<int> subset(int n, int s) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int i = 0; i < s; ++i) {
            int j = i + static_cast<int>(uniform_below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(s);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

  private:
    std::uint64_t state_;
};

// Splittable seeding: trial i of a run with base seed b uses derive_seed(b, i).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    Rng mix(base ^ (0xA0761D6478BD642Full * (index + 1)));
    std::uint64_t s = mix.next_u64();
    return s ^ index;
}

}  // namespace covermetric

#endif  // COVERMETRIC_RNG_HPP
