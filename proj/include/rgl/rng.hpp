#pragma once

#include <cstdint>
#include <vector>

namespace rgl {

// splitmix64. Self-contained so that seeded runs are bit-identical across
// platforms and standard library versions (std::uniform_int_distribution
// gives no such guarantee).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound)
    {
        std::uint64_t threshold = -bound % bound;
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold)
                return r % bound;
        }
    }

    // Bernoulli with probability num/2^64.
    bool chance_u64(std::uint64_t threshold) { return next() < threshold; }

    template <class T> void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::uint64_t state_;
};

} // namespace rgl
