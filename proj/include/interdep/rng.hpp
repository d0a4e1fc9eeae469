#ifndef INTERDEP_RNG_HPP
#define INTERDEP_RNG_HPP

#include <cstdint>
#include <vector>

namespace interdep {

// splitmix64 (Steele/Lea/Flood). Self-contained so that draws are bit-identical
// across platforms and standard libraries; std::uniform_* distributions are
// implementation-defined and would break CSV byte-determinism.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // uniform integer in [0, n), Lemire's rejection method
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t x, r;
        do {
            x = next_u64();
            r = x % n;
        } while (x - r > std::uint64_t(0) - n);
        return r;
    }

    bool bernoulli(double p) { return next_double() < p; }

    // stream splitting: child stream i of a master seed
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        return r.next_u64();
    }

private:
    std::uint64_t state_;
};

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = std::size_t(rng.bounded(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace interdep

#endif
