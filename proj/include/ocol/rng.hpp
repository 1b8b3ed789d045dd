// Counter-based splittable pseudo-random generator. Every randomized search in
// the toolkit is keyed by an explicit seed so results replay bit-exactly.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ocol {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stateless core: value = f(key, counter). Streams derived with split() are
// independent of how many numbers any other stream consumed.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(splitmix64(seed ^ 0x5851f42d4c957f2dULL)) {}

    std::uint64_t at(std::uint64_t counter) const {
        return splitmix64(key_ ^ (counter * 0xda942042e4dd58b5ULL));
    }

    CounterRng split(std::uint64_t stream) const {
        CounterRng r(0);
        r.key_ = splitmix64(key_ ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL));
        return r;
    }

private:
    std::uint64_t key_;
};

// Sequential view over a CounterRng stream.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : rng_(seed) {}
    explicit RngStream(CounterRng rng) : rng_(rng) {}

    std::uint64_t next() { return rng_.at(counter_++); }

    // Uniform in [0, n) by rejection; n must be positive.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        while (true) {
            std::uint64_t v = next();
            if (v >= threshold) return v % n;
        }
    }

    int range(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

    RngStream split(std::uint64_t stream) const { return RngStream(rng_.split(stream)); }

private:
    CounterRng rng_;
    std::uint64_t counter_ = 0;
};

} // namespace ocol
