// Fixed-width-word dynamic bitsets sized for vertex sets (<= a few machine words).
#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace ocol {

inline int bit_words(int nbits) { return (nbits + 63) / 64; }

// Word-level helpers used on flat row buffers throughout the library.
namespace bits {

inline void set(std::uint64_t* w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void reset(std::uint64_t* w, int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
inline bool test(const std::uint64_t* w, int i) { return (w[i >> 6] >> (i & 63)) & 1; }

inline void clear(std::uint64_t* w, int words) {
    for (int k = 0; k < words; ++k) w[k] = 0;
}

inline void assign(std::uint64_t* dst, const std::uint64_t* src, int words) {
    for (int k = 0; k < words; ++k) dst[k] = src[k];
}

inline void and_assign(std::uint64_t* dst, const std::uint64_t* src, int words) {
    for (int k = 0; k < words; ++k) dst[k] &= src[k];
}

inline void or_assign(std::uint64_t* dst, const std::uint64_t* src, int words) {
    for (int k = 0; k < words; ++k) dst[k] |= src[k];
}

inline bool intersects(const std::uint64_t* a, const std::uint64_t* b, int words) {
    for (int k = 0; k < words; ++k)
        if (a[k] & b[k]) return true;
    return false;
}

inline bool none(const std::uint64_t* w, int words) {
    for (int k = 0; k < words; ++k)
        if (w[k]) return false;
    return true;
}

inline int count(const std::uint64_t* w, int words) {
    int c = 0;
    for (int k = 0; k < words; ++k) c += std::popcount(w[k]);
    return c;
}

// First set bit at or above `from`, or -1.
inline int next(const std::uint64_t* w, int words, int from) {
    if (from >= words * 64) return -1;
    int k = from >> 6;
    std::uint64_t cur = w[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (cur) return k * 64 + std::countr_zero(cur);
        if (++k >= words) return -1;
        cur = w[k];
    }
}

template <typename F>
inline void for_each(const std::uint64_t* w, int words, F&& f) {
    for (int k = 0; k < words; ++k) {
        std::uint64_t cur = w[k];
        while (cur) {
            f(k * 64 + std::countr_zero(cur));
            cur &= cur - 1;
        }
    }
}

} // namespace bits

} // namespace ocol
