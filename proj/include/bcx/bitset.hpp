// Fixed-width bitmask subsets over internal element indices.
#ifndef BCX_BITSET_HPP
#define BCX_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace bcx {

using Mask = std::uint64_t;

// Hard width limit of the mask representation; the desk-scale cap used by
// matroid construction is lower (see Matroid::kDefaultMaxElements).
inline constexpr std::size_t kMaskBits = 62;

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

inline constexpr Mask full_mask(std::size_t n) {
    return n == 0 ? Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
    while (m != 0) {
        int i = std::countr_zero(m);
        fn(static_cast<std::size_t>(i));
        m &= m - 1;
    }
}

inline std::vector<std::size_t> bits_of(Mask m) {
    std::vector<std::size_t> out;
    for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
    return out;
}

// Visits all size-k subsets of {0..n-1} in lexicographic order of bit indices.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask m = 0;
        for (std::size_t i : idx) m |= bit(i);
        fn(m);
        // advance
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (idx[pos] != pos + n - k) break;
            if (pos == 0) return;
        }
        if (k == 0) return;
        if (idx[pos] == pos + n - k) return;
        ++idx[pos];
        for (std::size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

// Removes every set that strictly contains another member; also dedupes.
std::vector<Mask> antichain_minimalize(std::vector<Mask> sets);

} // namespace bcx

#endif
