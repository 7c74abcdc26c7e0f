#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace reglat {

// Ground-set subsets fit in one machine word; the hard cap keeps every
// relation row and every interval mask a single uint64.
inline constexpr int kMaxGround = 64;

using Mask = std::uint64_t;  // subset of the ground set, bit i = element i (0-based)

inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1u; }
inline int popcount(Mask m) { return std::popcount(m); }

// Iterate set bits low to high: for (Mask t = m; t; t &= t - 1) use lowest_bit(t).
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// PairBits: subset of a relation's pair set, one bit per canonically indexed
// pair.  Word 0 holds pairs 0..63, and strict set inclusion implies a
// smaller big-integer value, so the numeric encoding order is topological
// for containment.
using PairBits = std::vector<std::uint64_t>;
using BitsView = std::span<const std::uint64_t>;

inline int words_for_bits(int nbits) { return (nbits + 63) / 64; }

inline bool bits_get(BitsView v, int i) { return (v[i >> 6] >> (i & 63)) & 1u; }
inline void bits_set(PairBits& v, int i) { v[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void bits_clear_bit(PairBits& v, int i) { v[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

inline bool bits_equal(BitsView a, BitsView b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] != b[w]) return false;
  return true;
}

inline bool bits_subset(BitsView a, BitsView b) {  // a ⊆ b
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

inline bool bits_intersect(BitsView a, BitsView b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & b[w]) return true;
  return false;
}

inline bool bits_empty(BitsView a) {
  for (auto w : a)
    if (w) return false;
  return true;
}

inline int bits_popcount(BitsView a) {
  int c = 0;
  for (auto w : a) c += std::popcount(w);
  return c;
}

// Numeric comparison of the encodings (most significant word first).
inline int bits_compare(BitsView a, BitsView b) {
  for (std::size_t w = a.size(); w-- > 0;) {
    if (a[w] != b[w]) return a[w] < b[w] ? -1 : 1;
  }
  return 0;
}

inline std::uint64_t bits_hash(BitsView a) {
  std::uint64_t h = 0x9e3779b97f4a7c15u;
  for (auto w : a) {
    h ^= w + 0x9e3779b97f4a7c15u + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9u;
    h ^= h >> 27;
  }
  return h;
}

struct PairBitsHash {
  std::size_t operator()(const PairBits& v) const {
    return static_cast<std::size_t>(bits_hash(v));
  }
};

// Visit set bit positions low to high.
template <typename F>
void bits_for_each(BitsView a, F&& f) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    for (std::uint64_t t = a[w]; t; t &= t - 1)
      f(static_cast<int>(w * 64) + std::countr_zero(t));
  }
}

}  // namespace reglat
