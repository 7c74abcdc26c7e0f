#pragma once

// Test-only oracles.  Everything here recomputes the definitions with plain
// pair-set algorithms (breadth-first path search, subset scans), independent
// of the bit-matrix implementation under test.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "reglat/relation.hpp"

namespace oracle {

using Pair = std::pair<int, int>;
using PairSet = std::set<Pair>;

// closure by repeated composition until fixpoint
inline PairSet tcl(const PairSet& a) {
  PairSet out = a;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Pair> add;
    for (const auto& [x, y] : out)
      for (const auto& [y2, z] : out)
        if (y == y2 && !out.count({x, z})) add.push_back({x, z});
    for (const auto& p : add) changed |= out.insert(p).second;
  }
  return out;
}

inline bool is_transitive(const PairSet& a) {
  for (const auto& [x, y] : a)
    for (const auto& [y2, z] : a)
      if (y == y2 && !a.count({x, z})) return false;
  return true;
}

inline PairSet complement_in(const PairSet& e, const PairSet& a) {
  PairSet out;
  for (const auto& p : e)
    if (!a.count(p)) out.insert(p);
  return out;
}

// (x,y) ∈ tin(a) iff every one-step subdivision chain from x to y hits a;
// equivalently there is no path x → y using only edges outside a.
inline PairSet tin(const PairSet& e, const PairSet& a) {
  PairSet out;
  PairSet avoid = complement_in(e, a);
  for (const auto& [x, y] : e) {
    // search for an avoiding path x -> y (edges from `avoid`, length >= 1)
    std::vector<int> stack{x};
    std::set<int> seen;
    bool found = false;
    while (!stack.empty() && !found) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [p, q] : avoid) {
        if (p != v) continue;
        if (q == y) {
          found = true;
          break;
        }
        if (seen.insert(q).second) stack.push_back(q);
      }
    }
    if (!found) out.insert({x, y});
  }
  return out;
}

inline bool is_open(const PairSet& e, const PairSet& a) { return is_transitive(complement_in(e, a)); }

inline bool is_regular_closed(const PairSet& e, const PairSet& a) { return tcl(tin(e, a)) == a; }

inline PairSet from_bits(const reglat::TransRel& env, reglat::BitsView bits) {
  PairSet out;
  reglat::bits_for_each(bits, [&](int idx) { out.insert(env.pair_at(idx)); });
  return out;
}

inline PairSet env_pairs(const reglat::TransRel& env) {
  PairSet out;
  for (auto p : env.pairs()) out.insert(p);
  return out;
}

// all subsets of e that satisfy `keep`, as a sorted vector of pair sets
template <typename Keep>
std::vector<PairSet> scan_subsets(const reglat::TransRel& env, Keep&& keep) {
  const auto pairs = env.pairs();
  const int m = static_cast<int>(pairs.size());
  if (m > 16) throw std::runtime_error("oracle subset scan limited to 16 pairs");
  std::vector<PairSet> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    PairSet a;
    for (int i = 0; i < m; ++i)
      if ((s >> i) & 1) a.insert(pairs[i]);
    if (keep(a)) out.push_back(std::move(a));
  }
  return out;
}

inline std::vector<PairSet> brute_force_reg(const reglat::TransRel& env) {
  PairSet e = env_pairs(env);
  return scan_subsets(env, [&](const PairSet& a) { return is_regular_closed(e, a); });
}

inline std::vector<PairSet> brute_force_clop(const reglat::TransRel& env) {
  PairSet e = env_pairs(env);
  return scan_subsets(env, [&](const PairSet& a) { return is_transitive(a) && is_open(e, a); });
}

// join-irreducibles of a brute-forced element list: exactly one lower cover
inline std::vector<PairSet> lattice_scan_jirr(const std::vector<PairSet>& elems) {
  std::vector<PairSet> out;
  for (const auto& p : elems) {
    int lower_covers = 0;
    for (const auto& q : elems) {
      if (q == p || !std::includes(p.begin(), p.end(), q.begin(), q.end())) continue;
      bool covered = true;  // q < p with nothing in between
      for (const auto& z : elems) {
        if (z == p || z == q) continue;
        if (std::includes(p.begin(), p.end(), z.begin(), z.end()) &&
            std::includes(z.begin(), z.end(), q.begin(), q.end())) {
          covered = false;
          break;
        }
      }
      if (covered) ++lower_covers;
    }
    if (lower_covers == 1) out.push_back(p);
  }
  return out;
}

inline reglat::PairBits to_bits(const reglat::TransRel& env, const PairSet& a) {
  reglat::PairBits out = env.empty_bits();
  for (const auto& [i, j] : a) reglat::bits_set(out, env.pair_index(i, j));
  return out;
}

}  // namespace oracle
