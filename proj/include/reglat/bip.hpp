#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reglat/bigint.hpp"
#include "reglat/depend.hpp"
#include "reglat/lattice.hpp"

namespace reglat {

// Bip(n) = Reg([n] × [n]) together with its environment and join-irreducible
// table.
struct Bip {
  std::unique_ptr<TransRel> env;
  std::vector<JirrElement> jirr;
  SetLattice lat;
};

// n ≤ 6 by default; larger ground sets need an explicit cap.
Bip build_bip(int n, std::size_t cap = 0);

// M(0) = 1, M(n) = 2 Σ C(n,k) M(n−k): the number of bipartitions of [n].
BigUint wagner(int n);

// Join-irreducibles of Bip(n) in closed form: ⟨U⟩ = Uᶜ × U for a bipartite
// element, ⟨a,U⟩ for a clepsydra (U stored without a).
struct BipJirr {
  bool bipartite = false;
  int a = 0;   // clepsydra apex, unused for bipartite
  Mask u = 0;

  bool operator==(const BipJirr&) const = default;
};

std::vector<BipJirr> bip_jirr_closed_form(int n);
PairBits bip_jirr_bits(const TransRel& env, const BipJirr& j);

// Elements a with (a,i),(i,a) ∈ x exactly for i = a.
Mask isolated_points(const TransRel& env, BitsView x);

bool member_k(const TransRel& env, BitsView x);
bool member_s(const TransRel& env, int a, Mask u, BitsView x);

// S(n,⟨a,U⟩): join closure of the bipartite generators plus ⟨a,U⟩, checked
// element-for-element against the membership filter of Bip(n).
SetLattice s_lattice(const Bip& b, int a, Mask u, std::size_t cap = 2'000'000);

// Closed-form join dependency on Bip(n): clepsydra → bipartite always holds,
// nothing reaches a clepsydra, and bipartite pairs fail exactly on unbalanced
// partitions.
bool bip_d_closed_form(int n, const BipJirr& p, const BipJirr& q);

struct ConShape {
  bool applicable = false;  // the description holds for n ≥ 3 only
  std::string note;
  bool shape_ok = false;
  int atom_count = 0;
  BigUint congruence_count;        // 2^atoms + 1, from the verified shape
  std::optional<std::uint64_t> dp_count;  // independent down-set count when ≤ 24 classes
};

ConShape con_bip_shape(const Bip& b);

struct FactorClass {
  int k = 0;                 // canonical index, 2k < n
  std::size_t cardinality = 0;
  int instances = 0;         // number of (a,U) with |U| ∈ {k, n−1−k}
  bool self_dual = false;
  bool iso_to_complement = true;  // S(n,k) ≅ S(n,n−1−k) via the backtracking tester
  bool iso_checked = false;       // false when the size cap skipped the tester
};

struct FactorCensus {
  int n = 0;
  std::vector<FactorClass> classes;
  bool sizes_depend_only_on_card = false;
  bool opposite_map_ok = false;  // x ↦ xᵒᵖ maps S(n,⟨a,U⟩) onto S(n,⟨a,Uᶜ∖{a}⟩)
};

FactorCensus factor_census(const Bip& b, std::size_t iso_cap = 5'000,
                           std::size_t cap = 2'000'000);

}  // namespace reglat
