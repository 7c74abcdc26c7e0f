#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reglat/lattice.hpp"

namespace reglat {

// Arrow relation between join-irreducible clopen sets, evaluated through the
// orthocomplement duality: p ↗ orth(q) iff p ∩ q ≠ ∅ and p ∩ q★ = ∅.
bool arrow_up(const JirrElement& p, const JirrElement& q);

// orth(r) ↘ q holds iff q ∩ r ≠ ∅ and q★ ∩ r = ∅.
bool arrow_down(const JirrElement& q, const JirrElement& r);

// Closed-form arrow evaluation by case split on the triple shapes; must agree
// with arrow_up on canonical triples.
bool arrow_up_closed_form(const TransRel& e, const JirrTriple& tp, const JirrTriple& tq);

// Join dependency p D q: distinct p, q with some meet-irreducible orth(r)
// satisfying p ↗ orth(r) ↘ q.
bool join_dependency(const TransRel& e, const std::vector<JirrElement>& jirr,
                     std::size_t ip, std::size_t iq);

// Residual set Res{U}{c,d} = (U ∩ ⦗c,d⟧) ∪ {d}.
Mask res_set(const TransRel& e, Mask u, int c, int d);

// Characterisation of D on bipartite triples over an antisymmetric relation:
// ⟦a1,b1⟧ ⊊ ⟦a0,b0⟧ and U1 = Res{U0}{a1,b1}.
bool d_char_antisym(const TransRel& e, const JirrTriple& t0, const JirrTriple& t1);

// Join-dependency graph on the join-irreducible table with its reflexive
// transitive closure, strongly connected classes and the induced class order
// (class(p) ≤ class(q) iff p D★ q).
struct DepGraph {
  int nj = 0;
  int words = 0;
  std::vector<std::uint64_t> d;      // nj × words adjacency
  std::vector<std::uint64_t> dstar;  // reflexive-transitive closure

  int nc = 0;
  std::vector<int> class_of;                     // jirr index -> class id (topological)
  std::vector<std::vector<int>> class_members;   // per class, ascending
  std::vector<std::uint64_t> class_below;        // nc × W(nc): c' ≤ c
  std::vector<int> minimal_classes;              // Δ(L): sources of the class order

  BitsView d_row(int p) const { return {d.data() + std::size_t(p) * words, static_cast<std::size_t>(words)}; }
  BitsView dstar_row(int p) const { return {dstar.data() + std::size_t(p) * words, static_cast<std::size_t>(words)}; }
  bool d_edge(int p, int q) const { return bits_get(d_row(p), q); }
  bool reaches(int p, int q) const { return bits_get(dstar_row(p), q); }

  bool cycle_free() const;      // all classes trivial, no self loops
  bool transitive_d() const;    // D² ⊆ D
  CoverDag class_poset() const;
};

DepGraph dep_graph(const TransRel& e, const std::vector<JirrElement>& jirr);

// Number of down-sets of a poset given as below-rows over ≤ `cap` vertices.
std::optional<std::uint64_t> count_down_sets(const CoverDag& poset, int cap = 24);

// Quotient lattice L/θ_S realized as the (∨,0)-subsemilattice generated by a
// D-upper set S of join-irreducibles; joins are inherited, meets recomputed.
SetLattice theta_quotient(const TransRel& e, const std::vector<JirrElement>& jirr,
                          const DepGraph& dg, const std::vector<int>& s_members,
                          std::size_t cap = 2'000'000);

struct CongruenceSummary {
  DepGraph dep;
  std::vector<int> delta_classes;          // minimal class ids
  bool count_exact = false;
  std::uint64_t congruence_count = 0;      // valid when count_exact
  std::vector<std::size_t> factor_sizes;   // one factor per Δ-class
  std::vector<SetLattice> factors;
  bool subdirect_injective = false;
};

CongruenceSummary congruence_summary(const TransRel& e, const SetLattice& reg,
                                     const std::vector<JirrElement>& jirr,
                                     int class_cap = 24, std::size_t cap = 2'000'000);

}  // namespace reglat
