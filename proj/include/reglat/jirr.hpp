#pragma once

#include <cstddef>
#include <vector>

#include "reglat/relation.hpp"

namespace reglat {

// Triple (a, b, U) naming a completely join-irreducible element of Reg(e):
// (a,b) ∈ e, U ⊆ ⟦a,b⟧, and for a ≠ b additionally a ∉ U, b ∈ U.  Clepsydra
// triples (a = b) are stored with a removed from U; only U ∖ {a} matters for
// the realized set, so this pins one representative per element.
struct JirrTriple {
  int a = 0;
  int b = 0;
  Mask u = 0;

  bool clepsydra() const { return a == b; }
  bool operator==(const JirrTriple&) const = default;
};

// Lexicographic (a, b, U-as-sorted-list) — the dedup tie-break order.
bool triple_less(const JirrTriple& s, const JirrTriple& t);

// Throws NOT_IN_F unless t satisfies the membership conditions above.
void validate_triple(const TransRel& e, const JirrTriple& t);

// p⟨a,b,U⟩ = e ∩ (({a} ∪ Uᶜ) × ({b} ∪ U)); clopen, contains (a,b), and
// bipartite exactly when a ≠ b.
SubRel realize(const TransRel& e, const JirrTriple& t);
PairBits realize_bits(const TransRel& e, const JirrTriple& t);

// The unique lower cover p★: drop ⟦a⟧ × ⟦b⟧ in the bipartite case and the
// single pair (a,a) in the clepsydra case.  Every proper open subset of p
// is contained in p★.
SubRel lower_cover(const TransRel& e, const JirrTriple& t);
PairBits lower_cover_bits(const TransRel& e, const JirrTriple& t);

struct JirrElement {
  JirrTriple triple;   // canonical representative
  PairBits p;          // realized clopen set
  PairBits p_star;     // lower cover
  bool clepsydra = false;
};

// Complete duplicate-free list of completely join-irreducible elements of
// Reg(e), sorted by the bit encoding of the realized set.  The triple kept
// for each element is the lexicographically least one realizing it.
std::vector<JirrElement> enumerate_jirr(const TransRel& e, std::size_t cap = 2'000'000);

}  // namespace reglat
