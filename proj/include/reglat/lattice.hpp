#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "reglat/jirr.hpp"
#include "reglat/relation.hpp"

namespace reglat {

// Abstract finite poset: elements 0..n-1 in a topological linear order
// (i < j whenever element i is strictly below element j), containment kept
// as below/above bitset rows.  All order-theoretic queries (covers,
// lub/glb, irreducibles) live here so they apply equally to element tables,
// products and duals.
class CoverDag {
 public:
  CoverDag() = default;
  CoverDag(std::uint32_t n, std::vector<std::uint64_t> below_rows);

  std::uint32_t size() const { return n_; }
  int words() const { return words_; }
  BitsView below(std::uint32_t i) const { return {below_.data() + std::size_t(i) * words_, static_cast<std::size_t>(words_)}; }
  BitsView above(std::uint32_t i) const { return {above_.data() + std::size_t(i) * words_, static_cast<std::size_t>(words_)}; }
  bool leq(std::uint32_t i, std::uint32_t j) const { return bits_get(below(j), static_cast<int>(i)); }

  // unique least/greatest element of the candidate bitset, -1 if none
  int least_of(BitsView candidates) const;
  int greatest_of(BitsView candidates) const;

  int lub(std::uint32_t i, std::uint32_t j) const;  // -1 when absent
  int glb(std::uint32_t i, std::uint32_t j) const;
  bool is_lattice() const;

  bool has_bottom() const;  // element 0 below everything
  bool has_top() const;

  const std::vector<std::uint32_t>& up_covers(std::uint32_t i) const;
  const std::vector<std::uint32_t>& down_covers(std::uint32_t i) const;

  // exactly one lower (upper) cover
  std::vector<std::uint32_t> join_irreducibles() const;
  std::vector<std::uint32_t> meet_irreducibles() const;

  CoverDag dualized() const;

 private:
  void ensure_covers() const;

  std::uint32_t n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> below_, above_;
  mutable bool covers_built_ = false;
  mutable std::vector<std::vector<std::uint32_t>> covers_up_, covers_down_;
};

// Componentwise-ordered product; result indices are i1 * n2 + i2.
CoverDag product(const CoverDag& a, const CoverDag& b, std::size_t cap = 250'000);

// Backtracking order-isomorphism test on cover digraphs, seeded by an
// iterated structural colouring (degrees, ideal sizes, heights and
// neighbour-colour multisets).  Deterministic; exact.
bool is_isomorphic(const CoverDag& a, const CoverDag& b, std::size_t cap = 5'000);
bool is_dually_isomorphic(const CoverDag& a, const CoverDag& b, std::size_t cap = 5'000);

// How meets are evaluated on an element table: by the Reg(e) formula
// tcl(tin(x ∩ y)), or as order-theoretic greatest lower bounds (the rule for
// quotients, which need not be sublattices).
enum class MeetRule { formula, order };

// Table of pair-subsets of one environment, closed under join
// tcl(x ∪ y) and sorted by bit encoding (a topological order).
class SetLattice {
 public:
  SetLattice(const TransRel& env, std::vector<PairBits> elems, MeetRule mr);

  const TransRel& env() const { return *env_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
  BitsView elem(std::uint32_t i) const { return elems_[i]; }
  const std::vector<PairBits>& elements() const { return elems_; }

  std::optional<std::uint32_t> find(const PairBits& bits) const;
  std::uint32_t index_of(const PairBits& bits) const;  // throws INTERNAL if absent

  std::uint32_t bottom() const { return 0; }
  std::uint32_t top() const { return size() - 1; }

  std::uint32_t join(std::uint32_t i, std::uint32_t j) const;  // tcl(x ∪ y)
  std::uint32_t meet(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t orth(std::uint32_t i) const;                   // tcl(e ∖ x), MeetRule::formula only

  const CoverDag& dag() const;

 private:
  const TransRel* env_;
  std::vector<PairBits> elems_;
  std::unordered_map<PairBits, std::uint32_t, PairBitsHash> index_;
  MeetRule meet_rule_;
  mutable std::optional<CoverDag> dag_;
};

// Closure of {∅} ∪ generators under binary join with the generators.
// Spatiality of Reg(e) makes this reach every regular closed set when the
// generators are the completely join-irreducible elements.
SetLattice join_closure(const TransRel& e, const std::vector<PairBits>& generators,
                        std::size_t cap, MeetRule mr);

enum class RegMethod { join_closure, exhaustive };

// Reg(e): all regular closed subsets.  The exhaustive method scans all
// 2^|e| subsets and is the independent route kept for small oracles.
SetLattice build_reg(const TransRel& e, std::size_t cap = 2'000'000,
                     RegMethod method = RegMethod::join_closure);
SetLattice build_reg(const TransRel& e, const std::vector<JirrElement>& jirr,
                     std::size_t cap = 2'000'000);

struct ClopView {
  SetLattice poset;          // clopen elements, same environment
  bool lattice = false;      // pairwise lubs and glbs exist
  bool equals_reg = false;
};

ClopView build_clop(const TransRel& e, const SetLattice& reg);

std::vector<char> clopen_flags(const TransRel& e, const SetLattice& lat);

// ---- structural verification ------------------------------------------------

struct CheckReport {
  bool pass = true;
  std::string failure;  // first counterexample, empty when pass
};

// O1/O2/O3, both de Morgan laws, and order reversal of x ↦ orth(x).
CheckReport verify_ortholattice(const SetLattice& reg);

// Every element is a join of clopen elements below and a meet of clopen
// elements above; completely join-irreducible elements are clopen; the
// lattice is spatial over the enumerated join-irreducibles.
CheckReport verify_macneille(const TransRel& e, const SetLattice& reg,
                             const std::vector<JirrElement>& jirr);

// Reg(e) owned together with its environment and join-irreducible table.
struct BuiltReg {
  std::unique_ptr<TransRel> env;
  std::vector<JirrElement> jirr;
  SetLattice reg;
};

BuiltReg build_reg_owned(Relation r, std::size_t cap = 2'000'000);

}  // namespace reglat
