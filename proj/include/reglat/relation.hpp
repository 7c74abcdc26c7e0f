#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reglat/bits.hpp"
#include "reglat/errors.hpp"

namespace reglat {

// A binary relation on {1..n}, stored as dense row masks.  Elements are
// 1-based at the API boundary (parsing, printing, generator specs) and
// 0-based everywhere else.
struct Relation {
  int n = 0;
  std::vector<Mask> row;  // row[i] bit j  <=>  (i,j) in the relation

  Relation() = default;
  explicit Relation(int ground) : n(ground), row(ground, 0) {
    if (ground < 0 || ground > kMaxGround) fail(Errc::bad_spec, "ground size out of range");
  }

  bool contains(int i, int j) const { return has(row[i], j); }
  void add(int i, int j);  // bounds-checked
  int pair_count() const;
  std::vector<std::pair<int, int>> pairs() const;  // row-major, 0-based

  bool is_transitive() const;
  bool is_antisymmetric() const;  // (i,j),(j,i) present with i != j never occurs
  Relation transposed() const;
  Relation opposite() const { return transposed(); }

  bool operator==(const Relation& o) const { return n == o.n && row == o.row; }
};

// Least transitive relation containing r (bit-parallel Warshall).
Relation transitive_closure(const Relation& r);

// In-place closure of raw rows; shared by the subset operators.
void close_rows(std::vector<Mask>& rows);

class SubRel;

// A validated transitive relation: the ambient space every subset lives in.
// Carries the reflexive preorder, its transpose, the equivalence classes of
// mutual comparability, and the canonical row-major pair index that SubRel
// bit vectors are defined over.
class TransRel {
 public:
  enum class Close { require, apply };

  explicit TransRel(Relation r, Close mode = Close::require);

  int ground_size() const { return rel_.n; }
  const Relation& rel() const { return rel_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  int words() const { return words_; }

  // canonical pair indexing
  int pair_index(int i, int j) const { return pair_idx_[i * rel_.n + j]; }
  std::pair<int, int> pair_at(int idx) const { return pairs_[idx]; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  bool lt(int i, int j) const { return rel_.contains(i, j); }       // i ◁ j
  bool le(int i, int j) const { return has(leq_row_[i], j); }       // i ⊴ j
  bool equiv(int i, int j) const { return le(i, j) && le(j, i); }   // i ≡ j

  Mask leq_row(int i) const { return leq_row_[i]; }  // { j : i ⊴ j }
  Mask leq_col(int j) const { return leq_col_[j]; }  // { i : i ⊴ j }
  Mask lt_row(int i) const { return rel_.row[i]; }
  Mask lt_col(int j) const { return lt_col_[j]; }

  Mask equiv_class(int i) const { return classes_[class_of_[i]]; }
  const std::vector<Mask>& equiv_classes() const { return classes_; }
  int class_of(int i) const { return class_of_[i]; }

  bool is_antisymmetric() const { return antisymmetric_; }

  // subset factories
  SubRel empty_subset() const;
  SubRel full_subset() const;
  SubRel subset_of(const std::vector<std::pair<int, int>>& prs) const;  // 0-based

  // raw pair-bit conversions used by the lattice machinery
  void decode_rows(BitsView bits, std::vector<Mask>& rows) const;  // rows sized n, overwritten
  void encode_rows(const std::vector<Mask>& rows, PairBits& out) const;
  PairBits empty_bits() const { return PairBits(words_, 0); }
  const PairBits& full_bits() const { return full_bits_; }

 private:
  Relation rel_;
  std::vector<Mask> leq_row_, leq_col_, lt_col_;
  std::vector<int> class_of_;
  std::vector<Mask> classes_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::int16_t> pair_idx_;
  PairBits full_bits_;
  int words_ = 0;
  bool antisymmetric_ = false;
};

// Subset a ⊆ e as a bit vector over e's canonical pair index.  Operations on
// two subsets require the same environment object (pointer identity).
class SubRel {
 public:
  SubRel(const TransRel& env, PairBits bits) : env_(&env), bits_(std::move(bits)) {}

  const TransRel& env() const { return *env_; }
  const PairBits& bits() const { return bits_; }
  PairBits& bits() { return bits_; }

  bool contains(int i, int j) const {
    int idx = env_->pair_index(i, j);
    return idx >= 0 && bits_get(bits_, idx);
  }
  int size() const { return bits_popcount(bits_); }
  bool empty() const { return bits_empty(bits_); }
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const SubRel& o) const { return env_ == o.env_ && bits_ == o.bits_; }
  bool subset_of(const SubRel& o) const { return bits_subset(bits_, o.bits_); }

  SubRel complement() const;  // e ∖ a
  friend SubRel operator|(const SubRel& a, const SubRel& b);
  friend SubRel operator&(const SubRel& a, const SubRel& b);

 private:
  friend class TransRel;
  const TransRel* env_;
  PairBits bits_;
};

void check_env(const TransRel& e, const SubRel& a);

// ---- closure / interior / orthogonal ----------------------------------

SubRel tcl(const TransRel& e, const SubRel& a);        // transitive closure
SubRel tin(const TransRel& e, const SubRel& a);        // interior: e ∖ tcl(e ∖ a)
SubRel orthogonal(const TransRel& e, const SubRel& x); // tcl(e ∖ x)
inline SubRel interior(const TransRel& e, const SubRel& a) { return tin(e, a); }

// raw-bit variants (no SubRel wrapper); `scratch` must have e.ground_size() slots
void tcl_bits(const TransRel& e, BitsView in, PairBits& out, std::vector<Mask>& scratch);
void tin_bits(const TransRel& e, BitsView in, PairBits& out, std::vector<Mask>& scratch);
bool bits_closed(const TransRel& e, BitsView a, std::vector<Mask>& scratch);

struct ClassReport {
  bool closed = false;         // a transitive
  bool open = false;           // e ∖ a transitive
  bool clopen = false;
  bool regular_closed = false; // a = tcl(tin(a))
  bool regular_open = false;   // a = tin(tcl(a))
};

ClassReport classify(const TransRel& e, const SubRel& a);

// ---- intervals ----------------------------------------------------------

enum class IntervalKind { cc, co, oc };

struct Interval {
  IntervalKind kind;
  int lo = 0, hi = 0;
  Mask members = 0;
};

Interval interval(const TransRel& e, int lo, int hi, IntervalKind kind);
Mask interval_cc(const TransRel& e, int a, int b);  // ⟦a,b⟧
Mask interval_co(const TransRel& e, int a, int b);  // a ⊴ x ◁ b
Mask interval_oc(const TransRel& e, int a, int b);  // a ◁ x ⊴ b

// ---- structural predicates ----------------------------------------------

// Every interval ⟦a,b⟧ with (a,b) ∈ e is totally preordered.
bool is_square_free(const TransRel& e);

// Connected components of the symmetrised preorder; untouched elements are
// singletons.
std::vector<Mask> components(const TransRel& e);

// Every component is antisymmetric on e, or is a 2-element set carrying the
// full relation.
bool structural_condition_iv(const TransRel& e);

// ---- generators -----------------------------------------------------------

// Specs: chain:n | full:n | b2 | loop2 | diag:n | sum:<atom>+<atom>+... |
// poset:i<j,i<j,...   (1-based labels; poset covers must be acyclic).
TransRel generate(const std::string& spec);

Relation make_chain(int n);      // strict total order on [n]
Relation make_full(int n);       // [n] × [n]
Relation make_b2();              // strict order of the 4-element Boolean lattice
Relation make_diag(int n, Mask a);
Relation make_poset(int n, const std::vector<std::pair<int, int>>& covers);  // 0-based

// Union of pairwise disjoint transitive relations on a common ground set;
// raises NOT_ORTHOGONAL when two components chain through a shared element.
Relation orthogonal_union(const std::vector<Relation>& parts);

// Relocate r onto elements [offset, offset+r.n) of a larger ground set.
Relation shifted(const Relation& r, int ground, int offset);

}  // namespace reglat
