#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reglat/lattice.hpp"

namespace reglat {

// Join and meet tables of a finite lattice, computed from the order alone.
struct JoinMeetTables {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> join, meet;  // n × n, row-major

  std::uint32_t j(std::uint32_t a, std::uint32_t b) const { return join[std::size_t(a) * n + b]; }
  std::uint32_t m(std::uint32_t a, std::uint32_t b) const { return meet[std::size_t(a) * n + b]; }
};

JoinMeetTables build_tables(const CoverDag& d, std::size_t cap = 2'000);

// Definition-direct deciders.  They are oracles for the theorem replays, so
// each is a plain scan with an explicit size cap.
bool is_semidistributive(const CoverDag& d, std::size_t cap = 2'000);
bool is_pseudocomplemented(const CoverDag& d, std::size_t cap = 2'000);
bool is_bounded_himage(const CoverDag& d, std::size_t cap = 2'000);
bool interpolation_property(const CoverDag& poset, std::size_t cap = 2'000);

struct TheoremReport {
  std::string theorem;
  std::vector<std::pair<std::string, bool>> conditions;
  bool verdict = false;  // all conditions agree
  std::string witness;   // names the disagreeing conditions when verdict fails
};

// Square-freeness ⟺ Clop = Reg ⟺ Clop is a lattice ⟺ interpolation, each
// side evaluated independently.
TheoremReport check_theorem_sqfree(const TransRel& e, std::size_t reg_cap = 2'000'000,
                                   std::size_t scan_cap = 2'000);

// Bounded image ⟺ semidistributive ⟺ pseudocomplemented ⟺ the component
// condition on e.
TheoremReport check_theorem_regesd(const TransRel& e, std::size_t reg_cap = 2'000'000,
                                   std::size_t scan_cap = 2'000);

// The witness triple of the non-pseudocomplementedness construction: clopen
// a0, a1, c with a0 ∧ c = a1 ∧ c = ∅ and ∅ ≠ c ⊆ a0 ∨ a1, available whenever
// a0 ≡ a1 are distinct and some third element sits beside them.
struct NonPseudoWitness {
  bool found = false;
  PairBits a0, a1, c;
};

NonPseudoWitness non_pseudo_witness(const TransRel& e);

// ---- test corpora -----------------------------------------------------------

// Every transitive relation on [n]; practical for n ≤ 4 (scans 2^(n²) sets).
std::vector<Relation> all_transitive_relations(int n);

// Seeded sampler: random relation with edge density cycling over
// {0.2, 0.4, 0.6}, transitively closed.
std::vector<Relation> sample_transitive_relations(int n, int count, std::uint64_t seed);

}  // namespace reglat
