#include "reglat/relation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace reglat {

void Relation::add(int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) fail(Errc::bad_index, "pair index out of range");
  row[i] |= bit(j);
}

int Relation::pair_count() const {
  int c = 0;
  for (Mask m : row) c += popcount(m);
  return c;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(pair_count());
  for (int i = 0; i < n; ++i)
    for (Mask t = row[i]; t; t &= t - 1) out.emplace_back(i, lowest_bit(t));
  return out;
}

bool Relation::is_transitive() const {
  // (i,j),(j,k) present => (i,k) present, i.e. row[j] ⊆ row[i] whenever (i,j).
  for (int i = 0; i < n; ++i)
    for (Mask t = row[i]; t; t &= t - 1)
      if (row[lowest_bit(t)] & ~row[i]) return false;
  return true;
}

bool Relation::is_antisymmetric() const {
  for (int i = 0; i < n; ++i)
    for (Mask t = row[i]; t; t &= t - 1) {
      int j = lowest_bit(t);
      if (j != i && contains(j, i)) return false;
    }
  return true;
}

Relation Relation::transposed() const {
  Relation t(n);
  for (int i = 0; i < n; ++i)
    for (Mask m = row[i]; m; m &= m - 1) t.row[lowest_bit(m)] |= bit(i);
  return t;
}

void close_rows(std::vector<Mask>& rows) {
  const int n = static_cast<int>(rows.size());
  for (int k = 0; k < n; ++k) {
    const Mask via = bit(k);
    const Mask rk = rows[k];
    for (int i = 0; i < n; ++i)
      if (rows[i] & via) rows[i] |= rk;
  }
}

Relation transitive_closure(const Relation& r) {
  Relation out = r;
  close_rows(out.row);
  return out;
}

// ---- TransRel -------------------------------------------------------------

TransRel::TransRel(Relation r, Close mode) : rel_(std::move(r)) {
  if (rel_.n < 1) fail(Errc::bad_spec, "ground set must have at least one element");
  if (!rel_.is_transitive()) {
    if (mode == Close::require) fail(Errc::not_transitive, "relation is not transitive (use auto-close to take tcl first)");
    close_rows(rel_.row);
  }
  const int n = rel_.n;
  leq_row_.resize(n);
  for (int i = 0; i < n; ++i) leq_row_[i] = rel_.row[i] | bit(i);
  leq_col_.assign(n, 0);
  lt_col_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (Mask t = rel_.row[i]; t; t &= t - 1) lt_col_[lowest_bit(t)] |= bit(i);
  for (int j = 0; j < n; ++j) leq_col_[j] = lt_col_[j] | bit(j);

  class_of_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (class_of_[i] >= 0) continue;
    Mask cls = leq_row_[i] & leq_col_[i];  // mutually ⊴-related with i
    int id = static_cast<int>(classes_.size());
    classes_.push_back(cls);
    for (Mask t = cls; t; t &= t - 1) class_of_[lowest_bit(t)] = id;
  }

  pairs_ = rel_.pairs();
  pair_idx_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int idx = 0; idx < static_cast<int>(pairs_.size()); ++idx)
    pair_idx_[pairs_[idx].first * n + pairs_[idx].second] = static_cast<std::int16_t>(idx);
  words_ = words_for_bits(static_cast<int>(pairs_.size()));
  full_bits_.assign(words_, 0);
  for (int idx = 0; idx < static_cast<int>(pairs_.size()); ++idx) bits_set(full_bits_, idx);
  antisymmetric_ = rel_.is_antisymmetric();
}

SubRel TransRel::empty_subset() const { return SubRel(*this, empty_bits()); }
SubRel TransRel::full_subset() const { return SubRel(*this, full_bits_); }

SubRel TransRel::subset_of(const std::vector<std::pair<int, int>>& prs) const {
  PairBits b = empty_bits();
  for (auto [i, j] : prs) {
    if (i < 0 || j < 0 || i >= rel_.n || j >= rel_.n) fail(Errc::bad_index, "pair out of ground set");
    int idx = pair_index(i, j);
    if (idx < 0) fail(Errc::bad_index, "pair not in the ambient relation");
    bits_set(b, idx);
  }
  return SubRel(*this, std::move(b));
}

void TransRel::decode_rows(BitsView bits, std::vector<Mask>& rows) const {
  rows.assign(rel_.n, 0);
  bits_for_each(bits, [&](int idx) {
    auto [i, j] = pairs_[idx];
    rows[i] |= bit(j);
  });
}

void TransRel::encode_rows(const std::vector<Mask>& rows, PairBits& out) const {
  out.assign(words_, 0);
  for (int idx = 0; idx < static_cast<int>(pairs_.size()); ++idx) {
    auto [i, j] = pairs_[idx];
    if (rows[i] & bit(j)) bits_set(out, idx);
  }
}

// ---- SubRel ----------------------------------------------------------------

std::vector<std::pair<int, int>> SubRel::pairs() const {
  std::vector<std::pair<int, int>> out;
  bits_for_each(bits_, [&](int idx) { out.push_back(env_->pair_at(idx)); });
  return out;
}

SubRel SubRel::complement() const {
  PairBits b = env_->full_bits();
  for (std::size_t w = 0; w < b.size(); ++w) b[w] &= ~bits_[w];
  return SubRel(*env_, std::move(b));
}

SubRel operator|(const SubRel& a, const SubRel& b) {
  if (a.env_ != b.env_) fail(Errc::env_mismatch, "subsets of different environments");
  PairBits v = a.bits_;
  for (std::size_t w = 0; w < v.size(); ++w) v[w] |= b.bits_[w];
  return SubRel(*a.env_, std::move(v));
}

SubRel operator&(const SubRel& a, const SubRel& b) {
  if (a.env_ != b.env_) fail(Errc::env_mismatch, "subsets of different environments");
  PairBits v = a.bits_;
  for (std::size_t w = 0; w < v.size(); ++w) v[w] &= b.bits_[w];
  return SubRel(*a.env_, std::move(v));
}

void check_env(const TransRel& e, const SubRel& a) {
  if (&a.env() != &e) fail(Errc::env_mismatch, "subset does not belong to this relation");
}

// ---- closure / interior / orthogonal ---------------------------------------

void tcl_bits(const TransRel& e, BitsView in, PairBits& out, std::vector<Mask>& scratch) {
  e.decode_rows(in, scratch);
  close_rows(scratch);
  e.encode_rows(scratch, out);
}

void tin_bits(const TransRel& e, BitsView in, PairBits& out, std::vector<Mask>& scratch) {
  // tin(a) = e ∖ tcl(e ∖ a)
  e.decode_rows(in, scratch);
  const Relation& r = e.rel();
  for (int i = 0; i < r.n; ++i) scratch[i] = r.row[i] & ~scratch[i];
  close_rows(scratch);
  e.encode_rows(scratch, out);
  const PairBits& full = e.full_bits();
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = full[w] & ~out[w];
}

bool bits_closed(const TransRel& e, BitsView a, std::vector<Mask>& scratch) {
  e.decode_rows(a, scratch);
  const int n = e.ground_size();
  for (int i = 0; i < n; ++i)
    for (Mask t = scratch[i]; t; t &= t - 1)
      if (scratch[lowest_bit(t)] & ~scratch[i]) return false;
  return true;
}

SubRel tcl(const TransRel& e, const SubRel& a) {
  check_env(e, a);
  PairBits out;
  std::vector<Mask> scratch;
  tcl_bits(e, a.bits(), out, scratch);
  return SubRel(e, std::move(out));
}

SubRel tin(const TransRel& e, const SubRel& a) {
  check_env(e, a);
  PairBits out;
  std::vector<Mask> scratch;
  tin_bits(e, a.bits(), out, scratch);
  return SubRel(e, std::move(out));
}

SubRel orthogonal(const TransRel& e, const SubRel& x) {
  check_env(e, x);
  return tcl(e, x.complement());
}

ClassReport classify(const TransRel& e, const SubRel& a) {
  check_env(e, a);
  std::vector<Mask> scratch;
  ClassReport r;
  r.closed = bits_closed(e, a.bits(), scratch);
  PairBits comp = a.complement().bits();
  r.open = bits_closed(e, comp, scratch);
  r.clopen = r.closed && r.open;

  PairBits t1, t2;
  tin_bits(e, a.bits(), t1, scratch);
  tcl_bits(e, t1, t2, scratch);
  r.regular_closed = bits_equal(t2, a.bits());

  tcl_bits(e, a.bits(), t1, scratch);
  tin_bits(e, t1, t2, scratch);
  r.regular_open = bits_equal(t2, a.bits());
  return r;
}

// ---- intervals --------------------------------------------------------------

Mask interval_cc(const TransRel& e, int a, int b) { return e.leq_row(a) & e.leq_col(b); }
Mask interval_co(const TransRel& e, int a, int b) { return e.leq_row(a) & e.lt_col(b); }
Mask interval_oc(const TransRel& e, int a, int b) { return e.lt_row(a) & e.leq_col(b); }

Interval interval(const TransRel& e, int lo, int hi, IntervalKind kind) {
  if (lo < 0 || hi < 0 || lo >= e.ground_size() || hi >= e.ground_size())
    fail(Errc::bad_index, "interval endpoint out of range");
  Interval iv;
  iv.kind = kind;
  iv.lo = lo;
  iv.hi = hi;
  switch (kind) {
    case IntervalKind::cc: iv.members = interval_cc(e, lo, hi); break;
    case IntervalKind::co: iv.members = interval_co(e, lo, hi); break;
    case IntervalKind::oc: iv.members = interval_oc(e, lo, hi); break;
  }
  return iv;
}

// ---- structural predicates ----------------------------------------------------

bool is_square_free(const TransRel& e) {
  const int n = e.ground_size();
  // comparable(x) = { y : x ⊴ y or y ⊴ x }
  std::vector<Mask> comp(n);
  for (int x = 0; x < n; ++x) comp[x] = e.leq_row(x) | e.leq_col(x);
  for (auto [a, b] : e.pairs()) {
    Mask iv = interval_cc(e, a, b);
    for (Mask t = iv; t; t &= t - 1)
      if (iv & ~comp[lowest_bit(t)]) return false;
  }
  return true;
}

std::vector<Mask> components(const TransRel& e) {
  const int n = e.ground_size();
  std::vector<Mask> adj(n);
  for (int i = 0; i < n; ++i) adj[i] = (e.lt_row(i) | e.lt_col(i)) & ~bit(i);
  std::vector<Mask> comps;
  Mask seen = 0;
  for (int s = 0; s < n; ++s) {
    if (has(seen, s)) continue;
    Mask comp = bit(s), frontier = bit(s);
    while (frontier) {
      Mask next = 0;
      for (Mask t = frontier; t; t &= t - 1) next |= adj[lowest_bit(t)];
      frontier = next & ~comp;
      comp |= next;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

bool structural_condition_iv(const TransRel& e) {
  for (Mask comp : components(e)) {
    bool antisym = true;
    for (Mask t = comp; t && antisym; t &= t - 1) {
      int i = lowest_bit(t);
      if ((e.lt_row(i) & e.lt_col(i) & ~bit(i)) != 0) antisym = false;
    }
    if (antisym) continue;
    if (popcount(comp) != 2) return false;
    int a = lowest_bit(comp);
    int b = lowest_bit(comp & (comp - 1));
    if (!e.lt(a, b) || !e.lt(b, a)) return false;
  }
  return true;
}

// ---- generators ------------------------------------------------------------------

Relation make_chain(int n) {
  Relation r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r.add(i, j);
  return r;
}

Relation make_full(int n) {
  Relation r(n);
  for (int i = 0; i < n; ++i) r.row[i] = full_mask(n);
  return r;
}

Relation make_b2() {
  // strict order of the Boolean lattice {1 < 2,3 < 4}
  return make_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

Relation make_diag(int n, Mask a) {
  Relation r(n);
  for (Mask t = a & full_mask(n); t; t &= t - 1) {
    int i = lowest_bit(t);
    r.add(i, i);
  }
  return r;
}

Relation make_poset(int n, const std::vector<std::pair<int, int>>& covers) {
  Relation r(n);
  for (auto [i, j] : covers) {
    if (i == j) fail(Errc::bad_spec, "poset covers must relate distinct elements");
    r.add(i, j);
  }
  Relation c = transitive_closure(r);
  if (!c.is_antisymmetric()) fail(Errc::bad_spec, "poset covers contain a cycle");
  return c;
}

Relation shifted(const Relation& r, int ground, int offset) {
  if (offset + r.n > ground) fail(Errc::bad_spec, "shifted relation exceeds ground set");
  Relation out(ground);
  for (int i = 0; i < r.n; ++i) out.row[i + offset] = r.row[i] << offset;
  return out;
}

Relation orthogonal_union(const std::vector<Relation>& parts) {
  if (parts.empty()) fail(Errc::bad_spec, "empty orthogonal union");
  const int n = parts.front().n;
  for (const auto& p : parts) {
    if (p.n != n) fail(Errc::bad_spec, "orthogonal union needs a common ground set");
    if (!p.is_transitive()) fail(Errc::not_transitive, "orthogonal union component not transitive");
  }
  // pairwise disjoint pair sets, and no chaining (p,q) in e_i, (q,r) in e_j
  // with p != q, q != r across distinct components
  for (std::size_t x = 0; x < parts.size(); ++x)
    for (std::size_t y = 0; y < parts.size(); ++y) {
      if (x == y) continue;
      for (int i = 0; i < n; ++i) {
        if (x < y && (parts[x].row[i] & parts[y].row[i]))
          fail(Errc::not_orthogonal, "components share a pair");
        for (Mask t = parts[x].row[i] & ~bit(i); t; t &= t - 1) {
          int q = lowest_bit(t);
          if (parts[y].row[q] & ~bit(q)) fail(Errc::not_orthogonal, "components chain through a shared element");
        }
      }
    }
  Relation out(n);
  for (const auto& p : parts)
    for (int i = 0; i < n; ++i) out.row[i] |= p.row[i];
  return out;
}

namespace {

int parse_int(const std::string& s, int lo, int hi, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v < lo || v > hi)
    fail(Errc::bad_spec, std::string("bad ") + what + " in generator spec: " + s);
  return v;
}

Relation atom_from_spec(const std::string& spec) {
  if (spec == "b2") return make_b2();
  if (spec == "loop2") return make_full(2);
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "chain") return make_chain(parse_int(tail, 1, kMaxGround, "chain size"));
  if (head == "full") return make_full(parse_int(tail, 1, kMaxGround, "full size"));
  if (head == "diag") {
    int n = parse_int(tail, 1, kMaxGround, "diag size");
    return make_diag(n, full_mask(n));
  }
  if (head == "poset") {
    // poset:1<2,1<3,2<4
    std::vector<std::pair<int, int>> covers;
    int n = 0;
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto lt = item.find('<');
      if (lt == std::string::npos) fail(Errc::bad_spec, "poset cover must look like i<j");
      int a = parse_int(item.substr(0, lt), 1, kMaxGround, "poset element");
      int b = parse_int(item.substr(lt + 1), 1, kMaxGround, "poset element");
      covers.emplace_back(a - 1, b - 1);
      n = std::max({n, a, b});
    }
    if (covers.empty()) fail(Errc::bad_spec, "empty poset spec");
    return make_poset(n, covers);
  }
  fail(Errc::bad_spec, "unknown generator: " + spec);
}

}  // namespace

TransRel generate(const std::string& spec) {
  if (spec.rfind("sum:", 0) == 0) {
    std::vector<Relation> atoms;
    std::stringstream ss(spec.substr(4));
    std::string item;
    int total = 0;
    while (std::getline(ss, item, '+')) {
      atoms.push_back(atom_from_spec(item));
      total += atoms.back().n;
    }
    if (atoms.empty()) fail(Errc::bad_spec, "empty sum spec");
    if (total > kMaxGround) fail(Errc::bad_spec, "sum exceeds the ground-set cap");
    std::vector<Relation> placed;
    int off = 0;
    for (const auto& a : atoms) {
      placed.push_back(shifted(a, total, off));
      off += a.n;
    }
    return TransRel(orthogonal_union(placed));
  }
  return TransRel(atom_from_spec(spec));
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_spec: return "BAD_SPEC";
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::not_transitive: return "NOT_TRANSITIVE";
    case Errc::env_mismatch: return "ENV_MISMATCH";
    case Errc::bad_index: return "BAD_INDEX";
    case Errc::not_orthogonal: return "NOT_ORTHOGONAL";
    case Errc::not_in_f: return "NOT_IN_F";
    case Errc::not_antisymmetric: return "NOT_ANTISYMMETRIC";
    case Errc::not_bipartite: return "NOT_BIPARTITE";
    case Errc::not_d_upper: return "NOT_D_UPPER";
    case Errc::cap_exceeded: return "CAP_EXCEEDED";
    case Errc::construction_mismatch: return "CONSTRUCTION_MISMATCH";
    case Errc::internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace reglat
