#include "reglat/lattice.hpp"

#include <algorithm>

namespace reglat {

// ---- CoverDag -----------------------------------------------------------------

CoverDag::CoverDag(std::uint32_t n, std::vector<std::uint64_t> below_rows)
    : n_(n), words_(words_for_bits(static_cast<int>(n))), below_(std::move(below_rows)) {
  above_.assign(below_.size(), 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    BitsView row{below_.data() + std::size_t(i) * words_, static_cast<std::size_t>(words_)};
    bits_for_each(row, [&](int j) {
      above_[std::size_t(j) * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
    });
  }
}

int CoverDag::least_of(BitsView candidates) const {
  // Elements are topologically ordered, so the first candidate is minimal
  // among the candidates; it is the least iff everything lies above it.
  int m = -1;
  for (std::size_t w = 0; w < candidates.size(); ++w)
    if (candidates[w]) {
      m = static_cast<int>(w * 64) + std::countr_zero(candidates[w]);
      break;
    }
  if (m < 0) return -1;
  BitsView ab = above(static_cast<std::uint32_t>(m));
  for (std::size_t w = 0; w < candidates.size(); ++w)
    if (candidates[w] & ~ab[w]) return -1;
  return m;
}

int CoverDag::greatest_of(BitsView candidates) const {
  int m = -1;
  for (std::size_t w = candidates.size(); w-- > 0;)
    if (candidates[w]) {
      m = static_cast<int>(w * 64) + 63 - std::countl_zero(candidates[w]);
      break;
    }
  if (m < 0) return -1;
  BitsView be = below(static_cast<std::uint32_t>(m));
  for (std::size_t w = 0; w < candidates.size(); ++w)
    if (candidates[w] & ~be[w]) return -1;
  return m;
}

int CoverDag::lub(std::uint32_t i, std::uint32_t j) const {
  std::vector<std::uint64_t> cand(words_);
  BitsView ai = above(i), aj = above(j);
  for (int w = 0; w < words_; ++w) cand[w] = ai[w] & aj[w];
  return least_of(cand);
}

int CoverDag::glb(std::uint32_t i, std::uint32_t j) const {
  std::vector<std::uint64_t> cand(words_);
  BitsView bi = below(i), bj = below(j);
  for (int w = 0; w < words_; ++w) cand[w] = bi[w] & bj[w];
  return greatest_of(cand);
}

bool CoverDag::is_lattice() const {
  if (n_ == 0) return false;
  std::vector<std::uint64_t> cand(words_);
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = i + 1; j < n_; ++j) {
      BitsView ai = above(i), aj = above(j);
      for (int w = 0; w < words_; ++w) cand[w] = ai[w] & aj[w];
      if (least_of(cand) < 0) return false;
      BitsView bi = below(i), bj = below(j);
      for (int w = 0; w < words_; ++w) cand[w] = bi[w] & bj[w];
      if (greatest_of(cand) < 0) return false;
    }
  return true;
}

bool CoverDag::has_bottom() const {
  if (n_ == 0) return false;
  return bits_popcount(above(0)) == static_cast<int>(n_);
}

bool CoverDag::has_top() const {
  if (n_ == 0) return false;
  return bits_popcount(below(n_ - 1)) == static_cast<int>(n_);
}

void CoverDag::ensure_covers() const {
  if (covers_built_) return;
  covers_up_.assign(n_, {});
  covers_down_.assign(n_, {});
  std::vector<std::uint64_t> sa(words_);
  for (std::uint32_t x = 0; x < n_; ++x) {
    BitsView ax = above(x);
    for (int w = 0; w < words_; ++w) sa[w] = ax[w];
    sa[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    // covers of x = minimal elements of the strict up-set
    bits_for_each(sa, [&](int y) {
      BitsView by = below(static_cast<std::uint32_t>(y));
      int meetcnt = 0;
      for (int w = 0; w < words_; ++w) meetcnt += std::popcount(sa[w] & by[w]);
      if (meetcnt == 1) {
        covers_up_[x].push_back(static_cast<std::uint32_t>(y));
        covers_down_[y].push_back(x);
      }
    });
  }
  covers_built_ = true;
}

const std::vector<std::uint32_t>& CoverDag::up_covers(std::uint32_t i) const {
  ensure_covers();
  return covers_up_[i];
}

const std::vector<std::uint32_t>& CoverDag::down_covers(std::uint32_t i) const {
  ensure_covers();
  return covers_down_[i];
}

std::vector<std::uint32_t> CoverDag::join_irreducibles() const {
  ensure_covers();
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n_; ++i)
    if (covers_down_[i].size() == 1) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> CoverDag::meet_irreducibles() const {
  ensure_covers();
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n_; ++i)
    if (covers_up_[i].size() == 1) out.push_back(i);
  return out;
}

CoverDag CoverDag::dualized() const {
  // reverse the order; index i becomes n-1-i so the result stays topological
  const int w = words_;
  std::vector<std::uint64_t> rows(std::size_t(n_) * w, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint32_t ni = n_ - 1 - i;
    bits_for_each(above(i), [&](int j) {
      std::uint32_t nj = n_ - 1 - static_cast<std::uint32_t>(j);
      rows[std::size_t(ni) * w + (nj >> 6)] |= std::uint64_t{1} << (nj & 63);
    });
  }
  return CoverDag(n_, std::move(rows));
}

CoverDag product(const CoverDag& a, const CoverDag& b, std::size_t cap) {
  const std::size_t n = std::size_t(a.size()) * b.size();
  if (n > cap) fail(Errc::cap_exceeded, "product lattice exceeds cap");
  const int w = words_for_bits(static_cast<int>(n));
  std::vector<std::uint64_t> rows(n * w, 0);
  for (std::uint32_t i1 = 0; i1 < a.size(); ++i1)
    for (std::uint32_t i2 = 0; i2 < b.size(); ++i2) {
      std::uint64_t* row = rows.data() + (std::size_t(i1) * b.size() + i2) * w;
      bits_for_each(a.below(i1), [&](int j1) {
        bits_for_each(b.below(i2), [&](int j2) {
          std::size_t j = std::size_t(j1) * b.size() + static_cast<std::size_t>(j2);
          row[j >> 6] |= std::uint64_t{1} << (j & 63);
        });
      });
    }
  return CoverDag(static_cast<std::uint32_t>(n), std::move(rows));
}

// ---- isomorphism ----------------------------------------------------------------

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15u + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdu;
}

// Iterated structural colouring on the cover digraph.  Stable under
// isomorphism; used both as a quick reject and to prune the backtracking.
std::vector<std::uint64_t> refine_colors(const CoverDag& d) {
  const std::uint32_t n = d.size();
  std::vector<std::uint64_t> col(n);
  std::vector<int> height(n, 0), depth(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (auto j : d.down_covers(i)) height[i] = std::max(height[i], height[j] + 1);
  }
  for (std::uint32_t i = n; i-- > 0;) {
    for (auto j : d.up_covers(i)) depth[i] = std::max(depth[i], depth[j] + 1);
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint64_t h = 0x8899aabbccddeeffu;
    h = mix(h, d.down_covers(i).size());
    h = mix(h, d.up_covers(i).size());
    h = mix(h, static_cast<std::uint64_t>(height[i]));
    h = mix(h, static_cast<std::uint64_t>(depth[i]));
    h = mix(h, static_cast<std::uint64_t>(bits_popcount(d.below(i))));
    h = mix(h, static_cast<std::uint64_t>(bits_popcount(d.above(i))));
    col[i] = h;
  }
  std::vector<std::uint64_t> next(n);
  std::vector<std::uint64_t> buf;
  std::size_t classes = 0;
  for (int round = 0; round < 64; ++round) {
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint64_t h = col[i];
      buf.clear();
      for (auto j : d.down_covers(i)) buf.push_back(col[j]);
      std::sort(buf.begin(), buf.end());
      for (auto v : buf) h = mix(h, v);
      h = mix(h, 0x1234u);
      buf.clear();
      for (auto j : d.up_covers(i)) buf.push_back(col[j]);
      std::sort(buf.begin(), buf.end());
      for (auto v : buf) h = mix(h, v);
      next[i] = h;
    }
    col.swap(next);
    std::vector<std::uint64_t> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    std::size_t nc = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    if (nc == classes) break;
    classes = nc;
  }
  return col;
}

struct IsoState {
  const CoverDag* a;
  const CoverDag* b;
  std::vector<std::uint64_t> ca, cb;
  std::vector<int> map_ab, map_ba;
  std::vector<std::uint32_t> order;  // connected expansion, scarcest colours first
  std::uint64_t nodes = 0, node_cap = 0;

  bool feasible(std::uint32_t va, std::uint32_t vb) const {
    if (ca[va] != cb[vb]) return false;
    const auto& dc_a = a->down_covers(va);
    const auto& uc_a = a->up_covers(va);
    if (dc_a.size() != b->down_covers(vb).size()) return false;
    if (uc_a.size() != b->up_covers(vb).size()) return false;
    // mapped cover-neighbours must correspond exactly
    int mapped = 0;
    for (auto j : dc_a)
      if (map_ab[j] >= 0) {
        if (!contains(b->down_covers(vb), static_cast<std::uint32_t>(map_ab[j]))) return false;
        ++mapped;
      }
    int mapped_b = 0;
    for (auto j : b->down_covers(vb))
      if (map_ba[j] >= 0) ++mapped_b;
    if (mapped != mapped_b) return false;
    mapped = 0;
    for (auto j : uc_a)
      if (map_ab[j] >= 0) {
        if (!contains(b->up_covers(vb), static_cast<std::uint32_t>(map_ab[j]))) return false;
        ++mapped;
      }
    mapped_b = 0;
    for (auto j : b->up_covers(vb))
      if (map_ba[j] >= 0) ++mapped_b;
    return mapped == mapped_b;
  }

  static bool contains(const std::vector<std::uint32_t>& v, std::uint32_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  }

  bool search(std::size_t k) {
    if (k == order.size()) return true;
    if (++nodes > node_cap) fail(Errc::cap_exceeded, "isomorphism search exceeded node budget");
    std::uint32_t va = order[k];
    // anchor on a mapped cover-neighbour: its image confines the candidates
    int anchor_down = -1, anchor_up = -1;
    for (auto j : a->down_covers(va))
      if (map_ab[j] >= 0) {
        anchor_down = map_ab[j];
        break;
      }
    if (anchor_down < 0)
      for (auto j : a->up_covers(va))
        if (map_ab[j] >= 0) {
          anchor_up = map_ab[j];
          break;
        }
    auto try_candidate = [&](std::uint32_t vb) -> bool {
      if (map_ba[vb] >= 0 || !feasible(va, vb)) return false;
      map_ab[va] = static_cast<int>(vb);
      map_ba[vb] = static_cast<int>(va);
      if (search(k + 1)) return true;
      map_ab[va] = -1;
      map_ba[vb] = -1;
      return false;
    };
    if (anchor_down >= 0) {
      for (auto vb : b->up_covers(static_cast<std::uint32_t>(anchor_down)))
        if (try_candidate(vb)) return true;
    } else if (anchor_up >= 0) {
      for (auto vb : b->down_covers(static_cast<std::uint32_t>(anchor_up)))
        if (try_candidate(vb)) return true;
    } else {
      for (std::uint32_t vb = 0; vb < b->size(); ++vb)
        if (try_candidate(vb)) return true;
    }
    return false;
  }
};

bool iso_impl(const CoverDag& a, const CoverDag& b, std::size_t cap) {
  if (a.size() != b.size()) return false;
  if (a.size() > cap) fail(Errc::cap_exceeded, "isomorphism test exceeds element cap");
  if (a.size() == 0) return true;
  IsoState st;
  st.a = &a;
  st.b = &b;
  st.ca = refine_colors(a);
  st.cb = refine_colors(b);
  auto hist = [](std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (hist(st.ca) != hist(st.cb)) return false;
  st.map_ab.assign(a.size(), -1);
  st.map_ba.assign(b.size(), -1);
  std::unordered_map<std::uint64_t, std::uint32_t> class_size;
  for (auto c : st.ca) ++class_size[c];

  // order: greedy connected expansion over the cover graph, preferring
  // vertices with many ordered neighbours, then scarce colours
  const std::uint32_t n = a.size();
  std::vector<int> placed_neighbors(n, 0);
  std::vector<char> in_order(n, 0);
  st.order.reserve(n);
  for (std::uint32_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (in_order[v]) continue;
      if (best < 0) {
        best = static_cast<int>(v);
        continue;
      }
      auto key = [&](std::uint32_t x) {
        return std::tuple(-placed_neighbors[x], class_size[st.ca[x]], x);
      };
      if (key(v) < key(static_cast<std::uint32_t>(best))) best = static_cast<int>(v);
    }
    std::uint32_t v = static_cast<std::uint32_t>(best);
    in_order[v] = 1;
    st.order.push_back(v);
    for (auto j : a.down_covers(v)) ++placed_neighbors[j];
    for (auto j : a.up_covers(v)) ++placed_neighbors[j];
  }
  st.node_cap = std::uint64_t{4'000'000} + std::uint64_t{2'000} * a.size();
  return st.search(0);
}

}  // namespace

bool is_isomorphic(const CoverDag& a, const CoverDag& b, std::size_t cap) {
  return iso_impl(a, b, cap);
}

bool is_dually_isomorphic(const CoverDag& a, const CoverDag& b, std::size_t cap) {
  return iso_impl(a, b.dualized(), cap);
}

// ---- SetLattice -------------------------------------------------------------------

SetLattice::SetLattice(const TransRel& env, std::vector<PairBits> elems, MeetRule mr)
    : env_(&env), elems_(std::move(elems)), meet_rule_(mr) {
  std::sort(elems_.begin(), elems_.end(),
            [](const PairBits& x, const PairBits& y) { return bits_compare(x, y) < 0; });
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  index_.reserve(elems_.size() * 2);
  for (std::uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
  if (elems_.empty() || !bits_empty(elems_.front()))
    fail(Errc::internal, "element table must contain the empty set");
}

std::optional<std::uint32_t> SetLattice::find(const PairBits& bits) const {
  auto it = index_.find(bits);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t SetLattice::index_of(const PairBits& bits) const {
  auto r = find(bits);
  if (!r) fail(Errc::internal, "element not present in the lattice table");
  return *r;
}

std::uint32_t SetLattice::join(std::uint32_t i, std::uint32_t j) const {
  PairBits u = elems_[i];
  const PairBits& y = elems_[j];
  for (std::size_t w = 0; w < u.size(); ++w) u[w] |= y[w];
  PairBits out;
  std::vector<Mask> scratch;
  tcl_bits(*env_, u, out, scratch);
  return index_of(out);
}

std::uint32_t SetLattice::meet(std::uint32_t i, std::uint32_t j) const {
  if (meet_rule_ == MeetRule::formula) {
    PairBits u = elems_[i];
    const PairBits& y = elems_[j];
    for (std::size_t w = 0; w < u.size(); ++w) u[w] &= y[w];
    PairBits t, out;
    std::vector<Mask> scratch;
    tin_bits(*env_, u, t, scratch);
    tcl_bits(*env_, t, out, scratch);
    return index_of(out);
  }
  int g = dag().glb(i, j);
  if (g < 0) fail(Errc::internal, "order meet does not exist");
  return static_cast<std::uint32_t>(g);
}

std::uint32_t SetLattice::orth(std::uint32_t i) const {
  PairBits c = env_->full_bits();
  const PairBits& x = elems_[i];
  for (std::size_t w = 0; w < c.size(); ++w) c[w] &= ~x[w];
  PairBits out;
  std::vector<Mask> scratch;
  tcl_bits(*env_, c, out, scratch);
  return index_of(out);
}

const CoverDag& SetLattice::dag() const {
  if (!dag_) {
    const std::uint32_t n = size();
    const int w = words_for_bits(static_cast<int>(n));
    std::vector<std::uint64_t> rows(std::size_t(n) * w, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint64_t* row = rows.data() + std::size_t(i) * w;
      for (std::uint32_t j = 0; j <= i; ++j)
        if (bits_subset(elems_[j], elems_[i])) row[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
    dag_.emplace(n, std::move(rows));
  }
  return *dag_;
}

// ---- construction -------------------------------------------------------------------

SetLattice join_closure(const TransRel& e, const std::vector<PairBits>& generators,
                        std::size_t cap, MeetRule mr) {
  std::unordered_map<PairBits, std::uint32_t, PairBitsHash> seen;
  std::vector<PairBits> elems;
  auto push = [&](PairBits b) {
    if (seen.emplace(b, static_cast<std::uint32_t>(elems.size())).second) {
      elems.push_back(std::move(b));
      if (elems.size() > cap) fail(Errc::cap_exceeded, "lattice closure exceeds the element cap");
    }
  };
  push(e.empty_bits());
  std::vector<Mask> scratch;
  PairBits closed;
  for (const auto& g : generators) {
    tcl_bits(e, g, closed, scratch);
    if (!bits_equal(closed, g)) fail(Errc::internal, "join closure generators must be closed sets");
    push(g);
  }
  PairBits tmp(e.words());
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      const PairBits& x = elems[head];
      for (int w = 0; w < e.words(); ++w) tmp[w] = x[w] | g[w];
      tcl_bits(e, tmp, closed, scratch);
      if (seen.find(closed) == seen.end()) push(closed);
    }
  }
  return SetLattice(e, std::move(elems), mr);
}

SetLattice build_reg(const TransRel& e, const std::vector<JirrElement>& jirr, std::size_t cap) {
  std::vector<PairBits> gens;
  gens.reserve(jirr.size());
  for (const auto& j : jirr) gens.push_back(j.p);
  return join_closure(e, gens, cap, MeetRule::formula);
}

SetLattice build_reg(const TransRel& e, std::size_t cap, RegMethod method) {
  if (method == RegMethod::exhaustive) {
    const int m = e.pair_count();
    if (m > 20) fail(Errc::cap_exceeded, "exhaustive Reg scan limited to 20 pairs");
    std::vector<PairBits> elems;
    std::vector<Mask> scratch;
    PairBits t, back;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
      PairBits a(e.words(), 0);
      if (e.words() > 0) a[0] = s;
      tin_bits(e, a, t, scratch);
      tcl_bits(e, t, back, scratch);
      if (bits_equal(back, a)) elems.push_back(a);
    }
    return SetLattice(e, std::move(elems), MeetRule::formula);
  }
  return build_reg(e, enumerate_jirr(e, cap), cap);
}

ClopView build_clop(const TransRel& e, const SetLattice& reg) {
  std::vector<char> flags = clopen_flags(e, reg);
  std::vector<PairBits> elems;
  for (std::uint32_t i = 0; i < reg.size(); ++i)
    if (flags[i]) elems.push_back(PairBits(reg.elem(i).begin(), reg.elem(i).end()));
  ClopView cv{SetLattice(e, std::move(elems), MeetRule::order), false, false};
  cv.equals_reg = cv.poset.size() == reg.size();
  cv.lattice = cv.poset.dag().is_lattice();
  return cv;
}

std::vector<char> clopen_flags(const TransRel& e, const SetLattice& lat) {
  std::vector<char> flags(lat.size(), 0);
  std::vector<Mask> scratch;
  PairBits comp(e.words());
  const PairBits& full = e.full_bits();
  for (std::uint32_t i = 0; i < lat.size(); ++i) {
    BitsView x = lat.elem(i);
    for (int w = 0; w < e.words(); ++w) comp[w] = full[w] & ~x[w];
    flags[i] = bits_closed(e, x, scratch) && bits_closed(e, comp, scratch);
  }
  return flags;
}

BuiltReg build_reg_owned(Relation r, std::size_t cap) {
  auto env = std::make_unique<TransRel>(std::move(r));
  auto jirr = enumerate_jirr(*env, cap);
  SetLattice reg = build_reg(*env, jirr, cap);
  return BuiltReg{std::move(env), std::move(jirr), std::move(reg)};
}

// ---- verification ---------------------------------------------------------------------

CheckReport verify_ortholattice(const SetLattice& reg) {
  CheckReport rep;
  const std::uint32_t n = reg.size();
  std::vector<std::uint32_t> o(n);
  for (std::uint32_t i = 0; i < n; ++i) o[i] = reg.orth(i);
  auto fail_at = [&](const std::string& what) {
    rep.pass = false;
    rep.failure = what;
  };
  for (std::uint32_t i = 0; i < n && rep.pass; ++i) {
    if (o[o[i]] != i) fail_at("O2 fails at element " + std::to_string(i));
  }
  const CoverDag& d = reg.dag();
  for (std::uint32_t i = 0; i < n && rep.pass; ++i) {
    bits_for_each(d.above(i), [&](int j) {
      // i <= j must flip: orth(j) <= orth(i), and conversely
      if (rep.pass && !d.leq(o[j], o[i])) fail_at("O1 fails on pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    });
  }
  for (std::uint32_t i = 0; i < n && rep.pass; ++i) {
    if (reg.meet(i, o[i]) != reg.bottom()) fail_at("O3 meet fails at " + std::to_string(i));
    else if (reg.join(i, o[i]) != reg.top()) fail_at("O3 join fails at " + std::to_string(i));
  }
  for (std::uint32_t i = 0; i < n && rep.pass; ++i)
    for (std::uint32_t j = i; j < n && rep.pass; ++j) {
      if (o[reg.join(i, j)] != reg.meet(o[i], o[j]))
        fail_at("de Morgan (join) fails on (" + std::to_string(i) + "," + std::to_string(j) + ")");
      else if (o[reg.meet(i, j)] != reg.join(o[i], o[j]))
        fail_at("de Morgan (meet) fails on (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return rep;
}

CheckReport verify_macneille(const TransRel& e, const SetLattice& reg,
                             const std::vector<JirrElement>& jirr) {
  CheckReport rep;
  std::vector<char> clop = clopen_flags(e, reg);
  std::vector<Mask> scratch;
  PairBits acc(e.words()), t, out;
  for (std::uint32_t i = 0; i < reg.size(); ++i) {
    BitsView x = reg.elem(i);
    // join of clopen elements below
    std::fill(acc.begin(), acc.end(), 0);
    for (std::uint32_t j = 0; j < reg.size(); ++j)
      if (clop[j] && bits_subset(reg.elem(j), x))
        for (int w = 0; w < e.words(); ++w) acc[w] |= reg.elem(j)[w];
    tcl_bits(e, acc, out, scratch);
    if (!bits_equal(out, x)) {
      rep.pass = false;
      rep.failure = "element " + std::to_string(i) + " is not a join of clopen sets below it";
      return rep;
    }
    // meet of clopen elements above
    acc = e.full_bits();
    for (std::uint32_t j = 0; j < reg.size(); ++j)
      if (clop[j] && bits_subset(x, reg.elem(j)))
        for (int w = 0; w < e.words(); ++w) acc[w] &= reg.elem(j)[w];
    tin_bits(e, acc, t, scratch);
    tcl_bits(e, t, out, scratch);
    if (!bits_equal(out, x)) {
      rep.pass = false;
      rep.failure = "element " + std::to_string(i) + " is not a meet of clopen sets above it";
      return rep;
    }
    // spatiality over the enumerated join-irreducibles
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& ji : jirr)
      if (bits_subset(ji.p, x))
        for (int w = 0; w < e.words(); ++w) acc[w] |= ji.p[w];
    tcl_bits(e, acc, out, scratch);
    if (!bits_equal(out, x)) {
      rep.pass = false;
      rep.failure = "element " + std::to_string(i) + " is not the join of join-irreducibles below it";
      return rep;
    }
  }
  for (const auto& ji : jirr) {
    auto idx = reg.find(ji.p);
    if (!idx || !clop[*idx]) {
      rep.pass = false;
      rep.failure = "a join-irreducible element is missing or not clopen";
      return rep;
    }
  }
  return rep;
}

}  // namespace reglat
