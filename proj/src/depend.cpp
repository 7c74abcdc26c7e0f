#include "reglat/depend.hpp"

#include <algorithm>
#include <unordered_map>

namespace reglat {

bool arrow_up(const JirrElement& p, const JirrElement& q) {
  return bits_intersect(p.p, q.p) && !bits_intersect(p.p, q.p_star);
}

bool arrow_down(const JirrElement& q, const JirrElement& r) {
  return bits_intersect(q.p, r.p) && !bits_intersect(q.p_star, r.p);
}

bool arrow_up_closed_form(const TransRel& e, const JirrTriple& tp, const JirrTriple& tq) {
  validate_triple(e, tp);
  validate_triple(e, tq);
  const bool p_clep = tp.clepsydra(), q_clep = tq.clepsydra();

  if (q_clep) {
    // target clepsydra forces a = b = c = d with near-disjoint U, V
    if (!p_clep || tp.a != tq.a) return false;
    Mask cc = interval_cc(e, tp.a, tp.a);
    Mask uc = cc & ~tp.u & ~bit(tp.a);
    Mask vc = cc & ~tq.u & ~bit(tq.a);
    return (tp.u & tq.u) == 0 && (uc & vc) == 0;
  }
  if (p_clep) {
    // a = b, c ≠ d: a ≡ c ≡ d, ({a} ∪ U) ∩ V ≠ ∅, ({a} ∪ Uᶜ) ∩ Vᶜ ≠ ∅
    if (!e.equiv(tp.a, tq.a) || !e.equiv(tp.a, tq.b)) return false;
    Mask cc_a = interval_cc(e, tp.a, tp.a);
    Mask vset = tq.u;
    Mask vc = interval_cc(e, tq.a, tq.b) & ~tq.u;
    Mask u_eff = tp.u | bit(tp.a);
    Mask uc_eff = cc_a & ~tp.u;  // {a} ∪ Uᶜ; a survives since a ∉ stored U
    return (u_eff & vset) != 0 && (uc_eff & vc) != 0;
  }
  // both bipartite: ⟦c,d⟧ ⊆ ⟦a,b⟧ and ∅ ≠ e ∩ ((Uᶜ∩Vᶜ) × (U∩V)) ⊆ ⟦c⟧ × ⟦d⟧
  Mask cc_p = interval_cc(e, tp.a, tp.b);
  Mask cc_q = interval_cc(e, tq.a, tq.b);
  if (cc_q & ~cc_p) return false;
  Mask x = (cc_p & ~tp.u) & (cc_q & ~tq.u);
  Mask y = tp.u & tq.u;
  Mask cls_c = e.equiv_class(tq.a), cls_d = e.equiv_class(tq.b);
  bool nonempty = false;
  for (Mask t = x; t; t &= t - 1) {
    int i = lowest_bit(t);
    Mask row = e.lt_row(i) & y;
    if (!row) continue;
    nonempty = true;
    if (!has(cls_c, i) || (row & ~cls_d)) return false;
  }
  return nonempty;
}

bool join_dependency(const TransRel& e, const std::vector<JirrElement>& jirr,
                     std::size_t ip, std::size_t iq) {
  (void)e;
  if (ip == iq) return false;
  const JirrElement& p = jirr[ip];
  const JirrElement& q = jirr[iq];
  for (const auto& r : jirr)
    if (arrow_up(p, r) && arrow_down(q, r)) return true;
  return false;
}

Mask res_set(const TransRel& e, Mask u, int c, int d) {
  return (u & interval_oc(e, c, d)) | bit(d);
}

bool d_char_antisym(const TransRel& e, const JirrTriple& t0, const JirrTriple& t1) {
  if (!e.is_antisymmetric()) fail(Errc::not_antisymmetric, "characterisation needs an antisymmetric relation");
  if (t0.clepsydra() || t1.clepsydra()) fail(Errc::not_bipartite, "characterisation applies to bipartite triples");
  validate_triple(e, t0);
  validate_triple(e, t1);
  Mask cc0 = interval_cc(e, t0.a, t0.b);
  Mask cc1 = interval_cc(e, t1.a, t1.b);
  bool proper = (cc1 & ~cc0) == 0 && cc1 != cc0;
  // a reflexive pair at a1 puts a1 into ⦗a1,b1⟧; the residual is compared
  // modulo that forced endpoint, which bipartite triples exclude from U
  return proper && t1.u == (res_set(e, t0.u, t1.a, t1.b) & ~bit(t1.a));
}

// ---- DepGraph -------------------------------------------------------------

DepGraph dep_graph(const TransRel& e, const std::vector<JirrElement>& jirr) {
  (void)e;
  DepGraph g;
  g.nj = static_cast<int>(jirr.size());
  g.words = words_for_bits(g.nj);
  const int w = g.words;
  // up[p] = { r : p ↗ orth(r) },  down[q] = { r : orth(r) ↘ q }
  std::vector<std::uint64_t> up(std::size_t(g.nj) * w, 0), down(std::size_t(g.nj) * w, 0);
  for (int p = 0; p < g.nj; ++p)
    for (int r = 0; r < g.nj; ++r) {
      if (arrow_up(jirr[p], jirr[r])) up[std::size_t(p) * w + (r >> 6)] |= std::uint64_t{1} << (r & 63);
      if (arrow_down(jirr[p], jirr[r])) down[std::size_t(p) * w + (r >> 6)] |= std::uint64_t{1} << (r & 63);
    }
  g.d.assign(std::size_t(g.nj) * w, 0);
  for (int p = 0; p < g.nj; ++p)
    for (int q = 0; q < g.nj; ++q) {
      if (p == q) continue;
      const std::uint64_t* a = up.data() + std::size_t(p) * w;
      const std::uint64_t* b = down.data() + std::size_t(q) * w;
      for (int k = 0; k < w; ++k)
        if (a[k] & b[k]) {
          g.d[std::size_t(p) * w + (q >> 6)] |= std::uint64_t{1} << (q & 63);
          break;
        }
    }
  // reflexive-transitive closure
  g.dstar = g.d;
  for (int p = 0; p < g.nj; ++p) g.dstar[std::size_t(p) * w + (p >> 6)] |= std::uint64_t{1} << (p & 63);
  for (int k = 0; k < g.nj; ++k)
    for (int i = 0; i < g.nj; ++i)
      if (bits_get(g.dstar_row(i), k)) {
        std::uint64_t* ri = g.dstar.data() + std::size_t(i) * w;
        const std::uint64_t* rk = g.dstar.data() + std::size_t(k) * w;
        for (int t = 0; t < w; ++t) ri[t] |= rk[t];
      }
  // mutual-reachability classes, then a topological numbering: order class
  // representatives by (|reach|, smallest member) descending reach so that
  // smaller ids never reach strictly bigger ones... simpler: assign ids by
  // repeatedly extracting classes with no unassigned class strictly below.
  std::vector<int> raw_class(g.nj, -1);
  std::vector<std::vector<int>> raw_members;
  for (int p = 0; p < g.nj; ++p) {
    if (raw_class[p] >= 0) continue;
    int id = static_cast<int>(raw_members.size());
    raw_members.emplace_back();
    for (int q = p; q < g.nj; ++q)
      if (raw_class[q] < 0 && g.reaches(p, q) && g.reaches(q, p)) {
        raw_class[q] = id;
        raw_members.back().push_back(q);
      }
  }
  const int nc = static_cast<int>(raw_members.size());
  // raw class order: rc ≤ rc' iff members reach (class(p) ≤ class(q) iff p D* q)
  std::vector<std::vector<char>> raw_leq(nc, std::vector<char>(nc, 0));
  for (int c = 0; c < nc; ++c)
    for (int c2 = 0; c2 < nc; ++c2)
      raw_leq[c][c2] = g.reaches(raw_members[c].front(), raw_members[c2].front());
  std::vector<int> order;  // raw ids in topological order (below first)
  std::vector<char> used(nc, 0);
  while (static_cast<int>(order.size()) < nc) {
    for (int c = 0; c < nc; ++c) {
      if (used[c]) continue;
      bool minimal = true;
      for (int c2 = 0; c2 < nc && minimal; ++c2)
        if (!used[c2] && c2 != c && raw_leq[c2][c] && !raw_leq[c][c2]) minimal = false;
      if (minimal) {
        used[c] = 1;
        order.push_back(c);
        break;
      }
    }
  }
  std::vector<int> new_id(nc);
  for (int i = 0; i < nc; ++i) new_id[order[i]] = i;
  g.nc = nc;
  g.class_of.assign(g.nj, 0);
  g.class_members.assign(nc, {});
  for (int p = 0; p < g.nj; ++p) {
    g.class_of[p] = new_id[raw_class[p]];
    g.class_members[g.class_of[p]].push_back(p);
  }
  const int cw = words_for_bits(nc);
  g.class_below.assign(std::size_t(nc) * cw, 0);
  for (int c = 0; c < nc; ++c)
    for (int c2 = 0; c2 < nc; ++c2)
      if (raw_leq[order[c2]][order[c]])
        g.class_below[std::size_t(c) * cw + (c2 >> 6)] |= std::uint64_t{1} << (c2 & 63);
  for (int c = 0; c < nc; ++c) {
    bool minimal = true;
    BitsView row{g.class_below.data() + std::size_t(c) * cw, static_cast<std::size_t>(cw)};
    if (bits_popcount(row) != 1) minimal = false;
    if (minimal) g.minimal_classes.push_back(c);
  }
  return g;
}

bool DepGraph::cycle_free() const {
  for (int p = 0; p < nj; ++p)
    if (d_edge(p, p)) return false;
  for (const auto& m : class_members)
    if (m.size() > 1) return false;
  return true;
}

bool DepGraph::transitive_d() const {
  for (int p = 0; p < nj; ++p)
    for (int q = 0; q < nj; ++q) {
      if (!d_edge(p, q)) continue;
      BitsView rq = d_row(q);
      BitsView rp = d_row(p);
      for (int w2 = 0; w2 < words; ++w2) {
        std::uint64_t extra = rq[w2] & ~rp[w2];
        if (w2 == (p >> 6)) extra &= ~(std::uint64_t{1} << (p & 63));  // p D q D p closes to the (excluded) diagonal
        if (extra) return false;
      }
    }
  return true;
}

CoverDag DepGraph::class_poset() const {
  return CoverDag(static_cast<std::uint32_t>(nc), class_below);
}

std::optional<std::uint64_t> count_down_sets(const CoverDag& poset, int cap) {
  const int n = static_cast<int>(poset.size());
  if (n > cap || n > 32) return std::nullopt;
  std::vector<std::uint32_t> below(n, 0), above(n, 0);
  for (int i = 0; i < n; ++i) {
    bits_for_each(poset.below(static_cast<std::uint32_t>(i)),
                  [&](int j) { below[i] |= std::uint32_t{1} << j; });
    bits_for_each(poset.above(static_cast<std::uint32_t>(i)),
                  [&](int j) { above[i] |= std::uint32_t{1} << j; });
  }
  std::unordered_map<std::uint32_t, std::uint64_t> memo;
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  auto rec = [&](auto&& self, std::uint32_t avail) -> std::uint64_t {
    if (!avail) return 1;
    auto it = memo.find(avail);
    if (it != memo.end()) return it->second;
    // pick a minimal element of the restriction
    int m = -1;
    for (std::uint32_t t = avail; t; t &= t - 1) {
      int c = std::countr_zero(t);
      if ((below[c] & avail & ~(std::uint32_t{1} << c)) == 0) {
        m = c;
        break;
      }
    }
    // down-sets containing m  +  down-sets avoiding (hence avoiding ↑m)
    std::uint64_t r = self(self, avail & ~(std::uint32_t{1} << m)) + self(self, avail & ~above[m]);
    memo.emplace(avail, r);
    return r;
  };
  return rec(rec, all);
}

SetLattice theta_quotient(const TransRel& e, const std::vector<JirrElement>& jirr,
                          const DepGraph& dg, const std::vector<int>& s_members,
                          std::size_t cap) {
  std::vector<char> in_s(jirr.size(), 0);
  for (int p : s_members) in_s[p] = 1;
  for (int p : s_members) {
    bool bad = false;
    bits_for_each(dg.d_row(p), [&](int q) {
      if (!in_s[q]) bad = true;
    });
    if (bad) fail(Errc::not_d_upper, "S is not closed under the join-dependency relation");
  }
  std::vector<PairBits> gens;
  gens.reserve(s_members.size());
  for (int p : s_members) gens.push_back(jirr[p].p);
  return join_closure(e, gens, cap, MeetRule::order);
}

CongruenceSummary congruence_summary(const TransRel& e, const SetLattice& reg,
                                     const std::vector<JirrElement>& jirr,
                                     int class_cap, std::size_t cap) {
  CongruenceSummary cs;
  cs.dep = dep_graph(e, jirr);
  cs.delta_classes = cs.dep.minimal_classes;

  if (auto n = count_down_sets(cs.dep.class_poset(), class_cap)) {
    cs.count_exact = true;
    cs.congruence_count = *n;
  }

  for (int c : cs.delta_classes) {
    int rep = cs.dep.class_members[c].front();
    std::vector<int> s;
    bits_for_each(cs.dep.dstar_row(rep), [&](int q) { s.push_back(q); });
    cs.factors.push_back(theta_quotient(e, jirr, cs.dep, s, cap));
    cs.factor_sizes.push_back(cs.factors.back().size());
  }

  // subdirectness: the tuple of factor projections separates elements
  std::vector<Mask> scratch;
  PairBits acc(e.words()), out;
  auto projections = [&](std::uint32_t x) {
    std::vector<std::uint32_t> tuple;
    tuple.reserve(cs.delta_classes.size());
    std::size_t fi = 0;
    for (int c : cs.delta_classes) {
      int rep = cs.dep.class_members[c].front();
      std::fill(acc.begin(), acc.end(), 0);
      bits_for_each(cs.dep.dstar_row(rep), [&](int q) {
        if (bits_subset(jirr[q].p, reg.elem(x)))
          for (int w = 0; w < e.words(); ++w) acc[w] |= jirr[q].p[w];
      });
      tcl_bits(e, acc, out, scratch);
      tuple.push_back(cs.factors[fi].index_of(out));
      ++fi;
    }
    return tuple;
  };
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
  cs.subdirect_injective = true;
  std::vector<std::vector<std::uint32_t>> seen_tuples(reg.size());
  for (std::uint32_t x = 0; x < reg.size() && cs.subdirect_injective; ++x) {
    seen_tuples[x] = projections(x);
    std::uint64_t h = 0x321fe9u;
    for (auto v : seen_tuples[x]) h = (h ^ (v + 0x9e3779b9u)) * 0x100000001b3u;
    auto& bucket = buckets[h];
    for (auto y : bucket)
      if (seen_tuples[y] == seen_tuples[x]) cs.subdirect_injective = false;
    bucket.push_back(x);
  }
  return cs;
}

}  // namespace reglat
