#include "reglat/bip.hpp"

#include <algorithm>

namespace reglat {

Bip build_bip(int n, std::size_t cap) {
  if (n < 1 || n > kMaxGround) fail(Errc::bad_spec, "bipartition ground size out of range");
  if (cap == 0) {
    if (n > 6) fail(Errc::cap_exceeded, "Bip(n) for n > 6 needs an explicit cap");
    cap = 2'000'000;
  }
  auto env = std::make_unique<TransRel>(make_full(n));
  auto jirr = enumerate_jirr(*env, cap);
  SetLattice lat = build_reg(*env, jirr, cap);
  return Bip{std::move(env), std::move(jirr), std::move(lat)};
}

BigUint wagner(int n) {
  if (n < 0) fail(Errc::bad_spec, "wagner index must be nonnegative");
  // Pascal triangle rows fit in uint64 for every n within the ground cap.
  std::vector<std::vector<std::uint64_t>> binom(n + 1);
  for (int i = 0; i <= n; ++i) {
    binom[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  std::vector<BigUint> m(n + 1);
  m[0] = BigUint(1);
  for (int i = 1; i <= n; ++i) {
    BigUint sum;
    for (int k = 1; k <= i; ++k) {
      BigUint term = m[i - k];
      term.mul_u64(binom[i][k]);
      sum += term;
    }
    sum.mul_u64(2);
    m[i] = sum;
  }
  return m[n];
}

std::vector<BipJirr> bip_jirr_closed_form(int n) {
  std::vector<BipJirr> out;
  const Mask all = full_mask(n);
  for (Mask u = 1; u < all; ++u) out.push_back(BipJirr{true, 0, u});  // U ∈ Pow*[n]
  for (int a = 0; a < n; ++a) {
    Mask free = all & ~bit(a);
    Mask sub = 0;
    while (true) {
      out.push_back(BipJirr{false, a, sub});
      if (sub == free) break;
      sub = (sub - free) & free;
    }
  }
  return out;
}

PairBits bip_jirr_bits(const TransRel& env, const BipJirr& j) {
  const int n = env.ground_size();
  PairBits out = env.empty_bits();
  auto rect = [&](Mask xs, Mask ys) {
    for (Mask t = xs; t; t &= t - 1) {
      int i = lowest_bit(t);
      for (Mask s = ys; s; s &= s - 1) bits_set(out, env.pair_index(i, lowest_bit(s)));
    }
  };
  if (j.bipartite) {
    rect(full_mask(n) & ~j.u, j.u);
  } else {
    Mask ueff = j.u | bit(j.a);
    rect((full_mask(n) & ~ueff) | bit(j.a), ueff);
  }
  return out;
}

Mask isolated_points(const TransRel& env, BitsView x) {
  const int n = env.ground_size();
  std::vector<Mask> rows(n, 0), cols(n, 0);
  bits_for_each(x, [&](int idx) {
    auto [i, j] = env.pair_at(idx);
    rows[i] |= bit(j);
    cols[j] |= bit(i);
  });
  Mask iso = 0;
  for (int a = 0; a < n; ++a)
    if ((rows[a] & cols[a]) == bit(a)) iso |= bit(a);
  return iso;
}

bool member_k(const TransRel& env, BitsView x) { return isolated_points(env, x) == 0; }

bool member_s(const TransRel& env, int a, Mask u, BitsView x) {
  u &= ~bit(a);
  Mask iso = isolated_points(env, x);
  if (iso & ~bit(a)) return false;
  if (iso != bit(a)) return true;
  // Uᶜ × {a} and {a} × U must sit inside x
  const Mask all = full_mask(env.ground_size());
  for (Mask t = all & ~u & ~bit(a); t; t &= t - 1)
    if (!bits_get(x, env.pair_index(lowest_bit(t), a))) return false;
  for (Mask t = u; t; t &= t - 1)
    if (!bits_get(x, env.pair_index(a, lowest_bit(t)))) return false;
  return true;
}

SetLattice s_lattice(const Bip& b, int a, Mask u, std::size_t cap) {
  const TransRel& env = *b.env;
  const int n = env.ground_size();
  if (a < 0 || a >= n) fail(Errc::bad_index, "clepsydra apex out of range");
  u &= full_mask(n) & ~bit(a);
  std::vector<PairBits> gens;
  for (Mask v = 1; v < full_mask(n); ++v) gens.push_back(bip_jirr_bits(env, BipJirr{true, 0, v}));
  gens.push_back(bip_jirr_bits(env, BipJirr{false, a, u}));
  SetLattice closure = join_closure(env, gens, cap, MeetRule::order);

  std::vector<PairBits> filtered;
  for (std::uint32_t i = 0; i < b.lat.size(); ++i)
    if (member_s(env, a, u, b.lat.elem(i)))
      filtered.push_back(PairBits(b.lat.elem(i).begin(), b.lat.elem(i).end()));
  if (filtered.size() != closure.size())
    fail(Errc::construction_mismatch, "generator closure and membership filter disagree in size");
  for (std::uint32_t i = 0; i < closure.size(); ++i)
    if (!bits_equal(closure.elem(i), filtered[i]))
      fail(Errc::construction_mismatch, "generator closure and membership filter disagree");
  return closure;
}

bool bip_d_closed_form(int n, const BipJirr& p, const BipJirr& q) {
  if (p == q) return false;
  if (!q.bipartite) return false;          // nothing depends on a clepsydra
  if (!p.bipartite) return true;           // clepsydra → bipartite always
  const Mask all = full_mask(n);
  Mask u = p.u, v = q.u;
  const bool partition = (u & v) == 0 && (u | v) == all;
  const bool unbalanced = partition && (popcount(u) == 1 || popcount(v) == 1);
  return !unbalanced;
}

ConShape con_bip_shape(const Bip& b) {
  ConShape cs;
  const int n = b.env->ground_size();
  if (n < 3) {
    cs.applicable = false;
    cs.note = "NOT_APPLICABLE: the Boolean-plus-top description starts at n = 3";
    return cs;
  }
  cs.applicable = true;
  const int expected_atoms = n << (n - 1);
  DepGraph dg = dep_graph(*b.env, b.jirr);
  cs.dp_count = count_down_sets(dg.class_poset());

  // shape: every clepsydra is a singleton minimal class, all bipartite
  // join-irreducibles form the single top class
  bool ok = dg.nc == expected_atoms + 1;
  int clep_classes = 0;
  int top_class = dg.nc - 1;
  if (ok) {
    for (int c = 0; c < dg.nc; ++c) {
      const auto& members = dg.class_members[c];
      bool all_clep = true;
      for (int p : members) all_clep = all_clep && b.jirr[p].clepsydra;
      if (all_clep && members.size() == 1) {
        ++clep_classes;
      } else {
        // must be the unique class of all bipartite join-irreducibles
        if (c != top_class || all_clep) ok = false;
        for (int p : members) ok = ok && !b.jirr[p].clepsydra;
      }
    }
    ok = ok && clep_classes == expected_atoms;
    // atoms pairwise incomparable and all strictly below the top class
    CoverDag poset = dg.class_poset();
    for (int c = 0; c < dg.nc - 1 && ok; ++c) {
      ok = bits_popcount(poset.below(c)) == 1;  // minimal
      ok = ok && poset.leq(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(top_class));
    }
    ok = ok && bits_popcount(poset.below(top_class)) == dg.nc;
  }
  cs.shape_ok = ok;
  cs.atom_count = expected_atoms;
  if (ok) {
    BigUint c(1);
    for (int i = 0; i < expected_atoms; ++i) c.mul_u64(2);
    c += BigUint(1);
    cs.congruence_count = c;
    if (cs.dp_count && BigUint(*cs.dp_count) != cs.congruence_count)
      fail(Errc::internal, "down-set count disagrees with the verified congruence shape");
  }
  return cs;
}

namespace {

// flat sorted list of element encodings, for cheap set comparison
std::vector<PairBits> flat_elements(const SetLattice& l) {
  std::vector<PairBits> out;
  out.reserve(l.size());
  for (std::uint32_t i = 0; i < l.size(); ++i) out.push_back(PairBits(l.elem(i).begin(), l.elem(i).end()));
  return out;
}

PairBits opposite_bits(const TransRel& env, BitsView x) {
  PairBits out = env.empty_bits();
  bits_for_each(x, [&](int idx) {
    auto [i, j] = env.pair_at(idx);
    bits_set(out, env.pair_index(j, i));
  });
  return out;
}

}  // namespace

FactorCensus factor_census(const Bip& b, std::size_t iso_cap, std::size_t cap) {
  FactorCensus fc;
  const TransRel& env = *b.env;
  const int n = env.ground_size();
  fc.n = n;
  fc.sizes_depend_only_on_card = true;
  fc.opposite_map_ok = true;

  std::vector<std::size_t> size_by_card(n, 0);
  std::vector<int> count_by_card(n, 0);
  auto record = [&](Mask u, std::size_t card_of_lattice) {
    const int c = popcount(u);
    if (size_by_card[c] == 0) size_by_card[c] = card_of_lattice;
    if (size_by_card[c] != card_of_lattice) fc.sizes_depend_only_on_card = false;
    ++count_by_card[c];
  };
  auto sorted_op = [&](const std::vector<PairBits>& elems) {
    std::vector<PairBits> mapped;
    mapped.reserve(elems.size());
    for (const auto& x : elems) mapped.push_back(opposite_bits(env, x));
    std::sort(mapped.begin(), mapped.end(),
              [](const PairBits& x, const PairBits& y) { return bits_compare(x, y) < 0; });
    return mapped;
  };

  // visit each complementary pair {U, free ∖ U} once per apex
  const Mask all = full_mask(n);
  for (int a = 0; a < n; ++a) {
    Mask free = all & ~bit(a);
    Mask sub = 0;
    while (true) {
      Mask comp = free & ~sub;
      if (sub <= comp) {
        SetLattice s1 = s_lattice(b, a, sub, cap);
        record(sub, s1.size());
        auto f1 = flat_elements(s1);
        if (comp != sub) {
          SetLattice s2 = s_lattice(b, a, comp, cap);
          record(comp, s2.size());
          if (sorted_op(f1) != flat_elements(s2)) fc.opposite_map_ok = false;
        } else if (sorted_op(f1) != f1) {
          fc.opposite_map_ok = false;
        }
      }
      if (sub == free) break;
      sub = (sub - free) & free;
    }
  }

  // canonical representatives S(n,k) = S(n, ⟨1, {2..k+1}⟩), for grouping
  std::vector<SetLattice> rep;
  rep.reserve(n);
  for (int k = 0; k < n; ++k) {
    Mask u = 0;
    for (int i = 1; i <= k; ++i) u |= bit(i);
    rep.push_back(s_lattice(b, 0, u, cap));
  }

  for (int k = 0; 2 * k < n; ++k) {
    FactorClass c;
    c.k = k;
    c.cardinality = size_by_card[k];
    c.instances = count_by_card[k] + (k == n - 1 - k ? 0 : count_by_card[n - 1 - k]);
    if (size_by_card[k] != size_by_card[n - 1 - k]) fc.sizes_depend_only_on_card = false;
    if (rep[k].size() <= iso_cap) {
      c.iso_checked = true;
      c.self_dual = is_dually_isomorphic(rep[k].dag(), rep[k].dag(), iso_cap);
      c.iso_to_complement = (k == n - 1 - k) || is_isomorphic(rep[k].dag(), rep[n - 1 - k].dag(), iso_cap);
    }
    fc.classes.push_back(c);
  }
  return fc;
}

}  // namespace reglat
