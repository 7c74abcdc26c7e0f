#include "reglat/jirr.hpp"

#include <algorithm>
#include <unordered_map>

namespace reglat {

bool triple_less(const JirrTriple& s, const JirrTriple& t) {
  if (s.a != t.a) return s.a < t.a;
  if (s.b != t.b) return s.b < t.b;
  // U compared as ascending element lists; for masks that is numeric order
  // only up to the shared prefix, so compare from the low end.
  Mask x = s.u, y = t.u;
  while (x && y) {
    int i = lowest_bit(x), j = lowest_bit(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

void validate_triple(const TransRel& e, const JirrTriple& t) {
  const int n = e.ground_size();
  if (t.a < 0 || t.b < 0 || t.a >= n || t.b >= n) fail(Errc::not_in_f, "triple endpoint out of range");
  if (!e.lt(t.a, t.b)) fail(Errc::not_in_f, "(a,b) not a pair of e");
  Mask cc = interval_cc(e, t.a, t.b);
  if (t.u & ~cc) fail(Errc::not_in_f, "U reaches outside the interval");
  if (t.a != t.b) {
    if (has(t.u, t.a)) fail(Errc::not_in_f, "a must not belong to U");
    if (!has(t.u, t.b)) fail(Errc::not_in_f, "b must belong to U");
  } else {
    if (has(t.u, t.a)) fail(Errc::not_in_f, "clepsydra triples store U without a");
  }
}

namespace {

// side masks of p⟨a,b,U⟩ = e ∩ (x_side × y_side)
void side_masks(const TransRel& e, const JirrTriple& t, Mask& x_side, Mask& y_side) {
  Mask cc = interval_cc(e, t.a, t.b);
  if (t.a != t.b) {
    x_side = cc & ~t.u;           // a ∈ Uᶜ already
    y_side = t.u;                 // b ∈ U already
  } else {
    Mask u_eff = t.u | bit(t.a);
    x_side = (cc & ~u_eff) | bit(t.a);
    y_side = u_eff;
  }
}

PairBits realize_masks(const TransRel& e, Mask x_side, Mask y_side) {
  PairBits out = e.empty_bits();
  for (Mask t = x_side; t; t &= t - 1) {
    int i = lowest_bit(t);
    for (Mask s = e.lt_row(i) & y_side; s; s &= s - 1) {
      bits_set(out, e.pair_index(i, lowest_bit(s)));
    }
  }
  return out;
}

}  // namespace

PairBits realize_bits(const TransRel& e, const JirrTriple& t) {
  validate_triple(e, t);
  Mask xs, ys;
  side_masks(e, t, xs, ys);
  return realize_masks(e, xs, ys);
}

SubRel realize(const TransRel& e, const JirrTriple& t) { return SubRel(e, realize_bits(e, t)); }

PairBits lower_cover_bits(const TransRel& e, const JirrTriple& t) {
  PairBits p = realize_bits(e, t);
  if (t.a != t.b) {
    Mask ca = e.equiv_class(t.a), cb = e.equiv_class(t.b);
    bits_for_each(PairBits(p), [&](int idx) {
      auto [i, j] = e.pair_at(idx);
      if (has(ca, i) && has(cb, j)) bits_clear_bit(p, idx);
    });
  } else {
    bits_clear_bit(p, e.pair_index(t.a, t.a));
  }
  return p;
}

SubRel lower_cover(const TransRel& e, const JirrTriple& t) {
  return SubRel(e, lower_cover_bits(e, t));
}

std::vector<JirrElement> enumerate_jirr(const TransRel& e, std::size_t cap) {
  std::unordered_map<PairBits, JirrTriple, PairBitsHash> seen;
  std::size_t visited = 0;

  for (auto [a, b] : e.pairs()) {
    Mask cc = interval_cc(e, a, b);
    Mask free = (a == b) ? (cc & ~bit(a)) : (cc & ~bit(a) & ~bit(b));
    int k = popcount(free);
    if (k >= 40 || (visited + (std::size_t{1} << k)) > cap)
      fail(Errc::cap_exceeded, "join-irreducible family exceeds the element budget");
    Mask sub = 0;
    while (true) {
      ++visited;
      JirrTriple t{a, b, (a == b) ? sub : (sub | bit(b))};
      Mask xs, ys;
      side_masks(e, t, xs, ys);
      PairBits p = realize_masks(e, xs, ys);
      auto [it, fresh] = seen.emplace(std::move(p), t);
      if (!fresh && triple_less(t, it->second)) it->second = t;
      if (sub == free) break;
      sub = (sub - free) & free;  // next submask in ascending numeric order
    }
  }

  std::vector<JirrElement> out;
  out.reserve(seen.size());
  for (auto& [p, t] : seen) {
    JirrElement el;
    el.triple = t;
    el.p = p;
    el.p_star = lower_cover_bits(e, t);
    el.clepsydra = t.clepsydra();
    out.push_back(std::move(el));
  }
  std::sort(out.begin(), out.end(), [](const JirrElement& x, const JirrElement& y) {
    return bits_compare(x.p, y.p) < 0;
  });
  return out;
}

}  // namespace reglat
