#include <doctest.h>

#include <random>
#include <sstream>

#include "reglat/io.hpp"
#include "reglat/props.hpp"
#include "reglat/relation.hpp"
#include "support.hpp"

using namespace reglat;

namespace {

SubRel sub(const TransRel& e, std::initializer_list<std::pair<int, int>> prs) {
  std::vector<std::pair<int, int>> v;
  for (auto [i, j] : prs) v.emplace_back(i - 1, j - 1);  // tests speak 1-based
  return e.subset_of(v);
}

std::vector<std::pair<int, int>> pairs1(const SubRel& s) {
  auto p = s.pairs();
  for (auto& [i, j] : p) {
    ++i;
    ++j;
  }
  return p;
}

}  // namespace

TEST_CASE("transitive closure basics") {
  Relation r(3);
  r.add(0, 1);
  r.add(1, 2);
  Relation c = transitive_closure(r);
  CHECK(c.contains(0, 2));
  CHECK(c.pair_count() == 3);

  Relation two(2);
  two.add(0, 1);
  two.add(1, 0);
  Relation c2 = transitive_closure(two);
  CHECK(c2.pair_count() == 4);
  CHECK(c2.contains(0, 0));
  CHECK(c2.contains(1, 1));

  Relation empty(4);
  CHECK(transitive_closure(empty).pair_count() == 0);

  // idempotent on every transitive relation of the exhaustive corpus
  for (const auto& rel : all_transitive_relations(3)) CHECK(transitive_closure(rel) == rel);
}

TEST_CASE("transrel construction validates") {
  Relation r(3);
  r.add(0, 1);
  r.add(1, 2);
  CHECK_THROWS_AS(TransRel{r}, Error);
  TransRel e(r, TransRel::Close::apply);
  CHECK(e.pair_count() == 3);
  CHECK(e.lt(0, 2));
}

TEST_CASE("interior on the 3-chain") {
  TransRel e = generate("chain:3");
  CHECK(tin(e, sub(e, {{1, 3}})).empty());
  SubRel a = sub(e, {{1, 2}, {1, 3}});
  CHECK(tin(e, a) == a);
  CHECK(tin(e, e.full_subset()) == e.full_subset());
}

TEST_CASE("orthogonal on the 3-chain") {
  TransRel e = generate("chain:3");
  SubRel x = sub(e, {{1, 2}});
  CHECK(orthogonal(e, x) == sub(e, {{2, 3}, {1, 3}}));
  CHECK(orthogonal(e, e.empty_subset()) == e.full_subset());
  CHECK(orthogonal(e, e.full_subset()) == e.empty_subset());
}

TEST_CASE("classification") {
  TransRel e = generate("chain:3");
  ClassReport r = classify(e, sub(e, {{1, 3}}));
  CHECK(r.closed);
  CHECK(!r.open);
  CHECK(!r.regular_closed);
  CHECK(!r.regular_open);

  ClassReport r0 = classify(e, e.empty_subset());
  CHECK(r0.closed);
  CHECK(r0.open);
  CHECK(r0.clopen);
  CHECK(r0.regular_closed);
  CHECK(r0.regular_open);

  // u and orth(u) of the Boolean-poset example: regular closed, not clopen
  TransRel b2 = generate("b2");
  ClassReport ru = classify(b2, sub(b2, {{1, 2}, {2, 4}, {1, 4}}));
  CHECK(ru.regular_closed);
  CHECK(!ru.clopen);
  CHECK(!ru.open);
}

TEST_CASE("env mismatch is rejected") {
  TransRel e1 = generate("chain:3");
  TransRel e2 = generate("chain:3");
  SubRel a = e2.empty_subset();
  CHECK_THROWS_AS(tin(e1, a), Error);
}

TEST_CASE("intervals") {
  TransRel e = generate("chain:3");
  CHECK(interval(e, 0, 2, IntervalKind::cc).members == 0b111);
  CHECK(interval(e, 0, 2, IntervalKind::oc).members == 0b110);
  CHECK(interval(e, 0, 2, IntervalKind::co).members == 0b011);
  TransRel full = generate("full:3");
  CHECK(interval(full, 0, 0, IntervalKind::cc).members == 0b111);
}

TEST_CASE("square-freeness") {
  CHECK(!is_square_free(generate("b2")));
  CHECK(is_square_free(generate("full:4")));
  CHECK(is_square_free(generate("chain:5")));
}

TEST_CASE("components and the component condition") {
  TransRel e(make_poset(3, {{0, 1}}));
  auto comps = components(e);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == 0b011);
  CHECK(comps[1] == 0b100);

  CHECK(components(generate("full:3")).size() == 1);

  TransRel s = generate("sum:chain:2+loop2");
  auto cs = components(s);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == 0b0011);
  CHECK(cs[1] == 0b1100);

  CHECK(structural_condition_iv(generate("chain:4")));
  CHECK(structural_condition_iv(generate("full:2")));
  CHECK(!structural_condition_iv(generate("full:3")));
  CHECK(structural_condition_iv(s));
}

TEST_CASE("generators") {
  CHECK(generate("chain:3").pair_count() == 3);
  CHECK(generate("full:2").pair_count() == 4);
  CHECK(generate("loop2").rel() == generate("full:2").rel());
  TransRel b2 = generate("b2");
  auto p = pairs1(b2.full_subset());
  std::vector<std::pair<int, int>> want{{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}};
  CHECK(p == want);
  CHECK(generate("diag:3").pair_count() == 3);
  CHECK(generate("poset:1<2,1<3,2<4,3<4").rel() == b2.rel());
  CHECK_THROWS_AS(generate("poset:1<2,2<1"), Error);
  CHECK_THROWS_AS(generate("nope:3"), Error);

  // orthogonality violations: overlapping pair sets, or chained components
  Relation a = make_chain(2), b = make_chain(2);
  CHECK_THROWS_AS(orthogonal_union({a, b}), Error);
  Relation c(3), d(3);
  c.add(0, 1);
  d.add(1, 2);
  CHECK_THROWS_AS(orthogonal_union({c, d}), Error);
  Relation diag(2);
  diag.add(1, 1);
  Relation ch(2);
  ch.add(0, 1);
  CHECK(orthogonal_union({ch, diag}).pair_count() == 2);
}

TEST_CASE("closure and interior against the pair-set oracles") {
  auto scan_env = [](const TransRel& e) {
    oracle::PairSet ep = oracle::env_pairs(e);
    const auto pairs = e.pairs();
    const int m = static_cast<int>(pairs.size());
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
      PairBits bits = e.empty_bits();
      oracle::PairSet a;
      for (int i = 0; i < m; ++i)
        if ((s >> i) & 1) {
          bits_set(bits, i);
          a.insert(pairs[i]);
        }
      SubRel sr(e, bits);
      CHECK(oracle::from_bits(e, tcl(e, sr).bits()) == oracle::tcl(a));
      CHECK(oracle::from_bits(e, tin(e, sr).bits()) == oracle::tin(ep, a));
      ClassReport cr = classify(e, sr);
      CHECK(cr.closed == oracle::is_transitive(a));
      CHECK(cr.open == oracle::is_open(ep, a));
      CHECK(cr.regular_closed == oracle::is_regular_closed(ep, a));
    }
  };
  for (const auto& r : all_transitive_relations(3)) scan_env(TransRel(r));
  for (const auto& r : sample_transitive_relations(4, 12, 99)) {
    if (r.pair_count() <= 12) scan_env(TransRel(r));
  }
}

TEST_CASE("operator properties on random subsets") {
  auto props = [](const TransRel& e, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int m = e.pair_count();
    for (int it = 0; it < 40; ++it) {
      PairBits ab = e.empty_bits(), bb = e.empty_bits();
      for (int i = 0; i < m; ++i) {
        if (rng() & 1) bits_set(ab, i);
        if (rng() & 1) bits_set(bb, i);
      }
      SubRel a(e, ab), b(e, bb);
      SubRel ca = tcl(e, a);
      CHECK(a.subset_of(ca));                      // extensive
      CHECK(tcl(e, ca) == ca);                     // idempotent
      SubRel ia = tin(e, a);
      CHECK(ia.subset_of(a));                      // contractive
      CHECK(tin(e, ia) == ia);                     // idempotent
      SubRel uni = a | b;
      CHECK(ca.subset_of(tcl(e, uni)));            // monotone
      CHECK(tin(e, a & b).subset_of(ia));          // monotone
      // closed/open complement duality
      ClassReport ra = classify(e, a);
      ClassReport rc = classify(e, a.complement());
      CHECK(ra.closed == rc.open);
      CHECK(ra.regular_closed == rc.regular_open);
      // tcl∘tin and tin∘tcl idempotent
      SubRel ct = tcl(e, tin(e, a));
      CHECK(tcl(e, tin(e, ct)) == ct);
      SubRel tc = tin(e, tcl(e, a));
      CHECK(tin(e, tcl(e, tc)) == tc);
    }
  };
  props(generate("b2"), 7);
  props(generate("full:3"), 8);
  props(generate("sum:chain:3+full:2"), 9);
  int k = 0;
  for (const auto& r : sample_transitive_relations(5, 6, 123)) props(TransRel(r), 100 + k++);
}

TEST_CASE("square-free relations keep interiors closed and closures open") {
  auto check = [](const TransRel& e, std::uint64_t seed) {
    REQUIRE(is_square_free(e));
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 60; ++it) {
      PairBits ab = e.empty_bits();
      for (int i = 0; i < e.pair_count(); ++i)
        if (rng() & 1) bits_set(ab, i);
      SubRel closed = tcl(e, SubRel(e, ab));
      CHECK(classify(e, tin(e, closed)).closed);
      SubRel open = tin(e, SubRel(e, ab));
      CHECK(classify(e, tcl(e, open)).open);
    }
  };
  check(generate("chain:5"), 5);
  check(generate("full:4"), 6);
}

TEST_CASE("relation file round trip") {
  TransRel b2 = generate("b2");
  Relation back = parse_relation(format_relation_text(b2.rel()));
  CHECK(back == b2.rel());
  Relation back2 = parse_relation(format_relation_json(b2.rel()));
  CHECK(back2 == b2.rel());

  std::istringstream bad("relation\nelements 2\npair 1 3\n");
  CHECK_THROWS_AS(parse_relation_text(bad), Error);
  std::istringstream bad2("elements 2\n");
  CHECK_THROWS_AS(parse_relation_text(bad2), Error);
  CHECK_THROWS_AS(parse_relation_json("{\"elements\": 2}"), Error);
}
