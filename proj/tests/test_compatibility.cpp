#include <doctest.h>

#include "oracles.hpp"

using namespace schur;

namespace {

SRing a1() { return sring_h1_from_sequence(make_suitable({0, 3, 6, 2, 5, 1}, 7)); }
SRing a2() { return sring_h1_from_sequence(make_suitable({0, 4, 2, 5, 6, 1}, 7)); }

// One relation-preserving p-cycle per class outside L, identity on L.
Permutation some_gamma1(const CayleyScheme& cs, const ElementSet& l) {
  Permutation s = identity_permutation(cs.size());
  const SRing& sr = cs.sring();
  for (std::size_t c = 0; c < sr.rank(); ++c) {
    if (contains(l, sr.cls(c).front())) continue;
    const auto r = gamma1_restrictions(cs, c);
    REQUIRE_FALSE(r.empty());
    for (std::size_t u = 0; u < r[0].size(); ++u) s[sr.cls(c)[u]] = r[0][u];
  }
  return s;
}

std::vector<SRing> congruence_corpus() {
  std::vector<SRing> out;
  for (const auto& e : oracle::sequence_corpus()) out.push_back(e.sr);
  for (Family f : {Family::H1, Family::H2}) {
    const auto g = build_group({f, 11});
    for (const auto& x : {std::vector<int>{0, 6, 10, 3, 4, 9, 7, 2, 8, 1},
                          std::vector<int>{0, 4, 10, 5, 3, 8, 9, 2, 6, 1}})
      out.push_back(sring_from_sequence(g, make_suitable(x, 11)));
    out.push_back(sring_from_sequence(g, canonical_sequence(11)));
  }
  return out;
}

}  // namespace

TEST_CASE("ordered basis") {
  for (const auto& e : oracle::sequence_corpus()) {
    const OrderedBasis b(e.sr);
    const Group& g = e.sr.group();
    const int p = g.prime();
    INFO(oracle::corpus_name(e));
    CHECK(b.sequence() == e.seq.x);
    CHECK(b.L() == sequence_base_subgroup(g));
    CHECK(b.z() == g.central_generator());
    auto full = b.full_order();
    CHECK(full.size() == g.order());
    std::sort(full.begin(), full.end());
    CHECK(std::adjacent_find(full.begin(), full.end()) == full.end());
    for (int i = 1; i < p; ++i) {
      CHECK(g.normal_form(b.step(i)).b == 1);
      CHECK(b.step(i) == sequence_step(g, e.seq, i));
      const auto& row = b.ordered(i, 0);
      CHECK(row[0] == g.pow(g.a(), i));
      for (int m = 1; m < p; ++m) CHECK(row[m] == g.mul(row[m - 1], b.step(i)));
      for (int j = 0; j < p; ++j) {
        CHECK(make_set(b.ordered(i, j)) == e.sr.cls(b.class_index(i, j)));
        for (int m = 0; m < p; ++m) {
          CHECK(b.ordered(i, j)[m] == g.mul(row[m], g.pow(b.z(), j)));
          CHECK(b.ordinal(b.ordered(i, j)[m]) == m);
        }
      }
    }
  }
  const auto g = build_group({Family::H1, 3});
  std::vector<ElementSet> cls;
  for (Elem x = 0; x < g->order(); ++x) cls.push_back({x});
  CHECK_THROWS_AS(OrderedBasis(validate_sring(Partition(g, cls))), ConditionsABRequired);
}

TEST_CASE("gamma1 restrictions match a brute-force search") {
  const CayleyScheme c1(a1());
  const Group& g = c1.group();
  const std::size_t t1 = c1.sring().class_of(g.a());
  const auto r = gamma1_restrictions(c1, t1);
  CHECK(r.size() == 6);
  auto sorted = r;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == oracle::brute_force_gamma1(c1, c1.sring().cls(t1)));

  for (const SRing& sr : {a1(), a2()}) {
    const CayleyScheme cs(sr);
    const ElementSet l = sequence_base_subgroup(cs.group());
    std::size_t bad = 0;
    for (std::size_t c = 0; c < sr.rank(); ++c) {
      if (contains(l, sr.cls(c).front())) continue;
      auto mine = gamma1_restrictions(cs, c);
      std::sort(mine.begin(), mine.end());
      bad += mine != oracle::brute_force_gamma1(cs, sr.cls(c));
    }
    CHECK(bad == 0);
  }

  const CayleyScheme c5(sring_h1_from_sequence(canonical_sequence(5)));
  CHECK_FALSE(gamma1_restrictions(c5, c5.sring().class_of(c5.group().a())).empty());
}

TEST_CASE("compatibility with L is automatic") {
  for (const SRing& sr : {a1(), a2()}) {
    const CayleyScheme cs(sr);
    const ElementSet l = sequence_base_subgroup(cs.group());
    const Permutation s = some_gamma1(cs, l);
    CHECK(is_gamma1(cs, l, s));
    for (Elem x : l)
      for (std::size_t c = 0; c < sr.rank(); ++c) REQUIRE(are_compatible(cs, s, {x}, sr.cls(c)));
  }
}

TEST_CASE("the automorphism a -> ab yields a compatible permutation for A1") {
  const CayleyScheme cs(a1());
  const Group& g = cs.group();
  const SRing& sr = cs.sring();
  const auto phi = GroupAutomorphism::from_generator_images(g, g.mul(g.a(), g.b()), g.b());
  const Permutation s = phi.images();
  const ElementSet l = sequence_base_subgroup(g);
  CHECK(is_scheme_automorphism(cs, s));
  CHECK(is_gamma1(cs, l, s));
  std::size_t bad = 0;
  for (std::size_t c = 0; c < sr.rank(); ++c)
    for (std::size_t d = 0; d < sr.rank(); ++d) bad += !are_compatible(cs, s, sr.cls(c), sr.cls(d));
  CHECK(bad == 0);
  CHECK_FALSE(is_gamma1(cs, l, identity_permutation(cs.size())));
}

TEST_CASE("no cyclic chain of compatibilities on T1, T2, T3 of A2") {
  const CayleyScheme cs(a2());
  const OrderedBasis b(cs.sring());
  std::vector<std::vector<std::vector<Elem>>> r;
  for (int i = 1; i <= 3; ++i) r.push_back(gamma1_restrictions(cs, b.ordered(i, 0)));
  std::size_t found = 0, tried = 0;
  for (const auto& r1 : r[0])
    for (const auto& r2 : r[1])
      for (const auto& r3 : r[2]) {
        Permutation s = identity_permutation(cs.size());
        for (int m = 0; m < 7; ++m) {
          s[b.ordered(1, 0)[m]] = r1[m];
          s[b.ordered(2, 0)[m]] = r2[m];
          s[b.ordered(3, 0)[m]] = r3[m];
        }
        const auto t1 = make_set(b.ordered(1, 0)), t2 = make_set(b.ordered(2, 0)),
                   t3 = make_set(b.ordered(3, 0));
        ++tried;
        found += are_compatible(cs, s, t1, t2) && are_compatible(cs, s, t2, t3) &&
                 are_compatible(cs, s, t1, t3);
      }
  CHECK(tried > 0);
  CHECK(found == 0);
}

TEST_CASE("Schurity by compatibility") {
  const auto r1 = schurity_by_compatibility(a1());
  CHECK(r1.schurian);
  REQUIRE(r1.witness.has_value());
  CHECK(r1.witness_is_automorphism);
  const CayleyScheme c1(a1());
  CHECK(is_scheme_automorphism(c1, *r1.witness));
  CHECK(is_gamma1(c1, sequence_base_subgroup(c1.group()), *r1.witness));

  const auto r2 = schurity_by_compatibility(a2());
  CHECK_FALSE(r2.schurian);
  CHECK_FALSE(r2.witness.has_value());
  CHECK(r2.candidates_tried == 6);

  CHECK_FALSE(schurity_by_compatibility(sring_h1_from_sequence(mod4_3_sequence(11))).schurian);
}

TEST_CASE("blocks are invariant under a common central shift") {
  for (const auto& e : oracle::sequence_corpus()) {
    const CayleyScheme cs(e.sr);
    const OrderedBasis b(e.sr);
    const int p = b.prime();
    std::size_t bad = 0;
    for (int i = 1; i < p; ++i)
      for (int j = 1; j < p; ++j)
        for (int l = 1; l < p; ++l)
          for (int n = 0; n < p; ++n)
            for (int m = 0; m < p; ++m)
              bad += cs.color(b.ordered(i, 0)[n], b.ordered(j, 0)[m]) !=
                     cs.color(b.ordered(i, l)[n], b.ordered(j, l)[m]);
    CHECK_MESSAGE(bad == 0, oracle::corpus_name(e));
    // Same statement through block matrices, for every relation.
    std::size_t bad_blocks = 0;
    for (std::size_t t = 0; t < cs.rank(); ++t)
      for (int i = 1; i < p; ++i)
        for (int j = 1; j < p; ++j)
          bad_blocks += !(BlockMatrix(cs, b.ordered(i, 0), b.ordered(j, 0), t) ==
                          BlockMatrix(cs, b.ordered(i, p - 1), b.ordered(j, p - 1), t));
    CHECK(bad_blocks == 0);
  }
}

TEST_CASE("shifting the relation and the column block together") {
  for (const auto& e : oracle::sequence_corpus()) {
    const CayleyScheme cs(e.sr);
    const OrderedBasis b(e.sr);
    const Group& g = e.sr.group();
    const int p = b.prime();
    std::size_t bad = 0;
    for (std::size_t t = 0; t < cs.rank(); ++t)
      for (int m = 1; m < p; ++m) {
        const std::size_t tz = translate_class(e.sr, t, g.pow(b.z(), m));
        for (int i = 1; i < p; ++i)
          for (int j = 1; j < p; ++j)
            bad += !(BlockMatrix(cs, b.ordered(i, 0), b.ordered(j, 0), t) ==
                     BlockMatrix(cs, b.ordered(i, 0), b.ordered(j, m), tz));
      }
    CHECK_MESSAGE(bad == 0, oracle::corpus_name(e));
  }
}

TEST_CASE("triple congruences agree with the blocks") {
  for (const SRing& sr : congruence_corpus()) {
    const CayleyScheme cs(sr);
    const OrderedBasis b(sr);
    const int p = b.prime();
    std::size_t lines = 0, bad = 0;
    for (int k = 1; k < p; ++k)
      for (int i = 1; i < p; ++i)
        for (int j = 1; j < p; ++j) {
          const BlockMatrix block(cs, b.ordered(i, 0), b.ordered(j, 0), b.class_index(k, 0));
          try {
            const CongruenceLine line = triple_congruence(cs, b, i, j, k);
            ++lines;
            for (int n = 0; n < p; ++n)
              for (int l = 0; l < p; ++l) {
                const bool direct = cs.color(b.ordered(i, 0)[n], b.ordered(j, 0)[l]) == b.class_index(k, 0);
                bad += line.holds(n, l) != direct || block(n, l) != direct;
              }
            bad += !block.is_permutation();
          } catch (const EmptyIntersection&) {
            bad += !block.empty();
          } catch (const Inapplicable&) {
            CHECK(sr.group().family() == Family::H1);
            CHECK(k + i != j);
          }
        }
    INFO(sr.group().header());
    CHECK(lines > 0);
    CHECK(bad == 0);
  }
}

TEST_CASE("the three cases at p = 11") {
  const SRing sr = sring_h1_from_sequence(mod4_3_sequence(11));
  const auto c1 = triple_congruence(sr, 1, 2, 1);
  const auto c2 = triple_congruence(sr, 2, 3, 1);
  const auto c3 = triple_congruence(sr, 1, 3, 2);
  CHECK(c1.equivalent(make_line(11, 2, 3)));
  CHECK(c2.equivalent(make_line(11, 5, 2)));
  CHECK(c3.equivalent(make_line(11, 10, 1)));
  const auto comp = compose(c1, c2);
  CHECK(comp.equivalent(make_line(11, 5, 3)));
  CHECK(c3.holds(10, 1));
  CHECK_FALSE(comp.holds(10, 1));
  // Composition of the bijections n -> m and m -> l.
  for (int n = 0; n < 11; ++n)
    for (int l = 0; l < 11; ++l) {
      bool chained = false;
      for (int m = 0; m < 11; ++m) chained |= c1.holds(n, m) && c2.holds(m, l);
      REQUIRE(chained == comp.holds(n, l));
    }
  for (const auto* line : {&c1, &c2, &c3}) CHECK(line->holds(0, 0));
  CHECK(make_line(11, 2, 3).to_string() == "2n ≡ 3l (mod 11)");
  CHECK(make_line(11, 13, -1).a == 2);
  CHECK(make_line(11, 13, -1).b == 10);
  CHECK(make_line(11, 2, 3).normalized() == std::pair{1, 7});
}

TEST_CASE("triple congruence errors") {
  const SRing sr = sring_h1_from_sequence(mod4_3_sequence(11));
  CHECK_THROWS_AS(triple_congruence(sr, 1, 3, 1), EmptyIntersection);
  CHECK_THROWS_AS(triple_congruence(sr, 6, 1, 6), Inapplicable);
}

TEST_CASE("walkthrough at p = 11") {
  const auto rep = section5_walkthrough(11);
  CHECK(rep.sequence == std::vector<int>{0, 6, 10, 3, 4, 9, 7, 2, 8, 1});
  CHECK(rep.case1_matches);
  CHECK(rep.case2_matches);
  CHECK(rep.case3_matches);
  CHECK(rep.composed_matches);
  CHECK(rep.case3_at_witness);
  CHECK_FALSE(rep.composed_at_witness);
  CHECK(rep.zero_pairs);
  CHECK(rep.non_schurian);
  CHECK(rep.compatibility_agrees);
  CHECK_FALSE(rep.automorphism_agrees.has_value());

  CHECK_THROWS_AS(section5_walkthrough(7), Inapplicable);
  CHECK_THROWS_AS(section5_walkthrough(13), Inapplicable);
  CHECK_FALSE(schurity_by_compatibility(a2()).schurian);
}
