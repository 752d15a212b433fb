// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "../oracles.hpp"

using namespace schur;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
};

class Check {
 public:
  explicit Check(Outcome& o) : o_(o) {}
  void operator()(bool cond, const std::string& what) {
    if (!cond && o_.ok) o_.note = what;
    o_.ok = o_.ok && cond;
  }

 private:
  Outcome& o_;
};

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return elapsed(t0);
}

bool construction_ok(const oracle::CorpusEntry& e, std::string& why) {
  const SRing& sr = e.sr;
  const Group& g = sr.group();
  const int p = g.prime();
  if (!is_p_sring(sr)) return why = "not a p-S-ring", false;
  const auto ab = check_conditions_AB(sr);
  if (!ab.holds_A || !ab.holds_B) return why = "conditions A/B", false;
  const ElementSet l = sequence_base_subgroup(g);
  const int shift = e.family == Family::H1 ? p - 1 : 0;
  for (int i = 1; i < p; ++i) {
    ElementSet inv;
    for (Elem t : sequence_class(g, e.seq, i, 0)) inv.push_back(g.inv(t));
    if (make_set(inv) != sequence_class(g, e.seq, p - i, shift)) return why = "inverse identity", false;
    if (sr.cls(sr.class_of(inv.front())) != make_set(inv)) return why = "inverse not a class", false;
  }
  for (int i = 1; i < p; ++i)
    for (int j = 1; j < p; ++j) {
      ElementSet prod;
      for (Elem s : sequence_class(g, e.seq, i, 0))
        for (Elem t : sequence_class(g, e.seq, j, 0)) prod.push_back(g.mul(s, t));
      ElementSet expected;
      if (j == p - i) {
        const ElementSet sub = generate_subgroup(g, {sequence_step(g, e.seq, j)});
        expected = e.family == Family::H1 ? coset(g, sub, g.pow(g.a(), p), Side::Left) : sub;
      } else {
        expected = coset(g, l, g.pow(g.a(), i + j), Side::Left);
      }
      if (make_set(prod) != expected) return why = "product dichotomy", false;
    }
  return true;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double t = elapsed(t0);
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << "  " << id << ". " << title << " (" << t << " s)";
    if (!o.note.empty()) line << " -- " << o.note;
    std::cout << line.str() << std::endl;
    failures += !o.ok;
  };

  std::vector<oracle::CorpusEntry> corpus;

  report(1, "p = 7 pair: A1 Schurian, A2 non-Schurian by both methods", [] {
    Outcome o;
    Check check(o);
    const auto g = build_group({Family::H1, 7});
    for (auto [x, expected] : {std::pair{std::vector<int>{0, 3, 6, 2, 5, 1}, true},
                               std::pair{std::vector<int>{0, 4, 2, 5, 6, 1}, false}}) {
      const SRing sr = sring_from_sequence(g, make_suitable(x, 7));
      check(is_p_sring(sr) && !is_commutative(sr), "not a non-commutative 7-S-ring");
      const CayleyScheme cs(sr);
      SchurityCertificate aut;
      const double t = timed([&] { aut = is_schurian(cs); });
      check(t <= 60.0, "automorphism search over 60 s");
      check(aut.schurian == expected, "automorphism verdict");
      check(schurity_by_compatibility(cs).schurian == expected, "compatibility verdict");
    }
    return o;
  });

  report(2, "A1: stabilizer order 7, automorphism group order 2401", [] {
    Outcome o;
    Check check(o);
    const auto r = stabilizer_automorphisms(CayleyScheme(sring_h1_from_sequence(canonical_sequence(7))));
    check(r.stabilizer_order == 7, "stabilizer order");
    check(r.full_aut_order == 2401, "full order");
    return o;
  });

  report(3, "suitable sequence enumeration for p = 3, 5, 7, 11", [] {
    Outcome o;
    Check check(o);
    using V = std::vector<int>;
    std::vector<std::vector<SuitableSequence>> e;
    const double t = timed([&] {
      for (int p : {3, 5, 7, 11}) e.push_back(enumerate_suitable(p));
    });
    auto has = [](const std::vector<SuitableSequence>& v, const V& x) {
      return std::any_of(v.begin(), v.end(), [&](const auto& s) { return s.x == x; });
    };
    check(e[0].size() == 1 && e[0][0].x == V{0, 1}, "p = 3");
    check(e[1].size() == 1 && e[1][0].x == V{0, 2, 4, 1}, "p = 5");
    check(e[2].size() == 3 && has(e[2], {0, 4, 2, 5, 6, 1}) && has(e[2], {0, 2, 3, 6, 4, 1}) &&
              has(e[2], {0, 3, 6, 2, 5, 1}),
          "p = 7");
    check(has(e[3], {0, 6, 10, 3, 4, 9, 7, 2, 8, 1}) && has(e[3], {0, 4, 10, 5, 3, 8, 9, 2, 6, 1}), "p = 11");
    for (int k = 0; k < 4; ++k) {
      std::vector<V> xs;
      for (const auto& s : e[k]) xs.push_back(s.x);
      check(xs == oracle::brute_force_suitable(std::vector<int>{3, 5, 7, 11}[k]), "brute-force oracle");
    }
    check(t <= 5.0, "enumeration over 5 s");
    return o;
  });

  report(4, "construction correctness for p in {3, 5, 7} over H1 and H2", [&] {
    Outcome o;
    Check check(o);
    const double t = timed([&] {
      corpus = oracle::sequence_corpus();
      for (const auto& e : corpus) {
        std::string why;
        check(construction_ok(e, why), oracle::corpus_name(e) + ": " + why);
      }
    });
    check(corpus.size() == 10, "corpus size");
    check(t <= 120.0, "over 120 s");
    return o;
  });

  report(5, "compatibility criterion agrees with automorphism orbits", [&] {
    Outcome o;
    Check check(o);
    check(corpus.size() == 10, "corpus missing");
    for (const auto& e : corpus) {
      const CayleyScheme cs(e.sr);
      check(schurity_by_compatibility(cs).schurian == is_schurian(cs).schurian, oracle::corpus_name(e));
    }
    return o;
  });

  report(6, "scheme lemma suite and relational constants", [&] {
    Outcome o;
    Check check(o);
    check(corpus.size() == 10, "corpus missing");
    for (const auto& e : corpus) {
      const CayleyScheme cs(e.sr);
      const auto in = intersection_numbers(cs);
      const auto rep = lemma_suite(cs, in);
      check(rep.ok(), oracle::corpus_name(e) + (rep.ok() ? "" : ": " + rep.violations.front()));
      check(matches_sring_constants(in, e.sr), oracle::corpus_name(e) + ": constants");
    }
    return o;
  });

  report(7, "thin residue = thin radical, thin, order p^2, elementary abelian", [&] {
    Outcome o;
    Check check(o);
    check(corpus.size() == 10, "corpus missing");
    for (const auto& e : corpus) {
      if (is_commutative(e.sr)) continue;
      const CayleyScheme cs(e.sr);
      const ElementSet res = thin_residue(e.sr);
      const int p = e.seq.p;
      check(res == thin_radical(e.sr), oracle::corpus_name(e) + ": residue != radical");
      check(res.size() == std::size_t(p * p) && is_elementary_abelian(e.sr.group(), res),
            oracle::corpus_name(e) + ": shape");
      check(thin_residue_shape(cs, intersection_numbers(cs)).ok(), oracle::corpus_name(e) + ": scheme");
    }
    return o;
  });

  report(8, "congruence cases at p = 11 and non-Schurity", [] {
    Outcome o;
    Check check(o);
    Section5Report rep;
    const double t = timed([&] { rep = section5_walkthrough(11, true); });
    check(rep.case1_matches, "case 1");
    check(rep.case2_matches, "case 2");
    check(rep.case3_matches, "case 3");
    check(rep.composed_matches, "composition");
    check(rep.case3_at_witness && !rep.composed_at_witness, "(10, 1) incompatibility");
    check(rep.non_schurian && rep.compatibility_agrees, "compatibility verdict");
    check(rep.automorphism_agrees.value_or(false), "automorphism confirmation");
    check(t <= 30.0, "over 30 s");
    return o;
  });

  report(9, "property suites: group axioms, transitivity modules, orbits, micro counts", [&] {
    Outcome o;
    Check check(o);
    check(corpus.size() == 10, "corpus missing");
    for (Family f : {Family::H1, Family::H2}) {
      const auto g = build_group({f, 3});
      const oracle::RepGroup rep(*g);
      std::size_t bad = 0;
      for (Elem x = 0; x < 27; ++x)
        for (Elem y = 0; y < 27; ++y) {
          bad += g->mul(x, y) != rep.mul(x, y);
          for (Elem z = 0; z < 27; ++z) bad += g->mul(g->mul(x, y), z) != g->mul(x, g->mul(y, z));
        }
      check(bad == 0, "group axioms");
      for (Elem x = 1; x < 27; ++x)
        for (Elem y = 1; y < 27; y += 4) {
          try {
            const auto phi = GroupAutomorphism::from_generator_images(*g, x, y);
            check(is_schurian(transitivity_module(g, {phi})).schurian, "transitivity module");
          } catch (const NotAnAutomorphism&) {
          }
        }
      std::vector<ElementSet> singles;
      for (Elem x = 0; x < 27; ++x) singles.push_back({x});
      check(stabilizer_automorphisms(CayleyScheme(validate_sring(Partition(g, singles)))).stabilizer_order == 1,
            "thin scheme");
      ElementSet rest;
      for (Elem x = 1; x < 27; ++x) rest.push_back(x);
      BigInt fact = 1;
      for (int i = 2; i <= 26; ++i) fact *= i;
      check(stabilizer_automorphisms(CayleyScheme(validate_sring(Partition(g, {{0}, rest})))).stabilizer_order ==
                fact,
            "trivial scheme");
    }
    for (const auto& e : corpus) {
      const auto cert = is_schurian(e.sr);
      for (const auto& orb : cert.aut.orbits)
        for (Elem x : orb) check(e.sr.class_of(x) == e.sr.class_of(orb.front()), "orbit refinement");
    }
    return o;
  });

  report(10, "regression: p = 5 Schurian, (0,2,3,6,4,1) non-Schurian, both groups", [] {
    Outcome o;
    Check check(o);
    for (Family f : {Family::H1, Family::H2}) {
      const CayleyScheme c5(sring_from_sequence(build_group({f, 5}), make_suitable({0, 2, 4, 1}, 5)));
      const auto a5 = is_schurian(c5);
      check(a5.schurian && schurity_by_compatibility(c5).schurian, "p = 5 verdict");
      check(a5.aut.stabilizer_order == 5, "p = 5 order");
      const CayleyScheme c7(sring_from_sequence(build_group({f, 7}), make_suitable({0, 2, 3, 6, 4, 1}, 7)));
      const auto a7 = is_schurian(c7);
      check(!a7.schurian && !schurity_by_compatibility(c7).schurian, "p = 7 verdict");
      check(a7.aut.stabilizer_order == 1, "p = 7 order");
    }
    return o;
  });

  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " failed" : std::string("acceptance: all passed"))
            << std::endl;
  return failures;
}
