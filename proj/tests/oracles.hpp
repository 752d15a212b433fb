#pragma once

// Reference computations that avoid the library's fast paths: groups as
// concrete permutation/matrix representations, structure constants and
// intersection numbers straight from their definitions, and brute-force
// searches.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "schur/compatibility.hpp"
#include "schur/sequences.hpp"

namespace oracle {

using schur::Elem;
using schur::Family;
using schur::Group;
using schur::NormalForm;

inline int md(long x, long m) { return int(((x % m) + m) % m); }

// H1: a^i b^j acts on Z_{p^2} as x -> (1-p)^j x + i.
// H2: a^i b^j c^k is the unitriangular matrix with (1,2) = j, (2,3) = i, (1,3) = -k.
// Elements are encoded by their representation data, which is faithful.
struct Rep {
  std::vector<int> data;
  friend bool operator<(const Rep& a, const Rep& b) { return a.data < b.data; }
  friend bool operator==(const Rep& a, const Rep& b) { return a.data == b.data; }
};

inline Rep represent(const Group& g, NormalForm nf) {
  const int p = g.prime();
  if (g.family() == Family::H1) {
    const int q = p * p;
    long m = 1;
    for (int s = 0; s < nf.b; ++s) m = md(m * (1 - p), q);
    std::vector<int> table(q);
    for (int x = 0; x < q; ++x) table[x] = md(m * x + nf.a, q);
    return {table};
  }
  return {{md(nf.b, p), md(nf.a, p), md(-nf.c, p)}};
}

inline Rep rep_product(const Group& g, const Rep& u, const Rep& v) {
  if (g.family() == Family::H1) {
    std::vector<int> t(u.data.size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = u.data[v.data[x]];
    return {t};
  }
  const int p = g.prime();
  return {{md(u.data[0] + v.data[0], p), md(u.data[1] + v.data[1], p),
           md(u.data[2] + v.data[2] + u.data[0] * v.data[1], p)}};
}

// Maps representation data back to element indices.
class RepGroup {
 public:
  explicit RepGroup(const Group& g) : g_(g) {
    for (Elem x = 0; x < g.order(); ++x) {
      reps_.push_back(represent(g, g.normal_form(x)));
      back_[reps_.back()] = x;
    }
  }
  Elem mul(Elem x, Elem y) const { return back_.at(rep_product(g_, reps_[x], reps_[y])); }
  std::size_t distinct() const { return back_.size(); }
  Elem of(NormalForm nf) const { return back_.at(represent(g_, nf)); }

 private:
  const Group& g_;
  std::vector<Rep> reps_;
  std::map<Rep, Elem> back_;
};

// c[i][j][k] by counting pairs (t, t') in T_i x T_j with t t' = min T_k.
inline std::uint32_t naive_constant(const schur::SRing& sr, std::size_t i, std::size_t j,
                                    std::size_t k) {
  const Group& g = sr.group();
  const Elem target = sr.cls(k).front();
  std::uint32_t n = 0;
  for (Elem t : sr.cls(i))
    for (Elem u : sr.cls(j))
      if (g.mul(t, u) == target) ++n;
  return n;
}

// |xs ∩ yt*| at x = e, y = min of class u, with (x, y) in r iff y x^{-1} in T_r.
inline std::uint32_t naive_intersection(const schur::SRing& sr, std::size_t s, std::size_t t,
                                        std::size_t u) {
  const Group& g = sr.group();
  const Elem x = g.identity();
  const Elem y = sr.cls(u).front();
  std::uint32_t n = 0;
  for (Elem z = 0; z < g.order(); ++z)
    if (sr.class_of(g.mul(z, g.inv(x))) == s && sr.class_of(g.mul(y, g.inv(z))) == t) ++n;
  return n;
}

// Every (p-1)-tuple with x_1 = 0 and distinct entries, filtered by the
// defining congruences.
inline std::vector<std::vector<int>> brute_force_suitable(int p) {
  std::vector<std::vector<int>> out;
  for (int missing = 1; missing < p; ++missing) {
    std::vector<int> rest;
    for (int v = 1; v < p; ++v)
      if (v != missing) rest.push_back(v);
    do {
      std::vector<int> x{0};
      x.insert(x.end(), rest.begin(), rest.end());
      bool ok = true;
      for (int i = 1; i <= (p - 1) / 2 && ok; ++i) ok = md(x[i - 1] + i, p) == x[p - i - 1];
      if (ok) out.push_back(x);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Depth-first count of color-preserving permutations fixing `fixed`,
// assigning points in index order and checking each new point against all
// earlier ones. Optionally records every automorphism found.
inline std::size_t naive_aut_count(const schur::ColorMatrix& c, Elem fixed,
                                   std::vector<schur::Permutation>* all = nullptr) {
  const std::size_t n = c.size();
  std::vector<Elem> order;
  order.push_back(fixed);
  for (Elem v = 0; v < n; ++v)
    if (v != fixed) order.push_back(v);
  schur::Permutation img(n, 0);
  std::vector<char> used(n, 0);
  img[fixed] = fixed;
  used[fixed] = 1;
  std::size_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t d) {
    if (d == n) {
      ++count;
      if (all) all->push_back(img);
      return;
    }
    const Elem v = order[d];
    for (Elem w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = c(v, v) == c(w, w);
      for (std::size_t e = 0; e < d && ok; ++e) {
        const Elem u = order[e];
        ok = c(u, v) == c(img[u], w) && c(v, u) == c(w, img[u]);
      }
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      rec(d + 1);
      used[w] = 0;
    }
  };
  rec(1);
  return count;
}

// All p-cycles on a class (ascending order) preserving its internal colors,
// images aligned with the ascending order.
inline std::vector<std::vector<Elem>> brute_force_gamma1(const schur::CayleyScheme& cs,
                                                         const schur::ElementSet& cls) {
  const std::size_t p = cls.size();
  std::vector<std::size_t> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Elem>> out;
  do {
    std::size_t len = 0, at = 0;
    do {
      at = perm[at];
      ++len;
    } while (at != 0);
    if (len != p) continue;
    bool ok = true;
    for (std::size_t u = 0; u < p && ok; ++u)
      for (std::size_t v = 0; v < p && ok; ++v)
        ok = cs.color(cls[u], cls[v]) == cs.color(cls[perm[u]], cls[perm[v]]);
    if (!ok) continue;
    std::vector<Elem> images(p);
    for (std::size_t u = 0; u < p; ++u) images[u] = cls[perm[u]];
    out.push_back(images);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Every sequence S-ring for p in {3, 5, 7} over both groups.
struct CorpusEntry {
  schur::Family family;
  schur::SuitableSequence seq;
  schur::SRing sr;
};

inline std::vector<CorpusEntry> sequence_corpus(int max_p = 7) {
  std::vector<CorpusEntry> out;
  for (int p : {3, 5, 7}) {
    if (p > max_p) break;
    for (Family f : {Family::H1, Family::H2}) {
      const auto g = schur::build_group({f, p});
      for (const auto& s : schur::enumerate_suitable(p))
        out.push_back({f, s, schur::sring_from_sequence(g, s)});
    }
  }
  return out;
}

inline std::string corpus_name(const CorpusEntry& e) {
  return schur::family_name(e.family) + " p=" + std::to_string(e.seq.p) + " (" +
         schur::format_sequence(e.seq.x) + ")";
}

}  // namespace oracle
