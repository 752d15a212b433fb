#include "schur/compatibility.hpp"

#include <algorithm>

#include "schur/sequences.hpp"

namespace schur {

namespace {

int mod(long x, long m) { return static_cast<int>(((x % m) + m) % m); }

int inverse_mod(int a, int p) {
  for (int v = 1; v < p; ++v)
    if (mod(long(a) * v, p) == 1) return v;
  throw Error("no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
}

// True if the map order[m] -> images[m] is one cycle through all of order.
bool is_single_cycle(const std::vector<Elem>& order, const std::vector<Elem>& images) {
  const std::size_t p = order.size();
  auto image_of = [&](Elem x) {
    const auto pos = std::find(order.begin(), order.end(), x) - order.begin();
    return images[pos];
  };
  Elem x = order.front();
  for (std::size_t step = 1; step <= p; ++step) {
    x = image_of(x);
    if (x == order.front()) return step == p;
  }
  return false;
}

}  // namespace

// ----------------------------------------------------------------- basis

OrderedBasis::OrderedBasis(const SRing& sr) {
  const Group& g = sr.group();
  p_ = g.prime();
  z_ = g.central_generator();
  const auto ab = check_conditions_AB(sr);
  if (!ab.holds_A || !ab.holds_B || !ab.shifted_block_structure)
    throw ConditionsABRequired(
        "basic sets must be the singletons of L plus p-1 families T_i z^j of size p");
  l_ = ab.residue;

  steps_.assign(p_, g.identity());
  xs_.assign(p_, 0);
  index_.assign(p_, std::vector<std::size_t>(p_, 0));
  ordered_.assign(p_, std::vector<std::vector<Elem>>(p_));
  ordinal_.assign(g.order(), -1);

  std::vector<ElementSet> stabilizers;
  for (int i = 1; i < p_; ++i) {
    const Elem ai = g.pow(g.a(), i);
    if (contains(l_, ai))
      throw Inapplicable("a^" + std::to_string(i) + " lies in the thin residue");
    const std::size_t ci = sr.class_of(ai);
    const ElementSet k = right_stabilizer(sr, ci);
    stabilizers.push_back(k);
    const auto t = std::find_if(k.begin(), k.end(), [&](Elem h) { return g.normal_form(h).b == 1; });
    if (t == k.end())
      throw Inapplicable("stabilizer of the class of a^" + std::to_string(i) +
                         " has no element with b-exponent 1");
    steps_[i] = *t;
    const Elem shift = g.mul(g.inv(g.b()), *t);
    int x = -1;
    for (int v = 0; v < p_ && x < 0; ++v)
      if (g.pow(z_, v) == shift) x = v;
    if (x < 0) throw Inapplicable("b^{-1} t_" + std::to_string(i) + " is not a power of z");
    xs_[i] = x;

    for (int j = 0; j < p_; ++j) {
      const Elem zj = g.pow(z_, j);
      std::vector<Elem> block;
      Elem tm = g.identity();
      for (int m = 0; m < p_; ++m, tm = g.mul(tm, *t)) block.push_back(g.mul(g.mul(ai, tm), zj));
      const std::size_t c = sr.class_of(block.front());
      if (make_set(block) != sr.cls(c)) throw Error("ordered block is not a basic set");
      for (int m = 0; m < p_; ++m) ordinal_[block[m]] = m;
      index_[i][j] = c;
      ordered_[i][j] = std::move(block);
    }
  }
  std::sort(stabilizers.begin(), stabilizers.end());
  if (std::adjacent_find(stabilizers.begin(), stabilizers.end()) != stabilizers.end())
    throw Inapplicable("the classes of a, ..., a^{p-1} do not have distinct stabilizers");
}

std::vector<Elem> OrderedBasis::full_order() const {
  std::vector<Elem> out = l_;
  for (int i = 1; i < p_; ++i)
    for (int j = 0; j < p_; ++j) out.insert(out.end(), ordered_[i][j].begin(), ordered_[i][j].end());
  return out;
}

// ------------------------------------------------------------------ gamma1

std::vector<std::vector<Elem>> gamma1_restrictions(const CayleyScheme& cs,
                                                   const std::vector<Elem>& order) {
  const std::size_t p = order.size();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> images(p);
  std::vector<char> used(p, 0);

  auto rec = [&](auto&& self, std::size_t m) -> void {
    if (m == p) {
      if (is_single_cycle(order, images)) out.push_back(images);
      return;
    }
    for (std::size_t c = 0; c < p; ++c) {
      if (used[c]) continue;
      const Elem y = order[c];
      bool ok = true;
      for (std::size_t q = 0; q < m && ok; ++q)
        ok = cs.color(images[q], y) == cs.color(order[q], order[m]) &&
             cs.color(y, images[q]) == cs.color(order[m], order[q]);
      if (!ok) continue;
      used[c] = 1;
      images[m] = y;
      self(self, m + 1);
      used[c] = 0;
    }
  };
  // A p-cycle moves every point, so the first image is never order[0].
  for (std::size_t c = 1; c < p; ++c) {
    used.assign(p, 0);
    used[c] = 1;
    images[0] = order[c];
    rec(rec, 1);
  }
  return out;
}

std::vector<std::vector<Elem>> gamma1_restrictions(const CayleyScheme& cs, std::size_t class_index) {
  const ElementSet& t = cs.sring().cls(class_index);
  return gamma1_restrictions(cs, std::vector<Elem>(t.begin(), t.end()));
}

bool is_gamma1(const CayleyScheme& cs, const ElementSet& l, const Permutation& sigma) {
  if (sigma.size() != cs.size() || !is_permutation(sigma)) return false;
  for (Elem x = 0; x < sigma.size(); ++x)
    if ((sigma[x] == x) != contains(l, x)) return false;
  const SRing& sr = cs.sring();
  const std::size_t p = cs.group().prime();
  for (std::size_t c = 0; c < sr.rank(); ++c) {
    const ElementSet& t = sr.cls(c);
    if (t.size() != p) continue;
    std::vector<Elem> images;
    for (Elem x : t) {
      if (!contains(t, sigma[x])) return false;
      images.push_back(sigma[x]);
    }
    if (!is_single_cycle(std::vector<Elem>(t.begin(), t.end()), images)) return false;
    if (!are_compatible(cs, sigma, t, t)) return false;
  }
  return true;
}

bool are_compatible(const CayleyScheme& cs, const Permutation& sigma, const ElementSet& t,
                    const ElementSet& t2) {
  for (Elem b : t)
    for (Elem c : t2)
      if (cs.color(b, c) != cs.color(sigma[b], sigma[c])) return false;
  return true;
}

// ---------------------------------------------------------------- criterion

CompatibilityResult schurity_by_compatibility(const CayleyScheme& cs) {
  const OrderedBasis basis(cs.sring());
  const int p = basis.prime();
  const Group& g = cs.group();
  CompatibilityResult result;

  Permutation sigma = identity_permutation(cs.size());
  std::vector<Elem> assigned;  // points of T_1, ..., T_j already mapped

  // Extends sigma to T_j, ..., T_{p-1}, keeping every pair among assigned
  // points relation-preserving.
  auto extend = [&](auto&& self, int j) -> bool {
    if (j == p) return true;
    const std::vector<Elem>& order = basis.ordered(j, 0);
    std::vector<Elem> images(p);
    std::vector<char> used(p, 0);
    const std::size_t before = assigned.size();

    auto place = [&](auto&& place_self, int m) -> bool {
      if (m == p) {
        if (!is_single_cycle(order, images)) return false;
        return self(self, j + 1);
      }
      const Elem beta = order[m];
      for (int c = 0; c < p; ++c) {
        if (used[c]) continue;
        const Elem y = order[c];
        if (c == m) continue;  // no fixed points outside L
        bool ok = true;
        for (std::size_t q = 0; q < assigned.size() && ok; ++q) {
          const Elem alpha = assigned[q];
          ok = cs.color(sigma[alpha], y) == cs.color(alpha, beta) &&
               cs.color(y, sigma[alpha]) == cs.color(beta, alpha);
        }
        if (!ok) continue;
        used[c] = 1;
        images[m] = y;
        sigma[beta] = y;
        assigned.push_back(beta);
        if (place_self(place_self, m + 1)) return true;
        assigned.pop_back();
        sigma[beta] = beta;
        used[c] = 0;
      }
      return false;
    };
    const bool ok = place(place, 0);
    if (!ok) assigned.resize(before);
    return ok;
  };

  const std::vector<Elem>& first = basis.ordered(1, 0);
  for (const auto& cand : gamma1_restrictions(cs, first)) {
    ++result.candidates_tried;
    sigma = identity_permutation(cs.size());
    assigned.clear();
    for (int m = 0; m < p; ++m) {
      sigma[first[m]] = cand[m];
      assigned.push_back(first[m]);
    }
    if (!extend(extend, 2)) continue;

    result.schurian = true;
    for (int i = 1; i < p; ++i) {
      std::vector<Elem> images;
      for (Elem h : basis.ordered(i, 0)) images.push_back(sigma[h]);
      result.restriction.push_back(std::move(images));
    }
    Permutation ext = identity_permutation(cs.size());
    for (int i = 1; i < p; ++i)
      for (int l = 0; l < p; ++l) {
        const Elem zl = g.pow(basis.z(), l);
        for (int m = 0; m < p; ++m)
          ext[basis.ordered(i, l)[m]] = g.mul(sigma[basis.ordered(i, 0)[m]], zl);
      }
    result.witness_is_automorphism = is_scheme_automorphism(cs, ext);
    result.witness = std::move(ext);
    break;
  }
  return result;
}

CompatibilityResult schurity_by_compatibility(const SRing& sr) {
  return schurity_by_compatibility(CayleyScheme(sr));
}

// ------------------------------------------------------------- congruences

CongruenceLine make_line(int p, int a, int b) {
  CongruenceLine out;
  out.p = p;
  out.a = mod(a, p);
  out.b = mod(b, p);
  return out;
}

bool CongruenceLine::holds(int n, int l) const { return mod(long(a) * n - long(b) * l, p) == 0; }

bool CongruenceLine::equivalent(const CongruenceLine& o) const {
  if (p != o.p) return false;
  if ((a == 0 && b == 0) || (o.a == 0 && o.b == 0)) return a == o.a && b == o.b;
  return mod(long(a) * o.b - long(o.a) * b, p) == 0;
}

std::pair<int, int> CongruenceLine::normalized() const {
  if (a != 0) return {1, mod(long(b) * inverse_mod(a, p), p)};
  return {0, b == 0 ? 0 : 1};
}

std::string CongruenceLine::to_string() const {
  return std::to_string(a) + "n ≡ " + std::to_string(b) + "l (mod " + std::to_string(p) + ")";
}

CongruenceLine compose(const CongruenceLine& first, const CongruenceLine& second) {
  if (first.p != second.p) throw Error("composing congruences modulo different primes");
  CongruenceLine out = make_line(first.p, first.a * second.a, first.b * second.b);
  out.i = first.i;
  out.j = second.j;
  return out;
}

CongruenceLine triple_congruence(const CayleyScheme& cs, const OrderedBasis& basis, int i, int j,
                                 int k) {
  const int p = basis.prime();
  for (int v : {i, j, k})
    if (v < 1 || v >= p) throw OutOfRange("class index " + std::to_string(v) + " is not in [1, p)");
  const BlockMatrix block(cs, basis.ordered(i, 0), basis.ordered(j, 0), basis.class_index(k, 0));
  if (mod(k + i - j, p) != 0 || block.empty())
    throw EmptyIntersection("R(T_" + std::to_string(k) + ") does not meet T_" + std::to_string(i) +
                            " x T_" + std::to_string(j));
  if (cs.group().family() == Family::H1 && k + i != j)
    throw Inapplicable("a^" + std::to_string(k) + " a^" + std::to_string(i) + " != a^" +
                       std::to_string(j) + " in H1");

  CongruenceLine line = make_line(p, basis.x(i) - basis.x(k) + i, basis.x(j) - basis.x(k) + i);
  line.i = i;
  line.j = j;
  line.k = k;
  for (int n = 0; n < p; ++n)
    for (int l = 0; l < p; ++l)
      if (block(n, l) != line.holds(n, l))
        throw Error("congruence " + line.to_string() + " disagrees with the block at (" +
                    std::to_string(n) + "," + std::to_string(l) + ")");
  return line;
}

CongruenceLine triple_congruence(const SRing& sr, int i, int j, int k) {
  const CayleyScheme cs(sr);
  return triple_congruence(cs, OrderedBasis(cs.sring()), i, j, k);
}

// --------------------------------------------------------------- section 5

Section5Report section5_walkthrough(int p, bool run_automorphism_check, const AutOptions& opts) {
  if (p % 4 != 3) throw Inapplicable("p = " + std::to_string(p) + " is not 3 mod 4");
  if (p < 7) throw Inapplicable("no suitable sequence with x_2 = (p+1)/2 for p = " + std::to_string(p));
  const SuitableSequence seq = mod4_3_sequence(p);
  if (seq.at(3) != p - 1) throw Inapplicable("x_3 != p-1 for p = " + std::to_string(p));

  Section5Report rep;
  rep.p = p;
  rep.sequence = seq.x;
  const CayleyScheme cs(sring_h1_from_sequence(seq));
  const OrderedBasis basis(cs.sring());

  rep.case1 = triple_congruence(cs, basis, 1, 2, 1);
  rep.case2 = triple_congruence(cs, basis, 2, 3, 1);
  rep.case3 = triple_congruence(cs, basis, 1, 3, 2);
  rep.composed = compose(rep.case1, rep.case2);
  rep.case1_matches = rep.case1.equivalent(make_line(p, 2, 3));
  rep.case2_matches = rep.case2.equivalent(make_line(p, 5, 2));
  rep.case3_matches = rep.case3.equivalent(make_line(p, p - 1, 1));
  rep.composed_matches = rep.composed.equivalent(make_line(p, 5, 3));
  rep.case3_at_witness = rep.case3.holds(p - 1, 1);
  rep.composed_at_witness = rep.composed.holds(p - 1, 1);

  const Group& g = cs.group();
  const Elem a1 = g.a(), a2 = g.pow(g.a(), 2), a3 = g.pow(g.a(), 3);
  rep.zero_pairs = cs.color(a1, a2) == basis.class_index(1, 0) &&
                   cs.color(a2, a3) == basis.class_index(1, 0) &&
                   cs.color(a1, a3) == basis.class_index(2, 0);

  rep.non_schurian = rep.case3_at_witness && !rep.composed_at_witness;
  rep.compatibility_agrees = schurity_by_compatibility(cs).schurian != rep.non_schurian;
  if (run_automorphism_check)
    rep.automorphism_agrees = is_schurian(cs, opts).schurian != rep.non_schurian;
  return rep;
}

}  // namespace schur
