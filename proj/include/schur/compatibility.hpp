#pragma once

// Schurity through compatible permutations for S-rings whose basic sets are
// the singletons of L plus the shifted families T_i z^j (1 <= i < p).

#include <optional>
#include <string>
#include <vector>

#include "schur/automorphism.hpp"
#include "schur/scheme.hpp"

namespace schur {

// Fixed orderings: L ascending; T_i z^j as (a^i t_i^m z^j)_{0 <= m < p}, where
// T_i is the basic set containing a^i and t_i is the element of St_R(T_i)
// with b-exponent 1.
class OrderedBasis {
 public:
  // Throws ConditionsABRequired unless (A), (B) and the shifted block
  // structure hold; Inapplicable if some a^i lies in L.
  explicit OrderedBasis(const SRing& sr);

  int prime() const { return p_; }
  Elem z() const { return z_; }
  const ElementSet& L() const { return l_; }
  // t_i and the exponent x_i with b^{-1} t_i = z^{x_i}.
  Elem step(int i) const { return steps_[i]; }
  int x(int i) const { return xs_[i]; }
  std::vector<int> sequence() const { return {xs_.begin() + 1, xs_.end()}; }

  std::size_t class_index(int i, int j) const { return index_[i][j]; }
  const std::vector<Elem>& ordered(int i, int j) const { return ordered_[i][j]; }
  // Ordinal of h inside its block T_i z^j.
  int ordinal(Elem h) const { return ordinal_[h]; }
  // (L, T_1, T_1 z, ..., T_{p-1} z^{p-1})
  std::vector<Elem> full_order() const;

 private:
  int p_;
  Elem z_;
  ElementSet l_;
  std::vector<Elem> steps_;
  std::vector<int> xs_;
  std::vector<std::vector<std::size_t>> index_;
  std::vector<std::vector<std::vector<Elem>>> ordered_;
  std::vector<int> ordinal_;
};

// All p-cycles on a size-p basic set preserving every relation inside it.
// Each result lists images aligned with `order`.
std::vector<std::vector<Elem>> gamma1_restrictions(const CayleyScheme& cs,
                                                   const std::vector<Elem>& order);
// Same, with the class in ascending element order.
std::vector<std::vector<Elem>> gamma1_restrictions(const CayleyScheme& cs, std::size_t class_index);

// Fixed points exactly L, and a relation-preserving p-cycle on every
// basic set of size p.
bool is_gamma1(const CayleyScheme& cs, const ElementSet& l, const Permutation& sigma);

// r(b, c) = r(sigma b, sigma c) for all (b, c) in T x T'.
bool are_compatible(const CayleyScheme& cs, const Permutation& sigma, const ElementSet& t,
                    const ElementSet& t2);

struct CompatibilityResult {
  bool schurian = false;
  std::size_t candidates_tried = 0;  // restrictions to T_1 examined
  // sigma on T_1, ..., T_{p-1} (images in basis order), when found.
  std::vector<std::vector<Elem>> restriction;
  // sigma extended to H: identity on L, sigma(h z^l) = sigma(h) z^l.
  std::optional<Permutation> witness;
  bool witness_is_automorphism = false;
};

// Throws ConditionsABRequired.
CompatibilityResult schurity_by_compatibility(const CayleyScheme& cs);
CompatibilityResult schurity_by_compatibility(const SRing& sr);

// A n = B l (mod p) between ordinals n in T_i and l in T_j.
struct CongruenceLine {
  int p = 0;
  int a = 0;
  int b = 0;
  int i = 0, j = 0, k = 0;

  bool holds(int n, int l) const;
  // Same solution set.
  bool equivalent(const CongruenceLine& o) const;
  // (1, B/A), or (0, 1) when A = 0.
  std::pair<int, int> normalized() const;
  std::string to_string() const;  // e.g. "2n ≡ 3l (mod 11)"
};

CongruenceLine make_line(int p, int a, int b);
// Chains n-in-T_i ~ l-in-T_j with n-in-T_j ~ l-in-T_k.
CongruenceLine compose(const CongruenceLine& first, const CongruenceLine& second);

// The congruence describing R(T_k) ∩ (T_i x T_j), checked entrywise against
// the block matrix. Throws EmptyIntersection when the block is empty and
// Inapplicable when a^k a^i != a^j as group elements (H1 wrap-around).
CongruenceLine triple_congruence(const CayleyScheme& cs, const OrderedBasis& basis, int i, int j,
                                 int k);
CongruenceLine triple_congruence(const SRing& sr, int i, int j, int k);

struct Section5Report {
  int p = 0;
  std::vector<int> sequence;
  CongruenceLine case1, case2, case3, composed;
  bool case1_matches = false;  // 2n ≡ 3l
  bool case2_matches = false;  // 5n ≡ 2l
  bool case3_matches = false;  // (p-1)n ≡ l
  bool composed_matches = false;  // 5n ≡ 3l
  bool case3_at_witness = false;     // (n, l) = (p-1, 1)
  bool composed_at_witness = false;
  bool zero_pairs = false;  // (a,a^2), (a^2,a^3) in R(T_1) and (a,a^3) in R(T_2)
  bool non_schurian = false;
  bool compatibility_agrees = false;
  std::optional<bool> automorphism_agrees;
};

// For p = 3 mod 4 with p >= 11, over H1(p) with the x_2 = (p+1)/2 sequence.
// Throws Inapplicable when x_3 != p-1 or p is out of range.
Section5Report section5_walkthrough(int p, bool run_automorphism_check = false,
                                    const AutOptions& opts = {});

}  // namespace schur
