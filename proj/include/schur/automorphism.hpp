#pragma once

// Color-preserving permutations of a Cayley scheme that fix the identity,
// computed by individualization-refinement backtracking along a base.

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schur/scheme.hpp"

namespace schur {

using BigInt = boost::multiprecision::cpp_int;

// images[x] is the image of x.
using Permutation = std::vector<Elem>;

bool is_permutation(const Permutation& p);
Permutation identity_permutation(std::size_t n);
// (a * b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

// color(x, y) == color(p(x), p(y)) on all pairs.
bool preserves_colors(const ColorMatrix& colors, const Permutation& p);
// Color preserving and fixes the identity.
bool is_scheme_automorphism(const CayleyScheme& cs, const Permutation& p);

struct AutOptions {
  // Elements are listed only when the stabilizer order is at most this.
  std::size_t enumeration_cap = 1000000;
  unsigned threads = 1;
};

struct AutResult {
  std::vector<Elem> base;
  std::vector<std::size_t> basic_orbit_sizes;
  std::vector<Permutation> generators;  // strong generating set along the base
  BigInt stabilizer_order;
  BigInt full_aut_order;  // stabilizer_order * |H|
  std::vector<ElementSet> orbits;  // orbits of the stabilizer, by minimum element
  bool enumerated = false;
  std::vector<Permutation> stabilizer_elements;  // lexicographic; filled when enumerated
};

// The full stabilizer of `fixed` in the automorphism group of the colored
// digraph. Deterministic for any thread count.
AutResult stabilizer_automorphisms(const ColorMatrix& colors, Elem fixed,
                                   const AutOptions& opts = {});
AutResult stabilizer_automorphisms(const CayleyScheme& cs, const AutOptions& opts = {});

struct SchurityCertificate {
  bool schurian = false;
  AutResult aut;
  // On failure: a basic set and the orbits it splits into.
  std::size_t split_class = 0;
  std::vector<ElementSet> split_orbits;
};

// Schurian iff the stabilizer orbits are exactly the basic sets. Throws
// StabilizerOrbitNotInClass if an orbit crosses two basic sets.
SchurityCertificate is_schurian(const SRing& sr, const AutOptions& opts = {});
SchurityCertificate is_schurian(const CayleyScheme& cs, const AutOptions& opts = {});

enum class OrderPrecheck { MaybeSchurian, CertainlyNot };

// CertainlyNot when |Aut(A)| != p. Throws ConditionsABRequired unless
// conditions (A) and (B) hold.
OrderPrecheck aut_order_precheck(const SRing& sr, const AutOptions& opts = {});
OrderPrecheck aut_order_precheck(const SRing& sr, const AutResult& aut);

// `[i0 i1 ... ]` image array.
std::string format_permutation(const Permutation& p);

}  // namespace schur
