#pragma once

// The two non-abelian groups of order p^3 for odd p:
//
//   H1 = <a, b | a^{p^2} = b^p = 1, ab = ba^{p+1}>
//   H2 = <a, b, c | a^p = b^p = c^p = 1, [a,b] = c central>
//
// Elements are indexed lexicographically by normal-form exponents
// (H1: a^i b^j with i major; H2: a^i b^j c^k with i major), so index 0 is
// the identity. The full Cayley table is precomputed.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "schur/error.hpp"

namespace schur {

using Elem = std::uint32_t;

// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Elem>;

enum class Family { H1, H2 };

// Largest prime the toolkit builds groups for.
inline constexpr int kMaxPrime = 13;

struct GroupSpec {
  Family family;
  int prime;

  // Throws InvalidPrime unless prime is an odd prime <= kMaxPrime.
  void validate() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

bool is_prime(long n);

// Exponents of a normal form; c is always 0 in H1.
struct NormalForm {
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

class Group {
 public:
  // Builds the Cayley table from the normal-form law and checks the group
  // axioms (exhaustively for p <= 7, on a deterministic sample above).
  explicit Group(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }
  int prime() const { return spec_.prime; }
  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }

  Elem mul(Elem x, Elem y) const { return table_[std::size_t(x) * order_ + y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  Elem pow(Elem x, long e) const;
  // Order of x as a group element.
  std::size_t element_order(Elem x) const;
  bool commute(Elem x, Elem y) const { return mul(x, y) == mul(y, x); }

  NormalForm normal_form(Elem x) const;
  // Exponents are reduced into their canonical ranges first.
  Elem element(NormalForm nf) const;
  // Product computed from the closed-form law, bypassing the table.
  Elem multiply_by_law(Elem x, Elem y) const;

  Elem a() const;
  Elem b() const;
  // Throws Error for H1, which has no generator named c.
  Elem c() const;
  // The central element used for class shifts: a^p in H1, c in H2.
  Elem central_generator() const;

  // `e`, or factors `a^i`, `b^j`, `c^k` joined by `*` (zero exponents omitted).
  std::string format(Elem x) const;
  // Accepts `e` or any `*`-joined word in a, b, c with optional integer
  // exponents; throws ParseError.
  Elem parse(std::string_view text) const;
  std::string format_set(const ElementSet& s) const;
  // `group=h1 p=7`
  std::string header() const;

 private:
  Elem index_of(int i, int j, int k) const;

  GroupSpec spec_;
  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inv_;
};

using GroupPtr = std::shared_ptr<const Group>;

// Throws InvalidPrime on a bad spec.
GroupPtr build_group(GroupSpec spec);

// Parses `group=h1 p=7`; throws ParseError.
GroupSpec parse_group_header(std::string_view line);
std::string family_name(Family f);
Family parse_family(std::string_view s);

ElementSet center(const Group& g);

// Closure of gens under the group operation. Throws EmptyGenerators.
ElementSet generate_subgroup(const Group& g, const ElementSet& gens);

bool is_subgroup(const Group& g, const ElementSet& s);

enum class Side { Left, Right };

// hK or Kh. Throws NotASubgroup if K is not a subgroup.
ElementSet coset(const Group& g, const ElementSet& subgroup, Elem h, Side side);

// True if every non-identity element has order p and the set is abelian.
bool is_elementary_abelian(const Group& g, const ElementSet& s);

ElementSet make_set(std::vector<Elem> v);
bool contains(const ElementSet& s, Elem x);

}  // namespace schur
