#pragma once

// Suitable sequences (x_1, ..., x_{p-1}) over Z_p: x_1 = 0, distinct entries,
// and x_i + i = x_{p-i} (mod p) for 1 <= i <= (p-1)/2.

#include <string>
#include <string_view>
#include <vector>

#include "schur/sring.hpp"

namespace schur {

struct SuitableSequence {
  int p = 0;
  std::vector<int> x;  // x[0] is x_1
  int missing = 0;     // the residue not taken

  // 1-based access matching the usual indexing.
  int at(int i) const { return x.at(static_cast<std::size_t>(i - 1)); }
  friend bool operator==(const SuitableSequence&, const SuitableSequence&) = default;
  friend auto operator<=>(const SuitableSequence& a, const SuitableSequence& b) {
    return a.x <=> b.x;
  }
};

// Throws BadLength, OutOfRange, InvalidPrime.
bool is_suitable(const std::vector<int>& x, int p);
// Throws Error when x is not suitable.
SuitableSequence make_suitable(std::vector<int> x, int p);

// x_i = ((p-1)/2)(i-1) mod p.
SuitableSequence canonical_sequence(int p);
// A suitable sequence with x_2 = (p+1)/2 for p = 4k+3 >= 7, obtained by
// rearranging the canonical one. Throws WrongResidueClass.
SuitableSequence mod4_3_sequence(int p);

inline constexpr int kEnumerationCap = 13;
// All suitable sequences, lexicographically. Throws CapExceeded above cap.
std::vector<SuitableSequence> enumerate_suitable(int p, int cap = kEnumerationCap);

// `0,4,2,5,6,1`
std::vector<int> parse_sequence(std::string_view csv);
std::string format_sequence(const std::vector<int>& x);

// L = <a^p, b> in H1, <b, c> in H2.
ElementSet sequence_base_subgroup(const Group& g);
// t_i = b z^{x_i} with z the central generator.
Elem sequence_step(const Group& g, const SuitableSequence& s, int i);
// T_i z^j = { a^i t_i^m z^j : 0 <= m < p }.
ElementSet sequence_class(const Group& g, const SuitableSequence& s, int i, int j);

// Singletons on L plus the p(p-1) classes T_i z^j, validated.
SRing sring_from_sequence(GroupPtr g, const SuitableSequence& s);
SRing sring_h1_from_sequence(const SuitableSequence& s);
SRing sring_h2_from_sequence(const SuitableSequence& s);

}  // namespace schur
