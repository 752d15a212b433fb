#pragma once

// The Cayley scheme of an S-ring: X = H, and (x, y) lies in relation s iff
// y x^{-1} lies in basic set T_s. Relations are indexed by class index.

#include <cstdint>
#include <string>
#include <vector>

#include "schur/sring.hpp"

namespace schur {

using Color = std::uint16_t;

// A colored complete digraph stored as a dense n x n matrix.
class ColorMatrix {
 public:
  ColorMatrix() = default;
  ColorMatrix(std::size_t n, std::size_t rank, std::vector<Color> colors);

  std::size_t size() const { return n_; }
  std::size_t rank() const { return rank_; }
  Color operator()(std::size_t x, std::size_t y) const { return colors_[x * n_ + y]; }
  const Color* row(std::size_t x) const { return colors_.data() + x * n_; }

 private:
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::vector<Color> colors_;
};

class CayleyScheme {
 public:
  explicit CayleyScheme(SRing sr);

  const SRing& sring() const { return sring_; }
  const Group& group() const { return sring_.group(); }
  const ColorMatrix& colors() const { return colors_; }
  std::size_t size() const { return colors_.size(); }
  std::size_t rank() const { return colors_.rank(); }
  Color color(Elem x, Elem y) const { return colors_(x, y); }
  std::uint32_t converse(std::size_t s) const { return sring_.inverse_class(s); }
  std::size_t valency(std::size_t s) const { return sring_.cls(s).size(); }
  // xs = {y : (x, y) in s}, ascending.
  ElementSet neighbourhood(Elem x, std::size_t s) const;

 private:
  SRing sring_;
  ColorMatrix colors_;
};

CayleyScheme scheme_from_sring(SRing sr);

// Classes recovered as r(1_H) = {h : (1_H, h) in r}, one per relation.
std::vector<ElementSet> relation_neighbourhoods_of_identity(const CayleyScheme& cs);

// a(s, t, u) = |xs ∩ yt*| for (x, y) in u, stored sparsely per (s, t).
struct IntersectionNumbers {
  StructureConstants a;
  std::vector<std::uint32_t> valency;
};

// Verifies constancy on every pair (x, y) when exhaustive is set, otherwise
// on the pairs (x0, y) for a single base point x0. Throws
// InconsistentConstant with two witness pairs.
IntersectionNumbers intersection_numbers(const ColorMatrix& colors, bool exhaustive);
// Exhaustive up to 343 points.
IntersectionNumbers intersection_numbers(const CayleyScheme& cs);

// Group-algebra constants seen relationally: (x, y) in u factors through z
// as y x^{-1} = (y z^{-1})(z x^{-1}), so a(s, t, u) = c[t][s][u].
bool matches_sring_constants(const IntersectionNumbers& in, const SRing& sr);

struct LemmaReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustive verification of the valency identities, the rr* ∩ ss* criterion,
// block column sums and the support of xd × xf, over all relation triples and
// all base points.
LemmaReport lemma_suite(const CayleyScheme& cs, const IntersectionNumbers& in);
LemmaReport lemma_suite(const CayleyScheme& cs);

using ClassSet = std::vector<std::uint32_t>;  // sorted relation indices

ClassSet complex_product(const IntersectionNumbers& in, const ClassSet& p, const ClassSet& q);
bool is_closed(const IntersectionNumbers& in, const ClassSet& t);
bool is_strongly_normal(const CayleyScheme& cs, const IntersectionNumbers& in, const ClassSet& t);
// Smallest closed subset containing t.
ClassSet closed_hull(const IntersectionNumbers& in, ClassSet t);

// Intersection of all strongly normal closed subsets.
ClassSet thin_residue_by_intersection(const CayleyScheme& cs, const IntersectionNumbers& in);
// Closed subset generated by all s* s.
ClassSet thin_residue_by_generation(const CayleyScheme& cs, const IntersectionNumbers& in);

bool is_p_scheme(const CayleyScheme& cs);
bool is_commutative(const IntersectionNumbers& in);

struct ThinResidueShape {
  ClassSet residue;
  bool thin = false;
  bool closed = false;
  bool order_p_squared = false;
  bool elementary_abelian = false;
  bool ok() const { return thin && closed && order_p_squared && elementary_abelian; }
};

// Rebuilds the group formed by the thin residue's relations under the
// relational product and checks it is C_p x C_p.
ThinResidueShape thin_residue_shape(const CayleyScheme& cs, const IntersectionNumbers& in);

// 0/1 adjacency matrix of relation e restricted to rows x cols, in the
// given element orders.
class BlockMatrix {
 public:
  BlockMatrix(const CayleyScheme& cs, std::vector<Elem> rows, std::vector<Elem> cols,
              std::size_t e);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_.size(); }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * cols_.size() + j]; }
  const std::vector<Elem>& row_elements() const { return rows_; }
  const std::vector<Elem>& col_elements() const { return cols_; }

  bool empty() const;
  std::vector<std::size_t> column_sums() const;
  bool is_permutation() const;
  // Column position of the 1 in each row. Throws EmptyBlock if the block is
  // empty and Error if it is not a permutation matrix.
  std::vector<std::size_t> permutation() const;

  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
    return a.rows_.size() == b.rows_.size() && a.cols_.size() == b.cols_.size() &&
           a.bits_ == b.bits_;
  }

 private:
  std::vector<Elem> rows_, cols_;
  std::vector<std::uint8_t> bits_;
};

// Block of e on (xd × xf), rows and columns ascending by element index.
BlockMatrix block_matrix(const CayleyScheme& cs, std::size_t d, std::size_t e, std::size_t f,
                         Elem x);

// `group=h1 p=7 classes=91` followed by one comma-separated row per element.
std::string export_scheme(const CayleyScheme& cs);

}  // namespace schur
