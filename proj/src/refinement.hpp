#pragma once

// Ordered partition refinement on a colored complete digraph. Cells are
// contiguous ranges of `elems`, named by their start position.

#include <cstdint>
#include <vector>

#include "schur/scheme.hpp"

namespace schur::detail {

struct Cells {
  std::vector<Elem> elems;
  std::vector<std::uint32_t> cell_of;  // point -> start of its cell
  std::vector<std::uint32_t> end;      // start -> one past the cell's last position
  std::size_t cell_count = 0;

  explicit Cells(std::size_t n);
  bool discrete() const { return cell_count == elems.size(); }
  std::size_t first_nonsingleton() const;  // elems.size() if discrete
};

class Refiner {
 public:
  explicit Refiner(const ColorMatrix& colors);

  const ColorMatrix& colors() const { return colors_; }

  // Splits v off the front of its cell and refines. When `expected` is
  // given, the split trace is compared against it and refinement stops with
  // false at the first divergence; otherwise the trace is written to
  // `record`.
  bool individualize(Cells& c, Elem v, const std::vector<std::uint64_t>* expected,
                     std::vector<std::uint64_t>* record) const;

  bool refine(Cells& c, std::vector<std::uint32_t> splitters,
              const std::vector<std::uint64_t>* expected,
              std::vector<std::uint64_t>* record) const;

 private:
  const ColorMatrix& colors_;
  std::vector<Color> transposed_;
};

}  // namespace schur::detail
