#include "refinement.hpp"

#include <algorithm>

namespace schur::detail {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t h, std::uint64_t v) { return mix(h ^ mix(v)); }

}  // namespace

Cells::Cells(std::size_t n) : elems(n), cell_of(n, 0), end(n, 0), cell_count(n ? 1 : 0) {
  for (std::size_t i = 0; i < n; ++i) elems[i] = static_cast<Elem>(i);
  if (n) end[0] = static_cast<std::uint32_t>(n);
}

std::size_t Cells::first_nonsingleton() const {
  for (std::size_t s = 0; s < elems.size(); s = end[s])
    if (end[s] - s > 1) return s;
  return elems.size();
}

Refiner::Refiner(const ColorMatrix& colors) : colors_(colors) {
  const std::size_t n = colors.size();
  transposed_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) transposed_[y * n + x] = colors(x, y);
}

bool Refiner::individualize(Cells& c, Elem v, const std::vector<std::uint64_t>* expected,
                            std::vector<std::uint64_t>* record) const {
  const std::uint32_t s = c.cell_of[v];
  const std::uint32_t e = c.end[s];
  if (e - s == 1) return refine(c, {}, expected, record);
  const auto pos = std::find(c.elems.begin() + s, c.elems.begin() + e, v) - c.elems.begin();
  std::swap(c.elems[s], c.elems[pos]);
  c.end[s] = s + 1;
  c.end[s + 1] = e;
  for (std::uint32_t i = s + 1; i < e; ++i) c.cell_of[c.elems[i]] = s + 1;
  ++c.cell_count;
  return refine(c, {s}, expected, record);
}

bool Refiner::refine(Cells& c, std::vector<std::uint32_t> queue,
                     const std::vector<std::uint64_t>* expected,
                     std::vector<std::uint64_t>* record) const {
  const std::size_t n = c.elems.size();
  std::vector<char> queued(n, 0);
  for (auto s : queue) queued[s] = 1;
  std::vector<std::uint64_t> key(n, 0);
  std::size_t events = 0;

  auto emit = [&](std::uint64_t h) {
    if (expected) {
      if (events >= expected->size() || (*expected)[events] != h) return false;
    } else if (record) {
      record->push_back(h);
    }
    ++events;
    return true;
  };

  for (std::size_t head = 0; head < queue.size() && !c.discrete(); ++head) {
    const std::uint32_t s = queue[head];
    queued[s] = 0;
    const std::uint32_t e = c.end[s];

    std::fill(key.begin(), key.end(), 0);
    for (std::uint32_t i = s; i < e; ++i) {
      const Elem w = c.elems[i];
      const Color* out = transposed_.data() + std::size_t(w) * n;  // color(v, w)
      const Color* in = colors_.row(w);                              // color(w, v)
      for (std::size_t v = 0; v < n; ++v)
        key[v] += mix(std::uint64_t(out[v]) << 1) + mix((std::uint64_t(in[v]) << 1) | 1);
    }

    for (std::uint32_t start = 0; start < n;) {
      const std::uint32_t stop = c.end[start];
      if (stop - start > 1) {
        auto first = c.elems.begin() + start;
        auto last = c.elems.begin() + stop;
        std::sort(first, last, [&](Elem a, Elem b) { return key[a] < key[b]; });
        if (key[*first] != key[*(last - 1)]) {
          std::uint64_t h = combine(s, start);
          std::uint32_t frag = start;
          for (std::uint32_t i = start + 1; i <= stop; ++i) {
            if (i == stop || key[c.elems[i]] != key[c.elems[frag]]) {
              h = combine(h, combine(i - frag, key[c.elems[frag]]));
              c.end[frag] = i;
              for (std::uint32_t j = frag; j < i; ++j) c.cell_of[c.elems[j]] = frag;
              if (frag != start) ++c.cell_count;
              if (!queued[frag]) {
                queued[frag] = 1;
                queue.push_back(frag);
              }
              frag = i;
            }
          }
          if (!emit(h)) return false;
        }
      }
      start = stop;
    }
  }
  if (expected && events != expected->size()) return false;
  return true;
}

}  // namespace schur::detail
