#include "schur/scheme.hpp"

#include <algorithm>
#include <tuple>

namespace schur {

ColorMatrix::ColorMatrix(std::size_t n, std::size_t rank, std::vector<Color> colors)
    : n_(n), rank_(rank), colors_(std::move(colors)) {
  if (colors_.size() != n * n) throw Error("color matrix has the wrong size");
  for (Color c : colors_)
    if (c >= rank) throw Error("color index out of range");
}

CayleyScheme::CayleyScheme(SRing sr) : sring_(std::move(sr)) {
  const Group& g = sring_.group();
  if (sring_.support().size() != g.order())
    throw Error("Cayley scheme needs an S-ring over the whole group");
  if (sring_.rank() > 0xffff) throw Error("too many classes for 16-bit colors");
  const std::size_t n = g.order();
  std::vector<Color> colors(n * n);
  for (Elem x = 0; x < n; ++x) {
    const Elem xi = g.inv(x);
    for (Elem y = 0; y < n; ++y)
      colors[std::size_t(x) * n + y] = static_cast<Color>(sring_.class_of(g.mul(y, xi)));
  }
  colors_ = ColorMatrix(n, sring_.rank(), std::move(colors));
}

ElementSet CayleyScheme::neighbourhood(Elem x, std::size_t s) const {
  ElementSet out;
  const Color* row = colors_.row(x);
  for (Elem y = 0; y < size(); ++y)
    if (row[y] == s) out.push_back(y);
  return out;
}

CayleyScheme scheme_from_sring(SRing sr) { return CayleyScheme(std::move(sr)); }

std::vector<ElementSet> relation_neighbourhoods_of_identity(const CayleyScheme& cs) {
  std::vector<ElementSet> out(cs.rank());
  const Color* row = cs.colors().row(cs.group().identity());
  for (Elem h = 0; h < cs.size(); ++h) out[row[h]].push_back(h);
  return out;
}

// ------------------------------------------------------ intersection numbers

IntersectionNumbers intersection_numbers(const ColorMatrix& colors, bool exhaustive) {
  const std::size_t n = colors.size();
  const std::size_t r = colors.rank();

  struct Entry {
    std::uint32_t key;  // s * r + t
    std::uint32_t count;
  };
  std::vector<std::vector<Entry>> rows_by_u(r);
  std::vector<char> have_u(r, 0);
  std::vector<std::pair<Elem, Elem>> witness_u(r);

  std::vector<std::uint32_t> count(r * r, 0);
  std::vector<std::uint32_t> touched;
  const std::size_t base_points = exhaustive ? n : 1;

  for (Elem x = 0; x < base_points; ++x) {
    const Color* xrow = colors.row(x);
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        const std::uint32_t key = std::uint32_t(xrow[z]) * r + colors(z, y);
        if (count[key]++ == 0) touched.push_back(key);
      }
      const Color u = xrow[y];
      if (!have_u[u]) {
        have_u[u] = 1;
        witness_u[u] = {x, y};
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t key : touched) rows_by_u[u].push_back({key, count[key]});
      } else {
        bool same = touched.size() == rows_by_u[u].size();
        for (const Entry& e : rows_by_u[u]) same = same && count[e.key] == e.count;
        if (!same) {
          const auto [x0, y0] = witness_u[u];
          throw InconsistentConstant(
              "intersection numbers for relation " + std::to_string(u) + " differ between (" +
              std::to_string(x0) + "," + std::to_string(y0) + ") and (" + std::to_string(x) +
              "," + std::to_string(y) + ")");
        }
      }
      for (std::uint32_t key : touched) count[key] = 0;
      touched.clear();
    }
  }

  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> triples;  // (key, u, value)
  for (std::uint32_t u = 0; u < r; ++u) {
    if (!have_u[u]) throw InconsistentConstant("relation " + std::to_string(u) + " is empty");
    for (const Entry& e : rows_by_u[u]) triples.emplace_back(e.key, u, e.count);
  }
  std::sort(triples.begin(), triples.end());

  IntersectionNumbers out;
  out.a = StructureConstants(r);
  std::size_t idx = 0;
  for (std::uint32_t key = 0; key < r * r; ++key) {
    std::vector<StructureConstants::Term> terms;
    for (; idx < triples.size() && std::get<0>(triples[idx]) == key; ++idx)
      terms.push_back({std::get<1>(triples[idx]), std::get<2>(triples[idx])});
    out.a.append_row(std::move(terms));
  }

  out.valency.assign(r, 0);
  for (Elem y = 0; y < n; ++y) ++out.valency[colors(0, y)];
  return out;
}

IntersectionNumbers intersection_numbers(const CayleyScheme& cs) {
  return intersection_numbers(cs.colors(), cs.size() <= 343);
}

bool matches_sring_constants(const IntersectionNumbers& in, const SRing& sr) {
  return in.a == sr.constants().transposed();
}

// ------------------------------------------------------------- lemma suite

namespace {

std::string triple(std::size_t s, std::size_t t, std::size_t u) {
  return "(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(u) + ")";
}

ClassSet row_support(const IntersectionNumbers& in, std::size_t s, std::size_t t) {
  ClassSet out;
  for (const auto& term : in.a.row(s, t)) out.push_back(term.k);
  return out;
}

}  // namespace

LemmaReport lemma_suite(const CayleyScheme& cs, const IntersectionNumbers& in) {
  LemmaReport rep;
  const std::size_t r = cs.rank();
  const std::size_t n = cs.size();
  const auto& a = in.a;
  const auto& nv = in.valency;
  auto fail = [&rep](std::string msg) {
    if (rep.violations.size() < 100) rep.violations.push_back(std::move(msg));
  };

  // Valency identities.
  for (std::size_t u = 0; u < r; ++u) {
    if (a(u, cs.converse(u), 0) != nv[u]) fail("valency of " + std::to_string(u));
    for (std::size_t v = 0; v < r; ++v) {
      std::uint64_t sum = 0;
      for (const auto& term : a.row(u, v)) sum += std::uint64_t(term.value) * nv[term.k];
      ++rep.checks;
      if (sum != std::uint64_t(nv[u]) * nv[v]) fail("n_u n_v = sum at " + triple(u, v, 0));
      for (std::size_t w = 0; w < r; ++w) {
        const std::uint64_t x1 = std::uint64_t(a(u, w, v)) * nv[v];
        const std::uint64_t x2 = std::uint64_t(a(cs.converse(u), v, w)) * nv[w];
        const std::uint64_t x3 = std::uint64_t(a(v, cs.converse(w), u)) * nv[u];
        ++rep.checks;
        if (x1 != x2 || x2 != x3) fail("a_uwv n_v identity at " + triple(u, v, w));
      }
    }
  }

  // rr* ∩ ss* = {1} iff a_{r* s t} <= 1 for all t.
  for (std::uint32_t rr = 1; rr < r; ++rr)
    for (std::uint32_t ss = 1; ss < r; ++ss) {
      const ClassSet left = complex_product(in, {rr}, {cs.converse(rr)});
      const ClassSet right = complex_product(in, {ss}, {cs.converse(ss)});
      ClassSet meet;
      std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                            std::back_inserter(meet));
      const bool trivial = meet == ClassSet{0};
      bool bounded = true;
      for (const auto& term : a.row(cs.converse(rr), ss)) bounded = bounded && term.value <= 1;
      ++rep.checks;
      if (trivial != bounded)
        fail("rr* ∩ ss* criterion at r=" + std::to_string(rr) + " s=" + std::to_string(ss));
    }

  // Column sums of e ∩ (xd × xf) and the relations meeting xd × xf.
  std::vector<std::uint32_t> nonzero_e(r * r, 0);  // #{e : a_{def} != 0} at d*r+f
  for (std::size_t d = 0; d < r; ++d)
    for (std::size_t e = 0; e < r; ++e)
      for (const auto& term : a.row(d, e)) ++nonzero_e[d * r + term.k];

  std::vector<std::uint32_t> cnt(r, 0);
  std::vector<char> seen(r, 0);
  std::vector<std::uint32_t> touched, seen_list;
  for (Elem x = 0; x < n; ++x) {
    std::vector<ElementSet> xs(r);
    const Color* xrow = cs.colors().row(x);
    for (Elem y = 0; y < n; ++y) xs[xrow[y]].push_back(y);
    for (std::size_t d = 0; d < r; ++d)
      for (std::size_t f = 0; f < r; ++f) {
        for (Elem y : xs[f]) {
          for (Elem w : xs[d]) {
            const Color e = cs.color(w, y);
            if (cnt[e]++ == 0) touched.push_back(e);
            if (!seen[e]) {
              seen[e] = 1;
              seen_list.push_back(e);
            }
          }
          bool ok = touched.size() == nonzero_e[d * r + f];
          for (std::uint32_t e : touched) ok = ok && cnt[e] == a(d, e, f);
          ++rep.checks;
          if (!ok)
            fail("column sums of block " + triple(d, 0, f) + " at x=" + std::to_string(x));
          for (std::uint32_t e : touched) cnt[e] = 0;
          touched.clear();
        }
        std::sort(seen_list.begin(), seen_list.end());
        ++rep.checks;
        if (seen_list != row_support(in, cs.converse(d), f))
          fail("relations meeting xd × xf differ from d*f at " + triple(d, 0, f) +
               " x=" + std::to_string(x));
        for (std::uint32_t e : seen_list) seen[e] = 0;
        seen_list.clear();
      }
  }
  return rep;
}

LemmaReport lemma_suite(const CayleyScheme& cs) {
  return lemma_suite(cs, intersection_numbers(cs));
}

// ------------------------------------------------------------ closed subsets

ClassSet complex_product(const IntersectionNumbers& in, const ClassSet& p, const ClassSet& q) {
  std::vector<char> mark(in.a.rank(), 0);
  for (auto s : p)
    for (auto t : q)
      for (const auto& term : in.a.row(s, t)) mark[term.k] = 1;
  ClassSet out;
  for (std::uint32_t k = 0; k < mark.size(); ++k)
    if (mark[k]) out.push_back(k);
  return out;
}

bool is_closed(const IntersectionNumbers& in, const ClassSet& t) {
  const ClassSet tt = complex_product(in, t, t);
  return std::includes(t.begin(), t.end(), tt.begin(), tt.end());
}

bool is_strongly_normal(const CayleyScheme& cs, const IntersectionNumbers& in, const ClassSet& t) {
  if (!is_closed(in, t)) return false;
  for (std::uint32_t s = 0; s < cs.rank(); ++s) {
    const ClassSet conj = complex_product(in, complex_product(in, {cs.converse(s)}, t), {s});
    if (!std::includes(t.begin(), t.end(), conj.begin(), conj.end())) return false;
  }
  return true;
}

ClassSet closed_hull(const IntersectionNumbers& in, ClassSet t) {
  t.push_back(0);
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  for (;;) {
    ClassSet next = complex_product(in, t, t);
    ClassSet merged;
    std::set_union(t.begin(), t.end(), next.begin(), next.end(), std::back_inserter(merged));
    if (merged == t) return t;
    t = std::move(merged);
  }
}

ClassSet thin_residue_by_intersection(const CayleyScheme& cs, const IntersectionNumbers& in) {
  // Closed subsets are exactly the A-subgroups read as sets of relations.
  ClassSet meet;
  bool first = true;
  for (const ElementSet& k : a_subgroups(cs.sring())) {
    ClassSet t;
    for (Elem h : k) t.push_back(cs.sring().class_of(h));
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (!is_strongly_normal(cs, in, t)) continue;
    if (first) {
      meet = t;
      first = false;
    } else {
      ClassSet next;
      std::set_intersection(meet.begin(), meet.end(), t.begin(), t.end(),
                            std::back_inserter(next));
      meet = std::move(next);
    }
  }
  return meet;
}

ClassSet thin_residue_by_generation(const CayleyScheme& cs, const IntersectionNumbers& in) {
  ClassSet gens;
  for (std::uint32_t s = 0; s < cs.rank(); ++s) {
    const ClassSet ss = complex_product(in, {cs.converse(s)}, {s});
    gens.insert(gens.end(), ss.begin(), ss.end());
  }
  return closed_hull(in, std::move(gens));
}

bool is_p_scheme(const CayleyScheme& cs) {
  const std::size_t p = cs.group().prime();
  auto power_of_p = [p](std::size_t v) {
    while (v > 1 && v % p == 0) v /= p;
    return v == 1;
  };
  std::size_t total = 0;
  for (std::size_t s = 0; s < cs.rank(); ++s) {
    if (!power_of_p(cs.valency(s))) return false;
    total += cs.valency(s);
  }
  return power_of_p(total);
}

bool is_commutative(const IntersectionNumbers& in) {
  const std::size_t r = in.a.rank();
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = s + 1; t < r; ++t) {
      const auto x = in.a.row(s, t);
      const auto y = in.a.row(t, s);
      if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) return false;
    }
  return true;
}

ThinResidueShape thin_residue_shape(const CayleyScheme& cs, const IntersectionNumbers& in) {
  ThinResidueShape out;
  out.residue = thin_residue_by_generation(cs, in);
  const ClassSet& t = out.residue;
  out.thin = std::all_of(t.begin(), t.end(), [&](std::uint32_t s) { return in.valency[s] == 1; });
  out.closed = is_closed(in, t);
  const std::size_t p = cs.group().prime();
  out.order_p_squared = t.size() == p * p;
  if (!out.thin || !out.closed) return out;

  // Relational product of thin relations is again a single thin relation.
  auto product = [&](std::uint32_t s, std::uint32_t u) -> std::uint32_t {
    const auto row = in.a.row(s, u);
    if (row.size() != 1) throw Error("product of thin relations is not thin");
    return row.front().k;
  };
  bool ea = true;
  for (std::uint32_t s : t) {
    for (std::uint32_t u : t) ea = ea && product(s, u) == product(u, s);
    if (s == 0) continue;
    std::uint32_t acc = s;
    std::size_t order = 1;
    while (acc != 0) {
      acc = product(acc, s);
      ++order;
    }
    ea = ea && order == p;
  }
  out.elementary_abelian = ea;
  return out;
}

// ------------------------------------------------------------- block matrix

BlockMatrix::BlockMatrix(const CayleyScheme& cs, std::vector<Elem> rows, std::vector<Elem> cols,
                         std::size_t e)
    : rows_(std::move(rows)), cols_(std::move(cols)), bits_(rows_.size() * cols_.size(), 0) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_.size(); ++j)
      bits_[i * cols_.size() + j] = cs.color(rows_[i], cols_[j]) == e;
}

bool BlockMatrix::empty() const {
  return std::none_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; });
}

std::vector<std::size_t> BlockMatrix::column_sums() const {
  std::vector<std::size_t> out(cols(), 0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) out[j] += (*this)(i, j);
  return out;
}

bool BlockMatrix::is_permutation() const {
  if (rows() != cols()) return false;
  std::vector<std::size_t> row_sum(rows(), 0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) row_sum[i] += (*this)(i, j);
  const auto col_sum = column_sums();
  return std::all_of(row_sum.begin(), row_sum.end(), [](std::size_t v) { return v == 1; }) &&
         std::all_of(col_sum.begin(), col_sum.end(), [](std::size_t v) { return v == 1; });
}

std::vector<std::size_t> BlockMatrix::permutation() const {
  if (empty()) throw EmptyBlock("relation does not meet the block");
  if (!is_permutation()) throw Error("block is not a permutation matrix");
  std::vector<std::size_t> out(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if ((*this)(i, j)) out[i] = j;
  return out;
}

BlockMatrix block_matrix(const CayleyScheme& cs, std::size_t d, std::size_t e, std::size_t f,
                         Elem x) {
  return BlockMatrix(cs, cs.neighbourhood(x, d), cs.neighbourhood(x, f), e);
}

std::string export_scheme(const CayleyScheme& cs) {
  std::string out = cs.group().header() + " classes=" + std::to_string(cs.rank()) + "\n";
  for (Elem x = 0; x < cs.size(); ++x) {
    const Color* row = cs.colors().row(x);
    for (Elem y = 0; y < cs.size(); ++y) {
      if (y) out += ',';
      out += std::to_string(row[y]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace schur
