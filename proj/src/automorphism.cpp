#include "schur/automorphism.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "refinement.hpp"

namespace schur {

bool is_permutation(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (Elem x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<Elem>(x);
  return out;
}

bool preserves_colors(const ColorMatrix& colors, const Permutation& p) {
  const std::size_t n = colors.size();
  if (p.size() != n || !is_permutation(p)) return false;
  for (std::size_t x = 0; x < n; ++x) {
    const Color* row = colors.row(x);
    const Color* image_row = colors.row(p[x]);
    for (std::size_t y = 0; y < n; ++y)
      if (row[y] != image_row[p[y]]) return false;
  }
  return true;
}

bool is_scheme_automorphism(const CayleyScheme& cs, const Permutation& p) {
  const Elem e = cs.group().identity();
  return p.size() == cs.size() && p[e] == e && preserves_colors(cs.colors(), p);
}

namespace {

struct Level {
  detail::Cells cells;
  std::vector<std::uint64_t> trace;  // trace of the refinement that produced it
};

class Search {
 public:
  Search(const ColorMatrix& colors, Elem fixed) : refiner_(colors) {
    detail::Cells root(colors.size());
    std::vector<std::uint64_t> trace;
    refiner_.individualize(root, fixed, nullptr, &trace);
    levels_.push_back({std::move(root), std::move(trace)});
    for (;;) {
      const detail::Cells& top = levels_.back().cells;
      const std::size_t s = top.first_nonsingleton();
      if (s == top.elems.size()) break;
      const Elem b = *std::min_element(top.elems.begin() + s, top.elems.begin() + top.end[s]);
      detail::Cells next = top;
      std::vector<std::uint64_t> t;
      refiner_.individualize(next, b, nullptr, &t);
      base_.push_back(b);
      cell_at_.push_back(static_cast<std::uint32_t>(s));
      levels_.push_back({std::move(next), std::move(t)});
    }
  }

  const std::vector<Elem>& base() const { return base_; }

  // Points in the cell of base[k] at level k, ascending.
  std::vector<Elem> candidates(std::size_t k) const {
    const detail::Cells& c = levels_[k].cells;
    const std::uint32_t s = cell_at_[k];
    std::vector<Elem> out(c.elems.begin() + s, c.elems.begin() + c.end[s]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // An automorphism fixing base[0..k) and sending base[k] to w, if any.
  std::optional<Permutation> find(std::size_t k, Elem w) const {
    detail::Cells r = levels_[k].cells;
    if (!refiner_.individualize(r, w, &levels_[k + 1].trace, nullptr)) return std::nullopt;
    if (r.cell_count != levels_[k + 1].cells.cell_count) return std::nullopt;
    Permutation out;
    if (descend(k + 1, r, out)) return out;
    return std::nullopt;
  }

 private:
  bool descend(std::size_t k, const detail::Cells& r, Permutation& out) const {
    if (k == base_.size()) {
      const detail::Cells& left = levels_[k].cells;
      out.assign(left.elems.size(), 0);
      for (std::size_t i = 0; i < left.elems.size(); ++i) out[left.elems[i]] = r.elems[i];
      return preserves_colors(refiner_.colors(), out);
    }
    const std::uint32_t s = cell_at_[k];
    std::vector<Elem> cands(r.elems.begin() + s, r.elems.begin() + r.end[s]);
    std::sort(cands.begin(), cands.end());
    for (Elem w : cands) {
      detail::Cells next = r;
      if (!refiner_.individualize(next, w, &levels_[k + 1].trace, nullptr)) continue;
      if (next.cell_count != levels_[k + 1].cells.cell_count) continue;
      if (descend(k + 1, next, out)) return true;
    }
    return false;
  }

  detail::Refiner refiner_;
  std::vector<Level> levels_;
  std::vector<Elem> base_;
  std::vector<std::uint32_t> cell_at_;
};

struct Generator {
  std::size_t level;
  Permutation perm;
};

// Orbit of x under the generators at or below `level` in the chain.
std::vector<Elem> orbit_of(Elem x, const std::vector<Generator>& gens, std::size_t level,
                           std::size_t n) {
  std::vector<char> in(n, 0);
  std::vector<Elem> orbit{x};
  in[x] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : gens) {
      if (g.level < level) continue;
      const Elem y = g.perm[orbit[i]];
      if (!in[y]) {
        in[y] = 1;
        orbit.push_back(y);
      }
    }
  return orbit;
}

std::vector<ElementSet> orbits_under(const std::vector<Generator>& gens, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::vector<ElementSet> out;
  for (Elem x = 0; x < n; ++x) {
    if (seen[x]) continue;
    auto orbit = orbit_of(x, gens, 0, n);
    for (Elem y : orbit) seen[y] = 1;
    out.push_back(make_set(std::move(orbit)));
  }
  return out;
}

}  // namespace

AutResult stabilizer_automorphisms(const ColorMatrix& colors, Elem fixed, const AutOptions& opts) {
  const std::size_t n = colors.size();
  const Search search(colors, fixed);
  const std::size_t m = search.base().size();
  const unsigned threads = std::max(1u, opts.threads);

  std::vector<Generator> gens;
  std::vector<std::size_t> orbit_sizes(m, 1);

  for (std::size_t k = m; k-- > 0;) {
    const Elem b = search.base()[k];
    std::vector<char> in_orbit(n, 0), failed(n, 0);
    auto refresh_orbit = [&] {
      for (Elem y : orbit_of(b, gens, k, n)) in_orbit[y] = 1;
    };
    refresh_orbit();
    const std::vector<Elem> cands = search.candidates(k);

    std::size_t next = 0;
    while (next < cands.size()) {
      std::vector<Elem> batch;
      for (; next < cands.size() && batch.size() < threads; ++next)
        if (!in_orbit[cands[next]] && !failed[cands[next]]) batch.push_back(cands[next]);
      if (batch.empty()) continue;

      std::vector<std::optional<Permutation>> found(batch.size());
      if (batch.size() == 1) {
        found[0] = search.find(k, batch[0]);
      } else {
        std::vector<std::future<std::optional<Permutation>>> jobs;
        for (Elem w : batch)
          jobs.push_back(std::async(std::launch::async, [&search, k, w] { return search.find(k, w); }));
        for (std::size_t i = 0; i < batch.size(); ++i) found[i] = jobs[i].get();
      }

      for (std::size_t i = 0; i < batch.size(); ++i) {
        const Elem w = batch[i];
        if (in_orbit[w] || failed[w]) continue;
        if (found[i]) {
          gens.push_back({k, std::move(*found[i])});
          refresh_orbit();
        } else {
          // Nothing in the orbit of w under the known group is reachable either.
          for (Elem y : orbit_of(w, gens, k, n)) failed[y] = 1;
        }
      }
    }
    orbit_sizes[k] = static_cast<std::size_t>(std::count(in_orbit.begin(), in_orbit.end(), 1));
  }

  AutResult out;
  out.base = search.base();
  out.basic_orbit_sizes = orbit_sizes;
  out.stabilizer_order = 1;
  for (std::size_t s : orbit_sizes) out.stabilizer_order *= s;
  out.full_aut_order = out.stabilizer_order * n;
  for (const auto& g : gens) out.generators.push_back(g.perm);
  out.orbits = orbits_under(gens, n);

  if (out.stabilizer_order <= opts.enumeration_cap) {
    // Every element is u_0 u_1 ... u_{m-1} with u_k from a transversal of
    // the level-k basic orbit.
    std::vector<Permutation> elements{identity_permutation(n)};
    for (std::size_t k = m; k-- > 0;) {
      const Elem b = search.base()[k];
      std::vector<Permutation> transversal{identity_permutation(n)};
      std::vector<char> in(n, 0);
      std::vector<Elem> points{b};
      in[b] = 1;
      for (std::size_t i = 0; i < points.size(); ++i)
        for (const auto& g : gens) {
          if (g.level < k) continue;
          const Elem y = g.perm[points[i]];
          if (!in[y]) {
            in[y] = 1;
            points.push_back(y);
            transversal.push_back(compose(g.perm, transversal[i]));
          }
        }
      std::vector<Permutation> next;
      next.reserve(transversal.size() * elements.size());
      for (const auto& u : transversal)
        for (const auto& h : elements) next.push_back(compose(u, h));
      elements = std::move(next);
    }
    std::sort(elements.begin(), elements.end());
    out.stabilizer_elements = std::move(elements);
    out.enumerated = true;
  }
  return out;
}

AutResult stabilizer_automorphisms(const CayleyScheme& cs, const AutOptions& opts) {
  return stabilizer_automorphisms(cs.colors(), cs.group().identity(), opts);
}

SchurityCertificate is_schurian(const CayleyScheme& cs, const AutOptions& opts) {
  SchurityCertificate cert;
  cert.aut = stabilizer_automorphisms(cs, opts);
  const SRing& sr = cs.sring();
  std::vector<std::vector<ElementSet>> per_class(sr.rank());
  for (const auto& orbit : cert.aut.orbits) {
    const auto k = sr.class_of(orbit.front());
    for (Elem x : orbit)
      if (sr.class_of(x) != k)
        throw StabilizerOrbitNotInClass("stabilizer orbit containing " + sr.group().format(orbit.front()) +
                                        " meets two basic sets");
    per_class[k].push_back(orbit);
  }
  cert.schurian = true;
  for (std::size_t k = 0; k < sr.rank(); ++k)
    if (per_class[k].size() > 1) {
      cert.schurian = false;
      cert.split_class = k;
      cert.split_orbits = per_class[k];
      break;
    }
  return cert;
}

SchurityCertificate is_schurian(const SRing& sr, const AutOptions& opts) {
  return is_schurian(CayleyScheme(sr), opts);
}

OrderPrecheck aut_order_precheck(const SRing& sr, const AutResult& aut) {
  const auto ab = check_conditions_AB(sr);
  if (!ab.holds_A || !ab.holds_B)
    throw ConditionsABRequired("conditions (A) and (B) must hold for the order precheck");
  return aut.stabilizer_order == sr.group().prime() ? OrderPrecheck::MaybeSchurian
                                                     : OrderPrecheck::CertainlyNot;
}

OrderPrecheck aut_order_precheck(const SRing& sr, const AutOptions& opts) {
  const auto ab = check_conditions_AB(sr);
  if (!ab.holds_A || !ab.holds_B)
    throw ConditionsABRequired("conditions (A) and (B) must hold for the order precheck");
  return aut_order_precheck(sr, stabilizer_automorphisms(CayleyScheme(sr), opts));
}

std::string format_permutation(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out + "]";
}

}  // namespace schur
