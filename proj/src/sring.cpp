#include "schur/sring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace schur {

// ---------------------------------------------------------------- Partition

Partition::Partition(GroupPtr group, std::vector<ElementSet> classes)
    : Partition(std::move(group), std::move(classes), true) {}

Partition Partition::over_subgroup(GroupPtr group, std::vector<ElementSet> classes) {
  return Partition(std::move(group), std::move(classes), false);
}

Partition::Partition(GroupPtr group, std::vector<ElementSet> classes, bool whole_group)
    : group_(std::move(group)), classes_(std::move(classes)) {
  const Group& g = *group_;
  class_of_.assign(g.order(), kNoClass);
  for (auto& c : classes_) {
    if (c.empty()) throw InvalidPartition("empty class");
    const std::size_t before = c.size();
    c = make_set(std::move(c));
    if (c.size() != before) throw InvalidPartition("class lists an element twice");
    for (Elem x : c)
      if (x >= g.order()) throw InvalidPartition("element index out of range");
  }
  std::sort(classes_.begin(), classes_.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    for (Elem x : classes_[i]) {
      if (class_of_[x] != kNoClass)
        throw InvalidPartition("element " + g.format(x) + " lies in two classes");
      class_of_[x] = static_cast<std::uint32_t>(i);
      support_.push_back(x);
    }
  }
  std::sort(support_.begin(), support_.end());
  if (whole_group) {
    if (support_.size() != g.order()) {
      for (Elem x = 0; x < g.order(); ++x)
        if (class_of_[x] == kNoClass)
          throw InvalidPartition("element " + g.format(x) + " is not covered by any class");
    }
  } else if (!is_subgroup(g, support_)) {
    throw InvalidPartition("the union of the classes is not a subgroup");
  }
}

// ------------------------------------------------------ StructureConstants

StructureConstants::StructureConstants(std::size_t rank) : rank_(rank) {
  offsets_.reserve(rank * rank + 1);
}

void StructureConstants::append_row(std::vector<Term> terms) {
  terms_.insert(terms_.end(), terms.begin(), terms.end());
  offsets_.push_back(static_cast<std::uint32_t>(terms_.size()));
}

std::span<const StructureConstants::Term> StructureConstants::row(std::size_t i,
                                                                  std::size_t j) const {
  const std::size_t r = i * rank_ + j;
  return {terms_.data() + offsets_[r], terms_.data() + offsets_[r + 1]};
}

std::uint32_t StructureConstants::operator()(std::size_t i, std::size_t j, std::size_t k) const {
  const auto terms = row(i, j);
  auto it = std::lower_bound(terms.begin(), terms.end(), k,
                             [](const Term& t, std::size_t key) { return t.k < key; });
  return (it != terms.end() && it->k == k) ? it->value : 0;
}

StructureConstants StructureConstants::transposed() const {
  StructureConstants out(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) {
      const auto r = row(j, i);
      out.append_row({r.begin(), r.end()});
    }
  return out;
}

// ---------------------------------------------------------------- validation

SRing validate_sring(Partition part) {
  const Group& g = part.group();
  const std::size_t r = part.size();

  if (part[0] != ElementSet{g.identity()})
    throw IdentityNotSingleton("the class of the identity is {" + g.format_set(part[0]) +
                               "}, not {e}");

  std::vector<std::uint32_t> inverse(r);
  for (std::size_t i = 0; i < r; ++i) {
    ElementSet inv;
    inv.reserve(part[i].size());
    for (Elem x : part[i]) inv.push_back(g.inv(x));
    inv = make_set(std::move(inv));
    const std::uint32_t k = part.class_of(inv.front());
    if (k == kNoClass || part[k] != inv)
      throw NotInverseClosed(i, "class T" + std::to_string(i) + " = {" + g.format_set(part[i]) +
                                    "}: its inverse set {" + g.format_set(inv) +
                                    "} is not a class");
    inverse[i] = k;
  }

  StructureConstants constants(r);
  std::vector<std::uint32_t> count(g.order(), 0);
  std::vector<Elem> touched;
  std::vector<std::uint32_t> class_value(r, 0), class_hits(r, 0);
  std::vector<Elem> class_witness(r, 0);
  std::vector<std::uint32_t> touched_classes;

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (Elem t : part[i])
        for (Elem u : part[j]) {
          const Elem x = g.mul(t, u);
          if (count[x]++ == 0) touched.push_back(x);
        }
      auto fail = [&](Elem x, Elem y, std::size_t k) {
        throw NotClosedUnderProduct(
            i, j, x, y,
            "T" + std::to_string(i) + "*T" + std::to_string(j) + " is not a combination of classes: " +
                g.format(x) + " has multiplicity " + std::to_string(count[x]) + " but " +
                g.format(y) + " in the same class T" + std::to_string(k) + " has multiplicity " +
                std::to_string(count[y]));
      };
      for (Elem x : touched) {
        const std::uint32_t k = part.class_of(x);
        if (k == kNoClass)
          throw NotClosedUnderProduct(i, j, x, x,
                                      "product " + g.format(x) + " leaves the support");
        if (class_hits[k]++ == 0) {
          class_value[k] = count[x];
          class_witness[k] = x;
          touched_classes.push_back(k);
        } else if (count[x] != class_value[k]) {
          fail(class_witness[k], x, k);
        }
      }
      std::sort(touched_classes.begin(), touched_classes.end());
      std::vector<StructureConstants::Term> terms;
      terms.reserve(touched_classes.size());
      for (std::uint32_t k : touched_classes) {
        if (class_hits[k] != part[k].size()) {
          for (Elem y : part[k])
            if (count[y] == 0) fail(class_witness[k], y, k);
        }
        terms.push_back({k, class_value[k]});
        class_hits[k] = 0;
      }
      constants.append_row(std::move(terms));
      for (Elem x : touched) count[x] = 0;
      touched.clear();
      touched_classes.clear();
    }
  }
  return SRing(std::move(part), std::move(constants), std::move(inverse));
}

// ---------------------------------------------------------------- invariants

namespace {

bool is_power_of(std::size_t n, std::size_t p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

ElementSet union_of_classes_meeting(const SRing& sr, const ElementSet& s) {
  std::vector<char> seen(sr.rank(), 0);
  std::vector<Elem> out;
  for (Elem x : s) {
    const auto k = sr.class_of(x);
    if (k == kNoClass || seen[k]) continue;
    seen[k] = 1;
    out.insert(out.end(), sr.cls(k).begin(), sr.cls(k).end());
  }
  return make_set(std::move(out));
}

// Smallest A-subgroup containing s.
ElementSet a_closure(const SRing& sr, ElementSet s) {
  for (;;) {
    ElementSet sub = generate_subgroup(sr.group(), s);
    ElementSet grown = union_of_classes_meeting(sr, sub);
    if (grown == sub) return sub;
    s = std::move(grown);
  }
}

}  // namespace

bool is_p_sring(const SRing& sr) {
  const std::size_t p = sr.group().prime();
  for (const auto& c : sr.partition().classes())
    if (!is_power_of(c.size(), p)) return false;
  return true;
}

bool is_commutative(const SRing& sr) {
  const auto& a = sr.constants();
  for (std::size_t i = 0; i < sr.rank(); ++i)
    for (std::size_t j = i + 1; j < sr.rank(); ++j) {
      const auto x = a.row(i, j);
      const auto y = a.row(j, i);
      if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) return false;
    }
  return true;
}

ElementSet thin_radical(const SRing& sr) {
  ElementSet out;
  for (const auto& c : sr.partition().classes())
    if (c.size() == 1) out.push_back(c.front());
  out = make_set(std::move(out));
  if (!is_subgroup(sr.group(), out)) throw Error("thin radical is not a subgroup");
  return out;
}

ElementSet thin_residue(const SRing& sr) {
  const Group& g = sr.group();
  std::vector<Elem> gens;
  for (const auto& c : sr.partition().classes())
    for (Elem t : c)
      for (Elem u : c) gens.push_back(g.mul(g.inv(t), u));
  // Only a generating subset is needed; keep those that grow the subgroup.
  ElementSet current{g.identity()};
  ElementSet kept;
  for (Elem x : make_set(std::move(gens))) {
    if (contains(current, x)) continue;
    kept.push_back(x);
    current = generate_subgroup(g, kept);
  }
  return current;
}

ElementSet right_stabilizer(const SRing& sr, std::size_t class_index) {
  const Group& g = sr.group();
  const ElementSet& t = sr.cls(class_index);
  ElementSet out;
  for (Elem x : t) {
    const Elem h = g.mul(g.inv(t.front()), x);
    bool fixes = true;
    for (Elem y : t)
      if (!contains(t, g.mul(y, h))) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(h);
  }
  out = make_set(std::move(out));
  if (!is_subgroup(g, out) || !is_a_subgroup(sr, out))
    throw Error("right stabilizer of T" + std::to_string(class_index) + " is not an A-subgroup");
  return out;
}

ElementSet left_stabilizer(const SRing& sr, std::size_t class_index) {
  const Group& g = sr.group();
  const ElementSet& t = sr.cls(class_index);
  ElementSet out;
  for (Elem x : t) {
    const Elem h = g.mul(x, g.inv(t.front()));
    bool fixes = true;
    for (Elem y : t)
      if (!contains(t, g.mul(h, y))) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(h);
  }
  return make_set(std::move(out));
}

bool is_a_subgroup(const SRing& sr, const ElementSet& s) {
  if (!is_subgroup(sr.group(), s)) return false;
  for (Elem x : s) {
    const auto k = sr.class_of(x);
    if (k == kNoClass) return false;
    for (Elem y : sr.cls(k))
      if (!contains(s, y)) return false;
  }
  return true;
}

std::vector<ElementSet> a_subgroups(const SRing& sr) {
  std::set<ElementSet> found;
  std::vector<ElementSet> queue{ElementSet{sr.group().identity()}};
  found.insert(queue.front());
  for (std::size_t idx = 0; idx < queue.size(); ++idx) {
    const ElementSet k = queue[idx];
    for (std::size_t c = 0; c < sr.rank(); ++c) {
      if (contains(k, sr.cls(c).front())) continue;
      ElementSet grown = k;
      grown.insert(grown.end(), sr.cls(c).begin(), sr.cls(c).end());
      ElementSet closure = a_closure(sr, make_set(std::move(grown)));
      if (found.insert(closure).second) queue.push_back(std::move(closure));
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
  return out;
}

std::optional<std::vector<ElementSet>> a_subgroup_chain(const SRing& sr) {
  const auto subs = a_subgroups(sr);
  const std::size_t p = sr.group().prime();
  std::vector<int> parent(subs.size(), -2);
  parent[0] = -1;  // {e}
  for (std::size_t i = 1; i < subs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (parent[j] != -2 && subs[j].size() * p == subs[i].size() &&
          std::includes(subs[i].begin(), subs[i].end(), subs[j].begin(), subs[j].end())) {
        parent[i] = static_cast<int>(j);
        break;
      }
  const int top = static_cast<int>(subs.size()) - 1;
  if (subs.back() != sr.support() || parent[top] == -2) return std::nullopt;
  std::vector<ElementSet> chain;
  for (int i = top; i >= 0; i = parent[i]) chain.push_back(subs[i]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

SRing restriction(const SRing& sr, const ElementSet& subgroup) {
  if (!is_a_subgroup(sr, subgroup))
    throw NotAnASubgroup("{" + sr.group().format_set(subgroup) +
                         "} is not a subgroup that is a union of basic sets");
  std::vector<ElementSet> classes;
  for (const auto& c : sr.partition().classes())
    if (contains(subgroup, c.front())) classes.push_back(c);
  return validate_sring(Partition::over_subgroup(sr.group_ptr(), std::move(classes)));
}

std::size_t translate_class(const SRing& sr, std::size_t class_index, Elem m) {
  const auto km = sr.class_of(m);
  if (km == kNoClass || sr.cls(km).size() != 1)
    throw NotAThinElement("{" + sr.group().format(m) + "} is not a basic set");
  const Group& g = sr.group();
  ElementSet image;
  for (Elem t : sr.cls(class_index)) image.push_back(g.mul(t, m));
  image = make_set(std::move(image));
  const auto k = sr.class_of(image.front());
  if (k == kNoClass || sr.cls(k) != image)
    throw Error("translate of a basic set by a thin element is not a basic set");
  return k;
}

// ------------------------------------------------------------- automorphisms

GroupAutomorphism GroupAutomorphism::from_images(const Group& g, std::vector<Elem> images) {
  const std::size_t n = g.order();
  if (images.size() != n) throw Error("automorphism image table has the wrong length");
  std::vector<Elem> preimage(n, n);
  for (Elem x = 0; x < n; ++x) {
    if (images[x] >= n) throw Error("automorphism image out of range");
    if (preimage[images[x]] != n)
      throw NotAnAutomorphism(preimage[images[x]], x,
                              "map is not injective: " + g.format(preimage[images[x]]) +
                                  " and " + g.format(x) + " share an image");
    preimage[images[x]] = x;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (images[g.mul(x, y)] != g.mul(images[x], images[y]))
        throw NotAnAutomorphism(x, y,
                                "map is not a homomorphism at (" + g.format(x) + ", " +
                                    g.format(y) + ")");
  return GroupAutomorphism(std::move(images));
}

GroupAutomorphism GroupAutomorphism::from_generator_images(const Group& g, Elem image_a,
                                                           Elem image_b) {
  Elem image_c = g.identity();
  if (g.family() == Family::H2) {
    // [a, b] = a^{-1} b^{-1} a b
    image_c = g.mul(g.mul(g.inv(image_a), g.inv(image_b)), g.mul(image_a, image_b));
  }
  std::vector<Elem> images(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    const NormalForm nf = g.normal_form(x);
    images[x] = g.mul(g.mul(g.pow(image_a, nf.a), g.pow(image_b, nf.b)), g.pow(image_c, nf.c));
  }
  return from_images(g, std::move(images));
}

SRing transitivity_module(GroupPtr group, const std::vector<GroupAutomorphism>& auts) {
  const Group& g = *group;
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementSet> orbits;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& phi : auts) {
        const Elem y = phi(orbit[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    orbits.push_back(make_set(std::move(orbit)));
  }
  return validate_sring(Partition(std::move(group), std::move(orbits)));
}

// ------------------------------------------------------------ conditions A/B

SuitabilityConditionsAB check_conditions_AB(const SRing& sr) {
  const Group& g = sr.group();
  const std::size_t p = g.prime();
  SuitabilityConditionsAB out;
  out.residue = thin_residue(sr);

  std::set<ElementSet> stabs;
  out.holds_A = true;
  for (std::size_t i = 0; i < sr.rank(); ++i) {
    const ElementSet& c = sr.cls(i);
    if (std::includes(out.residue.begin(), out.residue.end(), c.begin(), c.end())) continue;
    out.outside.push_back(i);
    if (c.size() != p) out.holds_A = false;
    stabs.insert(right_stabilizer(sr, i));
  }
  out.stabilizers.assign(stabs.begin(), stabs.end());
  out.holds_B = out.stabilizers.size() == p - 1;

  const ElementSet z_h = center(g);
  out.stabilizers_avoid_center =
      std::none_of(out.stabilizers.begin(), out.stabilizers.end(),
                   [&](const ElementSet& s) { return s == z_h; });

  bool structure = sr.support().size() == g.order() && out.outside.size() == (p - 1) * p;
  for (std::size_t i = 0; i < sr.rank() && structure; ++i) {
    const ElementSet& c = sr.cls(i);
    if (std::includes(out.residue.begin(), out.residue.end(), c.begin(), c.end()))
      structure = c.size() == 1;
  }
  const Elem z = g.central_generator();
  for (std::size_t idx = 0; idx < out.outside.size() && structure; ++idx) {
    std::set<std::size_t> shifts;
    Elem zj = g.identity();
    for (std::size_t j = 0; j < p && structure; ++j, zj = g.mul(zj, z)) {
      ElementSet shifted;
      for (Elem t : sr.cls(out.outside[idx])) shifted.push_back(g.mul(t, zj));
      shifted = make_set(std::move(shifted));
      const auto k = sr.class_of(shifted.front());
      structure = sr.cls(k) == shifted;
      shifts.insert(k);
    }
    structure = structure && shifts.size() == p;
  }
  out.shifted_block_structure = structure;
  return out;
}

// ------------------------------------------------------------------ file I/O

Partition parse_partition(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  GroupPtr group;
  std::vector<ElementSet> classes;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      if (!group) {
        group = build_group(parse_group_header(line));
        continue;
      }
      ElementSet cls;
      std::size_t pos = 0;
      for (;;) {
        const auto comma = line.find(',', pos);
        cls.push_back(group->parse(std::string_view(line).substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      classes.push_back(std::move(cls));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const InvalidPrime& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!group) throw ParseError("missing group header");
  return Partition(std::move(group), std::move(classes));
}

std::string format_partition(const Partition& part) {
  std::string out = part.group().header() + "\n";
  for (const auto& c : part.classes()) out += part.group().format_set(c) + "\n";
  return out;
}

}  // namespace schur
