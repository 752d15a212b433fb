#include "schur/sequences.hpp"

#include <algorithm>
#include <charconv>

namespace schur {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

void require_odd_prime(int p) {
  if (p < 3 || !is_prime(p)) throw InvalidPrime("p = " + std::to_string(p) + " is not an odd prime");
}

}  // namespace

bool is_suitable(const std::vector<int>& x, int p) {
  require_odd_prime(p);
  if (x.size() != std::size_t(p - 1))
    throw BadLength("sequence has length " + std::to_string(x.size()) + ", expected " +
                    std::to_string(p - 1));
  for (int v : x)
    if (v < 0 || v >= p) throw OutOfRange("entry " + std::to_string(v) + " is not in [0, p)");
  if (x[0] != 0) return false;
  std::vector<char> used(p, 0);
  for (int v : x) {
    if (used[v]) return false;
    used[v] = 1;
  }
  for (int i = 1; i <= (p - 1) / 2; ++i)
    if (mod(x[i - 1] + i, p) != x[p - i - 1]) return false;
  return true;
}

SuitableSequence make_suitable(std::vector<int> x, int p) {
  if (!is_suitable(x, p)) throw Error("(" + format_sequence(x) + ") is not suitable");
  std::vector<char> used(p, 0);
  for (int v : x) used[v] = 1;
  const int missing = static_cast<int>(std::find(used.begin(), used.end(), 0) - used.begin());
  return {p, std::move(x), missing};
}

SuitableSequence canonical_sequence(int p) {
  require_odd_prime(p);
  std::vector<int> x(p - 1);
  for (int i = 1; i < p; ++i) x[i - 1] = mod((p - 1) / 2 * (i - 1), p);
  return make_suitable(std::move(x), p);
}

SuitableSequence mod4_3_sequence(int p) {
  require_odd_prime(p);
  if (p % 4 != 3)
    throw WrongResidueClass("p = " + std::to_string(p) + " is not 3 mod 4");
  if (p == 3)
    throw WrongResidueClass("p = 3 has no suitable sequence with x_2 = (p+1)/2; need p >= 7");
  const int k = (p - 3) / 4;
  const SuitableSequence base = canonical_sequence(p);
  auto x = [&](int i) { return base.at(i); };
  std::vector<int> y = base.x;
  auto set = [&](int i, int v) { y[i - 1] = v; };

  set(2, (p + 1) / 2);
  set(p - 2, x(p - 4));
  for (int l = 2; l <= k; ++l) {
    if (l % 2 == 0) {
      set(p - 2 * l, x(p - 2 * (l - 1)));
      set(2 * l, x(2 * (l + 1)));
    } else {
      set(p - 2 * l, x(p - 2 * (l + 1)));
      set(2 * l, x(2 * (l - 1)));
    }
  }
  if (k % 2 == 0) {
    set(2 * k + 2, x(p - 2 * k - 2));
    set(2 * k + 1, x(2 * k));
  } else {
    set(2 * k + 2, x(p - 2 * k));
    set(2 * k + 1, x(2 * k + 2));
  }
  if (!is_suitable(y, p) || y[1] != (p + 1) / 2)
    throw Error("rearranged sequence (" + format_sequence(y) + ") is not suitable");
  return make_suitable(std::move(y), p);
}

std::vector<SuitableSequence> enumerate_suitable(int p, int cap) {
  require_odd_prime(p);
  if (p > cap)
    throw CapExceeded("enumeration is capped at p = " + std::to_string(cap));
  const int half = (p - 1) / 2;
  std::vector<int> x(p - 1, -1);
  std::vector<char> used(p, 0);
  x[0] = 0;
  x[p - 2] = 1;
  used[0] = used[1] = 1;
  std::vector<SuitableSequence> out;

  // Choosing x_i for 2 <= i <= (p-1)/2 fixes x_{p-i} = x_i + i.
  auto rec = [&](auto&& self, int i) -> void {
    if (i > half) {
      out.push_back(make_suitable(x, p));
      return;
    }
    for (int v = 0; v < p; ++v) {
      const int w = mod(v + i, p);
      if (used[v] || used[w]) continue;
      used[v] = used[w] = 1;
      x[i - 1] = v;
      x[p - i - 1] = w;
      self(self, i + 1);
      used[v] = used[w] = 0;
    }
  };
  rec(rec, 2);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> parse_sequence(std::string_view csv) {
  std::vector<int> out;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = csv.find(',', pos);
    std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? csv.npos : comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '(')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == ')' || tok.back() == '\n'))
      tok.remove_suffix(1);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad sequence entry '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_sequence(const std::vector<int>& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x[i]);
  }
  return out;
}

ElementSet sequence_base_subgroup(const Group& g) {
  return generate_subgroup(g, make_set({g.central_generator(), g.b()}));
}

Elem sequence_step(const Group& g, const SuitableSequence& s, int i) {
  return g.mul(g.b(), g.pow(g.central_generator(), s.at(i)));
}

ElementSet sequence_class(const Group& g, const SuitableSequence& s, int i, int j) {
  const Elem t = sequence_step(g, s, i);
  const Elem head = g.pow(g.a(), i);
  const Elem shift = g.pow(g.central_generator(), j);
  std::vector<Elem> out;
  Elem tm = g.identity();
  for (int m = 0; m < g.prime(); ++m, tm = g.mul(tm, t)) out.push_back(g.mul(g.mul(head, tm), shift));
  return make_set(std::move(out));
}

SRing sring_from_sequence(GroupPtr g, const SuitableSequence& s) {
  if (s.p != g->prime()) throw Error("sequence and group use different primes");
  if (!is_suitable(s.x, s.p)) throw Error("(" + format_sequence(s.x) + ") is not suitable");
  std::vector<ElementSet> classes;
  for (Elem l : sequence_base_subgroup(*g)) classes.push_back({l});
  for (int i = 1; i < s.p; ++i)
    for (int j = 0; j < s.p; ++j) classes.push_back(sequence_class(*g, s, i, j));
  return validate_sring(Partition(std::move(g), std::move(classes)));
}

SRing sring_h1_from_sequence(const SuitableSequence& s) {
  return sring_from_sequence(build_group({Family::H1, s.p}), s);
}

SRing sring_h2_from_sequence(const SuitableSequence& s) {
  return sring_from_sequence(build_group({Family::H2, s.p}), s);
}

}  // namespace schur
