#include "schur/pgroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <optional>
#include <sstream>

namespace schur {

namespace {

int mod(long x, long m) {
  long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

long power_mod(long base, long e, long m) {
  long r = 1 % m;
  base = mod(base, m);
  while (e > 0) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void GroupSpec::validate() const {
  if (prime == 2)
    throw InvalidPrime("p = 2 is not supported: the groups require an odd prime");
  if (!is_prime(prime))
    throw InvalidPrime("p = " + std::to_string(prime) + " is not prime");
  if (prime > kMaxPrime)
    throw InvalidPrime("p = " + std::to_string(prime) + " exceeds the supported maximum " +
                       std::to_string(kMaxPrime));
}

Group::Group(GroupSpec spec) : spec_(spec) {
  spec_.validate();
  const std::size_t p = spec_.prime;
  order_ = p * p * p;
  table_.resize(order_ * order_);
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = 0; y < order_; ++y)
      table_[std::size_t(x) * order_ + y] = static_cast<std::uint16_t>(multiply_by_law(x, y));

  inv_.assign(order_, 0);
  for (Elem x = 0; x < order_; ++x) {
    bool found = false;
    for (Elem y = 0; y < order_ && !found; ++y) {
      if (mul(x, y) == identity()) {
        if (mul(y, x) != identity())
          throw Error("multiplication law: one-sided inverse for " + format(x));
        inv_[x] = y;
        found = true;
      }
    }
    if (!found) throw Error("multiplication law: no inverse for " + format(x));
    if (mul(x, identity()) != x || mul(identity(), x) != x)
      throw Error("multiplication law: identity fails on " + format(x));
  }

  // Associativity: exhaustive for small orders, a fixed stride sample above.
  const std::size_t n = order_;
  if (spec_.prime <= 7) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        const Elem xy = mul(x, y);
        for (Elem z = 0; z < n; ++z)
          if (mul(xy, z) != mul(x, mul(y, z)))
            throw Error("multiplication law is not associative");
      }
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (int t = 0; t < 200000; ++t) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      const Elem x = Elem((state >> 33) % n);
      const Elem y = Elem((state >> 13) % n);
      const Elem z = Elem((state >> 43) % n);
      if (mul(mul(x, y), z) != mul(x, mul(y, z)))
        throw Error("multiplication law is not associative");
    }
  }
}

Elem Group::index_of(int i, int j, int k) const {
  const int p = spec_.prime;
  if (spec_.family == Family::H1) return Elem(i * p + j);
  return Elem((i * p + j) * p + k);
}

NormalForm Group::normal_form(Elem x) const {
  const int p = spec_.prime;
  const int v = static_cast<int>(x);
  if (spec_.family == Family::H1) return {v / p, v % p, 0};
  return {v / (p * p), (v / p) % p, v % p};
}

Elem Group::element(NormalForm nf) const {
  const int p = spec_.prime;
  if (spec_.family == Family::H1) {
    if (nf.c != 0) throw Error("H1 has no generator c");
    return index_of(mod(nf.a, p * p), mod(nf.b, p), 0);
  }
  return index_of(mod(nf.a, p), mod(nf.b, p), mod(nf.c, p));
}

Elem Group::multiply_by_law(Elem x, Elem y) const {
  const long p = spec_.prime;
  const NormalForm u = normal_form(x);
  const NormalForm v = normal_form(y);
  if (spec_.family == Family::H1) {
    // b^j a^i = a^{i(1-p)^j} b^j
    const long twist = power_mod(1 - p, u.b, p * p);
    return index_of(mod(u.a + v.a * twist, p * p), mod(u.b + v.b, p), 0);
  }
  // b^j a^i = a^i b^j c^{-ij}
  return index_of(mod(u.a + v.a, p), mod(u.b + v.b, p), mod(long(u.c) + v.c - long(u.b) * v.a, p));
}

Elem Group::pow(Elem x, long e) const {
  const long ord = static_cast<long>(element_order(x));
  e = mod(e, ord);
  Elem r = identity();
  for (long i = 0; i < e; ++i) r = mul(r, x);
  return r;
}

std::size_t Group::element_order(Elem x) const {
  std::size_t k = 1;
  for (Elem y = x; y != identity(); y = mul(y, x)) ++k;
  return k;
}

Elem Group::a() const { return element({1, 0, 0}); }
Elem Group::b() const { return element({0, 1, 0}); }
Elem Group::c() const {
  if (spec_.family == Family::H1) throw Error("H1 has no generator c");
  return element({0, 0, 1});
}
Elem Group::central_generator() const {
  return spec_.family == Family::H1 ? element({spec_.prime, 0, 0}) : c();
}

std::string Group::format(Elem x) const {
  if (x == identity()) return "e";
  const NormalForm nf = normal_form(x);
  std::string out;
  auto factor = [&out](char g, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += g;
    out += '^';
    out += std::to_string(e);
  };
  factor('a', nf.a);
  factor('b', nf.b);
  factor('c', nf.c);
  return out;
}

Elem Group::parse(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw ParseError("empty element");
  if (text == "e" || text == "1") return identity();
  Elem result = identity();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t star = text.find('*', pos);
    const std::string_view tok =
        trim(text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (tok.empty()) throw ParseError("empty factor in '" + std::string(text) + "'");
    Elem gen;
    switch (tok.front()) {
      case 'a': gen = a(); break;
      case 'b': gen = b(); break;
      case 'c':
        if (spec_.family == Family::H1) throw ParseError("H1 has no generator c");
        gen = c();
        break;
      case 'e':
        gen = identity();
        break;
      default:
        throw ParseError("unknown generator in '" + std::string(tok) + "'");
    }
    long exponent = 1;
    std::string_view rest = trim(tok.substr(1));
    if (!rest.empty()) {
      if (rest.front() != '^') throw ParseError("expected '^' in '" + std::string(tok) + "'");
      rest = trim(rest.substr(1));
      const char* first = rest.data();
      const char* last = rest.data() + rest.size();
      if (!rest.empty() && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc() || ptr != last || first == last)
        throw ParseError("bad exponent in '" + std::string(tok) + "'");
    }
    result = mul(result, pow(gen, exponent));
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return result;
}

std::string Group::format_set(const ElementSet& s) const {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += format(s[i]);
  }
  return out;
}

std::string Group::header() const {
  return "group=" + family_name(spec_.family) + " p=" + std::to_string(spec_.prime);
}

GroupPtr build_group(GroupSpec spec) { return std::make_shared<const Group>(spec); }

std::string family_name(Family f) { return f == Family::H1 ? "h1" : "h2"; }

Family parse_family(std::string_view s) {
  s = trim(s);
  if (s == "h1" || s == "H1") return Family::H1;
  if (s == "h2" || s == "H2") return Family::H2;
  throw ParseError("unknown group family '" + std::string(s) + "'");
}

GroupSpec parse_group_header(std::string_view line) {
  std::istringstream in{std::string(trim(line))};
  std::string tok;
  std::optional<Family> family;
  std::optional<int> prime;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("malformed header token '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    if (key == "group") {
      family = parse_family(value);
    } else if (key == "p") {
      int v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size())
        throw ParseError("bad prime '" + value + "'");
      prime = v;
    }
    // Other keys (e.g. classes=N in scheme exports) are ignored.
  }
  if (!family || !prime) throw ParseError("group header must read 'group=h1|h2 p=P'");
  return {*family, *prime};
}

ElementSet make_set(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains(const ElementSet& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

ElementSet center(const Group& g) {
  ElementSet z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.commute(x, y);
    if (central) z.push_back(x);
  }
  return z;
}

ElementSet generate_subgroup(const Group& g, const ElementSet& gens) {
  if (gens.empty()) throw EmptyGenerators();
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    for (Elem s : gens) {
      const Elem y = g.mul(members[idx], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return make_set(std::move(members));
}

bool is_subgroup(const Group& g, const ElementSet& s) {
  if (s.empty() || !contains(s, g.identity())) return false;
  std::vector<char> in(g.order(), 0);
  for (Elem x : s) in[x] = 1;
  for (Elem x : s)
    for (Elem y : s)
      if (!in[g.mul(x, y)]) return false;
  return true;
}

ElementSet coset(const Group& g, const ElementSet& subgroup, Elem h, Side side) {
  if (!is_subgroup(g, subgroup))
    throw NotASubgroup("{" + g.format_set(subgroup) + "} is not a subgroup");
  std::vector<Elem> out;
  out.reserve(subgroup.size());
  for (Elem k : subgroup) out.push_back(side == Side::Left ? g.mul(h, k) : g.mul(k, h));
  return make_set(std::move(out));
}

bool is_elementary_abelian(const Group& g, const ElementSet& s) {
  for (Elem x : s) {
    if (x != g.identity() && g.element_order(x) != std::size_t(g.prime())) return false;
    for (Elem y : s)
      if (!g.commute(x, y)) return false;
  }
  return true;
}

}  // namespace schur
