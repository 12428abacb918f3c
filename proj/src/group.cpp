#include "commgraph/group.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "commgraph/errors.hpp"

namespace commgraph {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= bound; ++k) {
    if (is_prime(k)) out.push_back(k);
  }
  return out;
}

std::optional<unsigned> p_power_exponent(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return std::nullopt;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

// ---------------------------------------------------------------------------

GroupTable::GroupTable(std::size_t order, std::vector<ElementId> mult, std::vector<std::string> labels,
                       std::vector<ElementId> generators)
    : order_(order),
      mult_(std::move(mult)),
      inv_(order, 0),
      labels_(std::move(labels)),
      generators_(std::move(generators)),
      factorization_(factorize(order)) {
  if (order_ == 0) throw InvalidGenerator("group order must be positive");
  if (mult_.size() != order_ * order_) throw InvalidGenerator("multiplication table has wrong size");
  if (labels_.empty()) {
    labels_.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != order_) throw InvalidGenerator("label count differs from group order");
  for (ElementId v : mult_) {
    if (v >= order_) throw InvalidGenerator("table entry out of range");
  }
  for (ElementId g : generators_) {
    if (g >= order_) throw InvalidGenerator("generator id out of range");
  }
  for (ElementId x = 0; x < order_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) {
      throw InvalidGenerator("element 0 is not a two-sided identity");
    }
  }
  for (ElementId x = 0; x < order_; ++x) {
    const auto r = row(x);
    const auto it = std::find(r.begin(), r.end(), ElementId{0});
    if (it == r.end()) throw InvalidGenerator("element " + std::to_string(x) + " has no inverse");
    const auto y = static_cast<ElementId>(it - r.begin());
    if (mul(y, x) != 0) throw InvalidGenerator("left and right inverses differ");
    inv_[x] = y;
  }
}

std::optional<ElementId> GroupTable::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<ElementId>(i);
  }
  return std::nullopt;
}

void GroupTable::require_valid(ElementId a) const {
  if (a >= order_) {
    throw InvalidElement("element id " + std::to_string(a) + " outside group of order " +
                         std::to_string(order_));
  }
}

void GroupTable::check_invariants(std::uint64_t seed) const {
  std::uint64_t product = 1;
  for (const auto& [p, e] : factorization_) {
    for (unsigned k = 0; k < e; ++k) product *= p;
  }
  if (product != order_) throw InvalidGenerator("order factorization does not multiply back");

  for (ElementId x = 0; x < order_; ++x) {
    if (mul(x, inv_[x]) != 0) throw InvalidGenerator("inverse table inconsistent");
  }

  auto fail = [](ElementId a, ElementId b, ElementId c) {
    std::ostringstream os;
    os << "associativity fails for (" << a << ", " << b << ", " << c << ")";
    throw InvalidGenerator(os.str());
  };
  const auto n = static_cast<ElementId>(order_);
  if (order_ <= 512) {
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        const ElementId ab = mul(a, b);
        for (ElementId c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) fail(a, b, c);
        }
      }
    }
    return;
  }
  std::mt19937_64 rng(seed);
  const std::size_t trials = 10 * order_ * order_;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = static_cast<ElementId>(rng() % n);
    const auto b = static_cast<ElementId>(rng() % n);
    const auto c = static_cast<ElementId>(rng() % n);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail(a, b, c);
  }
}

// ---------------------------------------------------------------------------

std::size_t ElementKeyHash::operator()(const ElementKey& k) const noexcept {
  std::size_t seed = k.size();
  for (auto v : k) seed ^= v + 0x9e3779b9 + (seed << 6) + (seed >> 2);
  return seed;
}

ElementId Realization::id_of(const ElementKey& key) const {
  const auto it = index.find(key);
  if (it == index.end()) throw NotFound("element is not in the realized group");
  return it->second;
}

Realization realize_closure(const ElementKey& identity, const std::vector<ElementKey>& generators,
                            const KeyProduct& product, const KeyLabel& label, std::size_t order_cap) {
  Realization out;
  std::vector<ElementId> parent{0};
  std::vector<std::uint32_t> via{0};

  out.keys.push_back(identity);
  out.index.emplace(identity, 0);

  // Breadth-first: ids are assigned in discovery order, so scanning keys in
  // id order is the BFS queue.
  std::vector<ElementId> gen_ids;
  std::vector<std::vector<ElementId>> right;  // right[x][g] = id(x * gen g)
  for (std::size_t x = 0; x < out.keys.size(); ++x) {
    std::vector<ElementId> row(generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g) {
      ElementKey y = product(out.keys[x], generators[g]);
      auto [it, fresh] = out.index.emplace(y, static_cast<ElementId>(out.keys.size()));
      if (fresh) {
        if (out.keys.size() >= order_cap) {
          throw OrderCapExceeded("group order exceeds cap " + std::to_string(order_cap));
        }
        out.keys.push_back(std::move(y));
        parent.push_back(static_cast<ElementId>(x));
        via.push_back(static_cast<std::uint32_t>(g));
      }
      row[g] = it->second;
    }
    right.push_back(std::move(row));
  }

  const std::size_t n = out.keys.size();
  for (const auto& g : generators) gen_ids.push_back(out.index.at(g));

  // mult[i][j] = (i * parent(j)) * gen(j); parent(j) < j in BFS order.
  std::vector<ElementId> mult(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    ElementId* r = mult.data() + i * n;
    r[0] = static_cast<ElementId>(i);
    for (std::size_t j = 1; j < n; ++j) r[j] = right[r[parent[j]]][via[j]];
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& k : out.keys) labels.push_back(label(k));

  std::vector<ElementId> used;
  for (ElementId g : gen_ids) {
    if (g != 0 && std::find(used.begin(), used.end(), g) == used.end()) used.push_back(g);
  }
  out.table = std::make_shared<const GroupTable>(n, std::move(mult), std::move(labels), std::move(used));
  return out;
}

// ---------------------------------------------------------------------------

Permutation parse_cycles(std::string_view text, std::size_t points) {
  Permutation perm(points);
  for (std::size_t i = 0; i < points; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> seen(points, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw InvalidGenerator("empty permutation text");
  while (pos < text.size()) {
    if (text[pos] != '(') throw InvalidGenerator("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<std::uint32_t> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t value = 0;
      bool any = false;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        any = true;
        ++pos;
      }
      if (!any || value < 1 || value > points) {
        throw InvalidGenerator("bad point in cycle notation: " + std::string(text));
      }
      if (seen[value - 1]) throw InvalidGenerator("point repeated in cycle notation: " + std::string(text));
      seen[value - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(value - 1));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos == text.size()) throw InvalidGenerator("unterminated cycle: " + std::string(text));
    ++pos;
    for (std::size_t k = 0; k < cycle.size(); ++k) perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return perm;
}

std::string cycle_label(const Permutation& perm) {
  std::string out;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (done[i] || perm[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

void require_permutation(const Permutation& perm, std::size_t points) {
  if (perm.size() != points) throw InvalidGenerator("permutation has wrong degree");
  std::vector<bool> hit(points, false);
  for (auto v : perm) {
    if (v >= points || hit[v]) throw InvalidGenerator("generator is not a permutation");
    hit[v] = true;
  }
}

}  // namespace

Realization realize_permutations(std::size_t points, const std::vector<Permutation>& generators,
                                 std::size_t order_cap) {
  for (const auto& g : generators) require_permutation(g, points);
  Permutation identity(points);
  for (std::size_t i = 0; i < points; ++i) identity[i] = static_cast<std::uint32_t>(i);
  return realize_closure(
      identity, generators,
      [](const ElementKey& x, const ElementKey& y) {
        ElementKey z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[y[i]];
        return z;
      },
      [](const ElementKey& k) { return cycle_label(k); }, order_cap);
}

GroupPtr group_from_permutations(std::size_t points, const std::vector<Permutation>& generators,
                                 std::size_t order_cap) {
  return realize_permutations(points, generators, order_cap).table;
}

Realization realize_upper_triangular(std::uint32_t q, const std::vector<UpperTriangular>& generators,
                                     std::size_t order_cap) {
  if (!is_prime(q)) throw InvalidGenerator("matrix modulus " + std::to_string(q) + " is not prime");
  std::vector<ElementKey> gens;
  for (const auto& m : generators) {
    if (m.a % q == 0 || m.d % q == 0) throw InvalidGenerator("upper-triangular generator is singular");
    gens.push_back({m.a % q, m.b % q, m.d % q});
  }
  const std::uint64_t mod = q;
  return realize_closure(
      {1, 0, 1}, gens,
      [mod](const ElementKey& x, const ElementKey& y) {
        // [[a,b],[0,d]] * [[a',b'],[0,d']] = [[aa', ab'+bd'],[0, dd']]
        return ElementKey{static_cast<std::uint32_t>(std::uint64_t{x[0]} * y[0] % mod),
                          static_cast<std::uint32_t>((std::uint64_t{x[0]} * y[1] + std::uint64_t{x[1]} * y[2]) % mod),
                          static_cast<std::uint32_t>(std::uint64_t{x[2]} * y[2] % mod)};
      },
      [](const ElementKey& k) {
        return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
      },
      order_cap);
}

GroupPtr group_from_upper_triangular(std::uint32_t q, const std::vector<UpperTriangular>& generators,
                                     std::size_t order_cap) {
  return realize_upper_triangular(q, generators, order_cap).table;
}

GroupPtr group_from_table(const std::vector<std::vector<std::uint32_t>>& table, std::vector<std::string> labels,
                          std::size_t order_cap) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidGenerator("explicit table is empty");
  if (n > order_cap) throw OrderCapExceeded("group order exceeds cap " + std::to_string(order_cap));
  for (const auto& r : table) {
    if (r.size() != n) throw InvalidGenerator("explicit table is not square");
    for (auto v : r) {
      if (v >= n) throw InvalidGenerator("explicit table entry out of range");
    }
  }
  if (!labels.empty() && labels.size() != n) throw InvalidGenerator("label count differs from table size");

  std::optional<std::uint32_t> identity;
  for (std::uint32_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw InvalidGenerator("explicit table has no identity");

  auto check = [&table](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (table[table[a][b]][c] != table[a][table[b][c]]) {
      throw InvalidGenerator("explicit table is not associative");
    }
  };
  const auto m = static_cast<std::uint32_t>(n);
  if (n <= 512) {
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = 0; b < m; ++b)
        for (std::uint32_t c = 0; c < m; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0);
    for (std::size_t t = 0; t < 10 * n * n; ++t) {
      check(static_cast<std::uint32_t>(rng() % m), static_cast<std::uint32_t>(rng() % m),
            static_cast<std::uint32_t>(rng() % m));
    }
  }

  std::vector<ElementKey> gens;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (x != *identity) gens.push_back({x});
  }
  auto realized = realize_closure(
      {*identity}, gens, [&table](const ElementKey& x, const ElementKey& y) { return ElementKey{table[x[0]][y[0]]}; },
      [&labels](const ElementKey& k) { return labels.empty() ? std::to_string(k[0]) : labels[k[0]]; },
      order_cap);
  if (realized.keys.size() != n) throw InvalidGenerator("explicit table is not a group");
  return realized.table;
}

std::size_t element_order(const GroupTable& group, ElementId x) {
  group.require_valid(x);
  std::size_t k = 1;
  ElementId power = x;
  while (power != GroupTable::identity()) {
    power = group.mul(power, x);
    ++k;
  }
  return k;
}

}  // namespace commgraph
