#include "commgraph/constructions.hpp"

#include <limits>
#include "json.hpp"

#include "commgraph/errors.hpp"

namespace commgraph {

using json = nlohmann::json;

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::size_t depth(const GroupSpec& spec) {
  std::size_t d = 0;
  for (const auto& c : spec.children) d = std::max(d, depth(c));
  return d + 1;
}

std::string join_labels(const std::vector<std::string>& parts, std::string_view tail = {}) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  if (!tail.empty()) {
    out += ';';
    out += tail;
  }
  out += ')';
  return out;
}

std::uint32_t primitive_root(std::uint32_t q) {
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint64_t x = g;
    std::uint32_t k = 1;
    while (x != 1) {
      x = x * g % q;
      ++k;
    }
    if (k == q - 1) return g;
  }
  return 1;
}

Realization realize_cyclic(std::uint64_t n, std::size_t cap) {
  std::vector<ElementKey> gens;
  if (n > 1) gens.push_back({1});
  return realize_closure(
      {0}, gens,
      [n](const ElementKey& x, const ElementKey& y) {
        return ElementKey{static_cast<std::uint32_t>((std::uint64_t{x[0]} + y[0]) % n)};
      },
      [](const ElementKey& k) { return std::to_string(k[0]); }, cap);
}

Realization realize_dihedral(std::uint64_t n, std::size_t cap) {
  const auto one = static_cast<std::uint32_t>(1 % n);
  return realize_closure(
      {0, 0}, {{one, 0}, {0, 1}},
      [n](const ElementKey& x, const ElementKey& y) {
        // r^a s^e * r^b s^f = r^(a ± b) s^(e+f)
        const std::uint64_t b = x[1] ? (n - y[0]) % n : y[0];
        return ElementKey{static_cast<std::uint32_t>((x[0] + b) % n), x[1] ^ y[1]};
      },
      [](const ElementKey& k) {
        std::string out;
        if (k[0]) out = "r^" + std::to_string(k[0]);
        if (k[1]) out += out.empty() ? "s" : " s";
        return out.empty() ? std::string("e") : out;
      },
      cap);
}

Realization realize_direct(const std::vector<Realization>& parts, std::size_t cap) {
  ElementKey identity(parts.size(), 0);
  std::vector<ElementKey> gens;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (ElementId g : parts[i].table->generators()) {
      ElementKey k(parts.size(), 0);
      k[i] = g;
      gens.push_back(std::move(k));
    }
  }
  std::vector<GroupPtr> tables;
  for (const auto& p : parts) tables.push_back(p.table);
  return realize_closure(
      identity, gens,
      [tables](const ElementKey& x, const ElementKey& y) {
        ElementKey z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = tables[i]->mul(x[i], y[i]);
        return z;
      },
      [tables](const ElementKey& k) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < k.size(); ++i) labels.push_back(tables[i]->label(k[i]));
        return join_labels(labels);
      },
      cap);
}

Realization realize_bs(const GroupPtr& base, std::size_t cap) {
  std::vector<ElementKey> gens;
  for (ElementId h : base->generators()) gens.push_back({h, 0, 0, 0, 0, 1, 2, 3});
  gens.push_back({0, 0, 0, 0, 1, 0, 2, 3});  // (1,2)
  gens.push_back({0, 0, 0, 0, 1, 2, 3, 0});  // (1,2,3,4)
  return realize_closure(
      {0, 0, 0, 0, 0, 1, 2, 3}, gens,
      [base](const ElementKey& x, const ElementKey& y) {
        ElementKey z(8);
        std::array<std::uint32_t, 4> sigma_inv{};
        for (std::uint32_t i = 0; i < 4; ++i) sigma_inv[x[4 + i]] = i;
        for (std::size_t i = 0; i < 4; ++i) {
          z[i] = base->mul(x[i], y[sigma_inv[i]]);
          z[4 + i] = x[4 + y[4 + i]];
        }
        return z;
      },
      [base](const ElementKey& k) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < 4; ++i) labels.push_back(base->label(k[i]));
        return join_labels(labels, cycle_label(Permutation(k.begin() + 4, k.end())));
      },
      cap);
}

void require_cap(const GroupSpec& spec, std::size_t cap) {
  const std::uint64_t order = predicted_order(spec);
  if (order > cap) {
    throw OrderCapExceeded(spec_name(spec) + " has predicted order " +
                           (order == kSaturated ? std::string("> 2^64") : std::to_string(order)) +
                           " above cap " + std::to_string(cap));
  }
}

GroupSpec from_json(const json& doc, std::size_t level) {
  if (level > kMaxSpecDepth) throw InvalidSpec("group spec nesting deeper than " + std::to_string(kMaxSpecDepth));
  if (!doc.is_object() || doc.size() != 1) throw InvalidSpec("group spec must be an object with exactly one key");
  const std::string key = doc.begin().key();
  const json& value = doc.begin().value();
  auto positive = [&](const json& v) -> std::uint64_t {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
      throw InvalidSpec("'" + key + "' expects a positive integer");
    }
    return v.get<std::uint64_t>();
  };
  if (key == "sym") return GroupSpec::sym(positive(value));
  if (key == "cyclic") return GroupSpec::cyclic(positive(value));
  if (key == "dihedral") return GroupSpec::dihedral(positive(value));
  if (key == "p2q") return GroupSpec::p2q(positive(value));
  if (key == "abelian") {
    if (!value.is_array()) throw InvalidSpec("'abelian' expects an array of integers");
    std::vector<std::uint64_t> f;
    for (const auto& v : value) f.push_back(positive(v));
    return GroupSpec::abelian(std::move(f));
  }
  if (key == "direct") {
    if (!value.is_array()) throw InvalidSpec("'direct' expects an array of specs");
    std::vector<GroupSpec> c;
    for (const auto& v : value) c.push_back(from_json(v, level + 1));
    return GroupSpec::direct(std::move(c));
  }
  if (key == "bs") return GroupSpec::bs(from_json(value, level + 1));
  throw InvalidSpec("unknown group kind '" + key + "'");
}

json to_json(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::kSym: return {{"sym", spec.n}};
    case GroupSpec::Kind::kCyclic: return {{"cyclic", spec.n}};
    case GroupSpec::Kind::kDihedral: return {{"dihedral", spec.n}};
    case GroupSpec::Kind::kP2q: return {{"p2q", spec.n}};
    case GroupSpec::Kind::kAbelian: return {{"abelian", spec.factors}};
    case GroupSpec::Kind::kDirect: {
      json arr = json::array();
      for (const auto& c : spec.children) arr.push_back(to_json(c));
      return {{"direct", arr}};
    }
    case GroupSpec::Kind::kBs: return {{"bs", to_json(spec.children.at(0))}};
  }
  return {};
}

}  // namespace

void validate_spec(const GroupSpec& spec) {
  if (depth(spec) > kMaxSpecDepth) throw InvalidSpec("group spec nesting deeper than " + std::to_string(kMaxSpecDepth));
  switch (spec.kind) {
    case GroupSpec::Kind::kSym:
    case GroupSpec::Kind::kCyclic:
    case GroupSpec::Kind::kDihedral:
      if (spec.n < 1) throw InvalidSpec(spec_name(spec) + ": n must be >= 1");
      break;
    case GroupSpec::Kind::kP2q:
      if (!is_prime(spec.n)) throw InvalidSpec("p2q: " + std::to_string(spec.n) + " is not prime");
      break;
    case GroupSpec::Kind::kAbelian:
      if (spec.factors.empty()) throw InvalidSpec("abelian: empty factor list");
      for (auto f : spec.factors) {
        if (f < 1) throw InvalidSpec("abelian: factors must be >= 1");
      }
      break;
    case GroupSpec::Kind::kDirect:
      if (spec.children.empty()) throw InvalidSpec("direct: empty factor list");
      for (const auto& c : spec.children) validate_spec(c);
      break;
    case GroupSpec::Kind::kBs:
      if (spec.children.size() != 1) throw InvalidSpec("bs: expects exactly one base group");
      validate_spec(spec.children[0]);
      break;
  }
}

std::uint64_t predicted_order(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::kSym: {
      std::uint64_t f = 1;
      for (std::uint64_t k = 2; k <= spec.n; ++k) f = sat_mul(f, k);
      return f;
    }
    case GroupSpec::Kind::kCyclic: return spec.n;
    case GroupSpec::Kind::kDihedral: return sat_mul(2, spec.n);
    case GroupSpec::Kind::kP2q: return sat_mul(spec.n, sat_mul(spec.n - 1, spec.n - 1));
    case GroupSpec::Kind::kAbelian: {
      std::uint64_t o = 1;
      for (auto f : spec.factors) o = sat_mul(o, f);
      return o;
    }
    case GroupSpec::Kind::kDirect: {
      std::uint64_t o = 1;
      for (const auto& c : spec.children) o = sat_mul(o, predicted_order(c));
      return o;
    }
    case GroupSpec::Kind::kBs: {
      const std::uint64_t h = predicted_order(spec.children.at(0));
      return sat_mul(24, sat_mul(sat_mul(h, h), sat_mul(h, h)));
    }
  }
  return 0;
}

GroupSpec parse_group_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("malformed group spec: ") + e.what(), e.byte);
  }
  GroupSpec spec = from_json(doc, 1);
  validate_spec(spec);
  return spec;
}

std::string spec_to_json(const GroupSpec& spec) { return to_json(spec).dump(); }

std::string spec_name(const GroupSpec& spec) {
  auto list = [](const auto& items, auto&& fmt) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ",";
      out += fmt(items[i]);
    }
    return out + "]";
  };
  switch (spec.kind) {
    case GroupSpec::Kind::kSym: return "sym(" + std::to_string(spec.n) + ")";
    case GroupSpec::Kind::kCyclic: return "cyclic(" + std::to_string(spec.n) + ")";
    case GroupSpec::Kind::kDihedral: return "dihedral(" + std::to_string(spec.n) + ")";
    case GroupSpec::Kind::kP2q: return "p2q(" + std::to_string(spec.n) + ")";
    case GroupSpec::Kind::kAbelian:
      return "abelian(" + list(spec.factors, [](std::uint64_t f) { return std::to_string(f); }) + ")";
    case GroupSpec::Kind::kDirect:
      return "direct(" + list(spec.children, [](const GroupSpec& c) { return spec_name(c); }) + ")";
    case GroupSpec::Kind::kBs: return "bs(" + spec_name(spec.children.at(0)) + ")";
  }
  return "?";
}

Realization realize(const GroupSpec& spec, std::size_t order_cap) {
  validate_spec(spec);
  require_cap(spec, order_cap);
  switch (spec.kind) {
    case GroupSpec::Kind::kSym: {
      const std::size_t n = spec.n;
      std::vector<Permutation> gens;
      if (n >= 2) {
        Permutation swap(n), cycle(n);
        for (std::size_t i = 0; i < n; ++i) {
          swap[i] = static_cast<std::uint32_t>(i);
          cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
        }
        swap[0] = 1;
        swap[1] = 0;
        gens.push_back(swap);
        if (n > 2) gens.push_back(cycle);
      }
      return realize_permutations(n, gens, order_cap);
    }
    case GroupSpec::Kind::kCyclic: return realize_cyclic(spec.n, order_cap);
    case GroupSpec::Kind::kDihedral: return realize_dihedral(spec.n, order_cap);
    case GroupSpec::Kind::kP2q: {
      const auto q = static_cast<std::uint32_t>(spec.n);
      std::vector<UpperTriangular> gens{{1, 1, 1}};
      const std::uint32_t g = primitive_root(q);
      if (g != 1) {
        gens.push_back({g, 0, 1});
        gens.push_back({1, 0, g});
      }
      return realize_upper_triangular(q, gens, order_cap);
    }
    case GroupSpec::Kind::kAbelian: {
      std::vector<Realization> parts;
      for (auto f : spec.factors) parts.push_back(realize_cyclic(f, order_cap));
      return realize_direct(parts, order_cap);
    }
    case GroupSpec::Kind::kDirect: {
      std::vector<Realization> parts;
      for (const auto& c : spec.children) parts.push_back(realize(c, order_cap));
      return realize_direct(parts, order_cap);
    }
    case GroupSpec::Kind::kBs: return realize_bs(construct(spec.children[0], order_cap), order_cap);
  }
  throw InvalidSpec("unknown group kind");
}

GroupPtr construct(const GroupSpec& spec, std::size_t order_cap) { return realize(spec, order_cap).table; }

BsGroup::BsGroup(const GroupSpec& base, std::size_t order_cap) {
  const GroupSpec whole = GroupSpec::bs(base);
  validate_spec(whole);
  require_cap(whole, order_cap);
  base_ = realize(base, order_cap);
  realization_ = realize_bs(base_.table, order_cap);
}

ElementId BsGroup::element(const std::array<ElementId, 4>& coords, const std::array<std::uint32_t, 4>& sigma) const {
  ElementKey key(coords.begin(), coords.end());
  key.insert(key.end(), sigma.begin(), sigma.end());
  return realization_.id_of(key);
}

ElementId BsGroup::permutation(std::string_view cycles) const {
  const Permutation p = parse_cycles(cycles, 4);
  return element({0, 0, 0, 0}, {p[0], p[1], p[2], p[3]});
}

ElementId BsGroup::coordinate(std::size_t slot, ElementId h) const {
  std::array<ElementId, 4> coords{0, 0, 0, 0};
  coords.at(slot) = h;
  return element(coords, {0, 1, 2, 3});
}

}  // namespace commgraph
