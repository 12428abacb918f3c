#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "commgraph/group.hpp"

namespace commgraph {

/// Declarative description of a group construction. Serialized as a single
/// object with exactly one key, e.g. {"bs": {"cyclic": 3}}.
struct GroupSpec {
  enum class Kind { kSym, kCyclic, kDihedral, kAbelian, kDirect, kP2q, kBs };

  Kind kind = Kind::kCyclic;
  std::uint64_t n = 1;                ///< sym / cyclic / dihedral degree, p2q modulus
  std::vector<std::uint64_t> factors; ///< abelian
  std::vector<GroupSpec> children;    ///< direct factors, or the single bs base

  static GroupSpec sym(std::uint64_t n) { return {Kind::kSym, n, {}, {}}; }
  static GroupSpec cyclic(std::uint64_t n) { return {Kind::kCyclic, n, {}, {}}; }
  static GroupSpec dihedral(std::uint64_t n) { return {Kind::kDihedral, n, {}, {}}; }
  static GroupSpec abelian(std::vector<std::uint64_t> f) { return {Kind::kAbelian, 0, std::move(f), {}}; }
  static GroupSpec direct(std::vector<GroupSpec> c) { return {Kind::kDirect, 0, {}, std::move(c)}; }
  static GroupSpec p2q(std::uint64_t q) { return {Kind::kP2q, q, {}, {}}; }
  static GroupSpec bs(GroupSpec base) { return {Kind::kBs, 0, {}, {std::move(base)}}; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

inline constexpr std::size_t kMaxSpecDepth = 4;

/// Throws InvalidSpec: n >= 1, q prime, depth <= kMaxSpecDepth, non-empty lists.
void validate_spec(const GroupSpec& spec);

/// Order predicted from the construction's cardinality formula; saturates
/// at UINT64_MAX.
std::uint64_t predicted_order(const GroupSpec& spec);

/// Throws SyntaxError (malformed document) or InvalidSpec (well-formed but
/// not a valid spec).
GroupSpec parse_group_spec(std::string_view text);

/// Compact canonical document, e.g. {"bs":{"cyclic":3}}.
std::string spec_to_json(const GroupSpec& spec);

/// Human-readable name, e.g. bs(cyclic(3)).
std::string spec_name(const GroupSpec& spec);

/// Element representation per kind:
///   sym       permutation images (0-based)
///   cyclic    {k}
///   dihedral  {k, e} for r^k s^e
///   p2q       {a, b, d}
///   abelian / direct  one child id per factor
///   bs        {h1, h2, h3, h4, σ(0), σ(1), σ(2), σ(3)}
Realization realize(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

/// Throws OrderCapExceeded before materializing when the predicted order is
/// above the cap.
GroupPtr construct(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

/// BS(H) = H^4 ⋊ Sym_4 with (u,σ)(v,τ) = (u·(σ·v), στ), (σ·v)_i = v_{σ^-1(i)}.
/// Keeps the base realization so elements can be addressed by coordinates.
class BsGroup {
 public:
  explicit BsGroup(const GroupSpec& base, std::size_t order_cap = kDefaultOrderCap);

  const GroupPtr& table() const noexcept { return realization_.table; }
  const GroupPtr& base() const noexcept { return base_.table; }
  const Realization& base_realization() const noexcept { return base_; }

  /// Element ((h1,h2,h3,h4), σ); σ as 0-based images on {0,1,2,3}.
  ElementId element(const std::array<ElementId, 4>& coords, const std::array<std::uint32_t, 4>& sigma) const;

  /// Element (1, σ) with σ in 1-based cycle notation, e.g. "(1,2)".
  ElementId permutation(std::string_view cycles) const;

  /// Element with h in coordinate `slot` (0-based) and identity elsewhere.
  ElementId coordinate(std::size_t slot, ElementId h) const;

 private:
  Realization base_;
  Realization realization_;
};

}  // namespace commgraph
