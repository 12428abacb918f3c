#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace commgraph {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 5000;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// k with n == p^k, or nullopt when n is not a power of p. n = 1 gives 0.
std::optional<unsigned> p_power_exponent(std::uint64_t n, std::uint64_t p);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// A finite group as a dense multiplication table. Element 0 is the identity.
/// Immutable once built; share it through GroupPtr.
class GroupTable {
 public:
  /// Assembles a table from raw parts and computes the inverse array.
  /// `mult` is row-major n*n. Throws InvalidGenerator if the parts do not
  /// describe a group with identity 0 (associativity is not checked here;
  /// see check_invariants).
  GroupTable(std::size_t order, std::vector<ElementId> mult,
             std::vector<std::string> labels, std::vector<ElementId> generators);

  std::size_t order() const noexcept { return order_; }
  static constexpr ElementId identity() noexcept { return 0; }

  ElementId mul(ElementId a, ElementId b) const noexcept {
    return mult_[static_cast<std::size_t>(a) * order_ + b];
  }
  ElementId inv(ElementId a) const noexcept { return inv_[a]; }

  /// Raw row-major table; row a is mult[a][*].
  std::span<const ElementId> row(ElementId a) const noexcept {
    return {mult_.data() + static_cast<std::size_t>(a) * order_, order_};
  }

  const std::string& label(ElementId a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Generators used to build the table, in BFS order of use.
  const std::vector<ElementId>& generators() const noexcept { return generators_; }

  const std::vector<PrimePower>& order_factorization() const noexcept { return factorization_; }

  std::optional<ElementId> find_label(std::string_view label) const;

  bool is_valid(ElementId a) const noexcept { return a < order_; }
  void require_valid(ElementId a) const;

  /// Exhaustive associativity for order <= 512, otherwise 10*n^2 seeded
  /// random triples. Throws InvalidGenerator describing the first failure.
  void check_invariants(std::uint64_t seed = 0) const;

 private:
  std::size_t order_;
  std::vector<ElementId> mult_;
  std::vector<ElementId> inv_;
  std::vector<std::string> labels_;
  std::vector<ElementId> generators_;
  std::vector<PrimePower> factorization_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Key for a concrete element representation (permutation images, matrix
/// entries, coordinate tuples, ...).
using ElementKey = std::vector<std::uint32_t>;

struct ElementKeyHash {
  std::size_t operator()(const ElementKey& k) const noexcept;
};

/// A GroupTable together with the concrete elements its ids stand for.
struct Realization {
  GroupPtr table;
  std::vector<ElementKey> keys;
  std::unordered_map<ElementKey, ElementId, ElementKeyHash> index;

  /// Throws NotFound if the key is not an element of the group.
  ElementId id_of(const ElementKey& key) const;
};

using KeyProduct = std::function<ElementKey(const ElementKey&, const ElementKey&)>;
using KeyLabel = std::function<std::string(const ElementKey&)>;

/// Closure of `generators` under `product`. Ids are handed out breadth-first
/// from the identity: each discovered element is right-multiplied by the
/// generators in the given order. Throws OrderCapExceeded as soon as more than
/// `order_cap` elements are found.
Realization realize_closure(const ElementKey& identity, const std::vector<ElementKey>& generators,
                            const KeyProduct& product, const KeyLabel& label,
                            std::size_t order_cap = kDefaultOrderCap);

// ---------------------------------------------------------------------------
// Concrete realizations.

/// Permutation of {0..n-1} given by images; composition (xy)(i) = x(y(i)).
using Permutation = std::vector<std::uint32_t>;

/// Parses 1-based cycle notation such as "(1,2)(3,4)" or "()" on `points`
/// points. Throws InvalidGenerator on malformed input.
Permutation parse_cycles(std::string_view text, std::size_t points);

/// Canonical 1-based cycle notation: cycles start at their least point and
/// are ordered by it; fixed points omitted; identity is "()".
std::string cycle_label(const Permutation& perm);

Realization realize_permutations(std::size_t points, const std::vector<Permutation>& generators,
                                 std::size_t order_cap = kDefaultOrderCap);

GroupPtr group_from_permutations(std::size_t points, const std::vector<Permutation>& generators,
                                 std::size_t order_cap = kDefaultOrderCap);

/// [[a, b], [0, d]] over F_q.
struct UpperTriangular {
  std::uint32_t a = 1;
  std::uint32_t b = 0;
  std::uint32_t d = 1;
};

Realization realize_upper_triangular(std::uint32_t q, const std::vector<UpperTriangular>& generators,
                                     std::size_t order_cap = kDefaultOrderCap);

GroupPtr group_from_upper_triangular(std::uint32_t q, const std::vector<UpperTriangular>& generators,
                                     std::size_t order_cap = kDefaultOrderCap);

/// Builds from an explicit Cayley table over ids 0..n-1 (any element may be
/// the identity). Every element is used as a generator, in id order, so the
/// resulting ids are the input order with the identity moved to the front.
/// The table is validated, including associativity.
GroupPtr group_from_table(const std::vector<std::vector<std::uint32_t>>& table,
                          std::vector<std::string> labels = {},
                          std::size_t order_cap = kDefaultOrderCap);

/// Least k >= 1 with x^k = 1.
std::size_t element_order(const GroupTable& group, ElementId x);

}  // namespace commgraph
