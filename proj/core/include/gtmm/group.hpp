#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gtmm/errors.hpp"
#include "gtmm/permutation.hpp"

namespace gtmm {

/// Largest group order for which full enumeration is allowed by default.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Largest group order for which a dense multiplication table is memoized.
inline constexpr std::uint64_t kMulTableLimit = 4096;

enum class GroupKind { cyclic, product, symmetric, wreath };

/// A group element: the owning instance tag plus a canonical integer code
/// in [0, |G|). Code 0 is always the identity. Elements are plain values;
/// all operations on them live on Group.
struct Elem {
  std::uint64_t group_id = 0;
  std::uint64_t code = 0;

  friend bool operator==(const Elem&, const Elem&) = default;
  friend std::strong_ordering operator<=>(const Elem&, const Elem&) = default;
};

namespace detail {
struct GroupImpl;
}

/// An immutable finite group: cyclic, direct product, symmetric, or wreath
/// product H wr Sym_n. Copies share the underlying instance; elements may
/// only be combined through the instance that created them.
///
/// Conventions, fixed once and used consistently everywhere:
///  - permutations compose as (a*b)(i) = a(b(i)) (b applied first);
///  - the wreath law is (h,s)(h',s') = (h . s*h', s s') with
///    (s*h')_i = h'_{s^{-1}(i)}, i.e. the top permutation moves base
///    coordinates by a left action;
///  - element codes are mixed-radix: factor codes for products, Lehmer
///    (lexicographic) ranks for permutations, and base-|H| tuple codes
///    paired with a Lehmer rank for wreath elements.
class Group {
 public:
  static Group cyclic(std::uint64_t n);
  static Group direct_product(const Group& a, const Group& b);
  /// k-fold direct power, the DSL's `A^k`.
  static Group direct_power(const Group& a, std::uint64_t k);
  static Group symmetric(std::uint32_t n);
  static Group wreath_product(const Group& h, std::uint32_t n);

  GroupKind kind() const;
  std::uint64_t order() const;
  bool abelian() const;
  std::uint64_t instance_id() const;
  /// Canonical DSL name, e.g. "cyc(4)^3" or "wr(cyc(3)^3, 2)".
  const std::string& name() const;

  Elem identity() const;
  /// Element with the given code; throws DomainError if out of range.
  Elem element(std::uint64_t code) const;
  bool owns(const Elem& e) const;

  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;

  /// All elements in code order, identity first. Throws EnumerationCapError
  /// if the order exceeds the cap.
  std::vector<Elem> elements(std::uint64_t cap = kDefaultEnumerationCap) const;

  // Structure accessors. Each throws DomainError when called on the wrong
  // kind.
  std::uint64_t cyclic_modulus() const;
  const std::vector<Group>& factors() const;
  std::uint32_t symmetric_degree() const;
  const Group& wreath_base() const;
  std::uint32_t wreath_degree() const;

  // Per-kind element builders and views.
  Elem from_factors(std::span<const Elem> parts) const;
  std::vector<Elem> to_factors(const Elem& e) const;
  Elem from_images(std::span<const std::uint32_t> images) const;
  perm::Images to_images(const Elem& e) const;
  Elem from_wreath(std::span<const Elem> base_parts,
                   std::span<const std::uint32_t> images) const;
  std::pair<std::vector<Elem>, perm::Images> to_wreath(const Elem& e) const;

  /// Builds dense multiplication and inverse tables when the order is at
  /// most kMulTableLimit. Idempotent and safe to call from any thread;
  /// a no-op above the limit. Brute-force property checks call this.
  void memoize_tables() const;

  /// Instance identity (element compatibility), not isomorphism.
  friend bool operator==(const Group& a, const Group& b) {
    return a.impl_ == b.impl_;
  }

 private:
  explicit Group(std::shared_ptr<const detail::GroupImpl> impl);
  Elem structural_mul(const Elem& a, const Elem& b) const;
  Elem structural_inv(const Elem& a) const;
  void require_owned(const Elem& e) const;

  std::shared_ptr<const detail::GroupImpl> impl_;
};

/// Same construction tree (kind and parameters), independent of instance
/// identity. parse_group(g.name()) is structurally equal to g.
bool structurally_equal(const Group& a, const Group& b);

}  // namespace gtmm

template <>
struct std::hash<gtmm::Elem> {
  std::size_t operator()(const gtmm::Elem& e) const noexcept {
    std::uint64_t x = e.group_id * 0x9e3779b97f4a7c15ULL ^ e.code;
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};
