#include "gtmm/group.hpp"

#include <atomic>
#include <mutex>
#include <sstream>

namespace gtmm {

namespace detail {

namespace {

std::uint64_t next_instance_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b,
                          const char* what) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError(std::string(what) + " overflows 64 bits");
  }
  return r;
}

}  // namespace

struct GroupImpl {
  GroupKind kind;
  std::uint64_t id = next_instance_id();
  std::uint64_t order = 0;
  bool abelian = false;
  std::string name;

  std::uint64_t modulus = 0;        // cyclic
  std::vector<Group> factors;       // product (flattened, at least 2)
  std::uint32_t degree = 0;         // symmetric / wreath top degree
  std::vector<Group> wreath_base;   // wreath: single entry, H
  std::uint64_t top_order = 0;      // wreath: degree!
  std::vector<std::uint64_t> radix; // product: suffix orders for encoding

  mutable std::once_flag tables_once;
  mutable std::atomic<bool> tables_ready{false};
  mutable std::vector<std::uint32_t> mul_table;
  mutable std::vector<std::uint32_t> inv_table;
};

}  // namespace detail

using detail::GroupImpl;

Group::Group(std::shared_ptr<const GroupImpl> impl) : impl_(std::move(impl)) {}

Group Group::cyclic(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclic group order must be positive");
  auto impl = std::make_shared<GroupImpl>();
  impl->kind = GroupKind::cyclic;
  impl->order = n;
  impl->abelian = true;
  impl->modulus = n;
  impl->name = "cyc(" + std::to_string(n) + ")";
  return Group(std::move(impl));
}

namespace {

// Canonical product name: consecutive runs of equal factor names collapse
// into name^k, runs joined with " x ".
std::string product_name(const std::vector<Group>& factors) {
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < factors.size()) {
    std::size_t j = i;
    while (j < factors.size() && factors[j].name() == factors[i].name()) ++j;
    if (!first) out << " x ";
    out << factors[i].name();
    if (j - i > 1) out << "^" << (j - i);
    first = false;
    i = j;
  }
  return out.str();
}

void append_flattened(std::vector<Group>& into, const Group& g) {
  if (g.kind() == GroupKind::product) {
    for (const Group& f : g.factors()) into.push_back(f);
  } else {
    into.push_back(g);
  }
}

std::shared_ptr<GroupImpl> make_product_impl(std::vector<Group> factors) {
  auto impl = std::make_shared<GroupImpl>();
  impl->kind = GroupKind::product;
  impl->order = 1;
  impl->abelian = true;
  for (const Group& f : factors) {
    impl->order = detail::checked_mul(impl->order, f.order(),
                                      "direct product order");
    impl->abelian = impl->abelian && f.abelian();
  }
  // radix[i] = product of orders of factors after i, for mixed-radix codes.
  impl->radix.assign(factors.size(), 1);
  for (std::size_t i = factors.size(); i-- > 1;) {
    impl->radix[i - 1] = impl->radix[i] * factors[i].order();
  }
  impl->name = product_name(factors);
  impl->factors = std::move(factors);
  return impl;
}

}  // namespace

Group Group::direct_product(const Group& a, const Group& b) {
  // Direct products are associative; nested products flatten into one
  // factor list so that element words stay flat tuples of factor codes.
  std::vector<Group> factors;
  append_flattened(factors, a);
  append_flattened(factors, b);
  return Group(make_product_impl(std::move(factors)));
}

Group Group::direct_power(const Group& a, std::uint64_t k) {
  if (k == 0) throw DomainError("direct power exponent must be positive");
  if (k == 1) return a;
  std::vector<Group> factors;
  for (std::uint64_t i = 0; i < k; ++i) append_flattened(factors, a);
  return Group(make_product_impl(std::move(factors)));
}

Group Group::symmetric(std::uint32_t n) {
  if (n == 0) throw DomainError("symmetric group degree must be positive");
  auto impl = std::make_shared<GroupImpl>();
  impl->kind = GroupKind::symmetric;
  impl->order = perm::factorial(n);
  impl->abelian = n <= 2;
  impl->degree = n;
  impl->name = "sym(" + std::to_string(n) + ")";
  return Group(std::move(impl));
}

Group Group::wreath_product(const Group& h, std::uint32_t n) {
  if (n == 0) throw DomainError("wreath product degree must be positive");
  auto impl = std::make_shared<GroupImpl>();
  impl->kind = GroupKind::wreath;
  impl->degree = n;
  impl->top_order = perm::factorial(n);
  std::uint64_t base_order = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    base_order = detail::checked_mul(base_order, h.order(),
                                     "wreath base order |H|^n");
  }
  impl->order = detail::checked_mul(base_order, impl->top_order,
                                    "wreath product order");
  impl->abelian = impl->order <= 2 || (n == 1 && h.abelian());
  impl->wreath_base.push_back(h);
  impl->name = "wr(" + h.name() + ", " + std::to_string(n) + ")";
  return Group(std::move(impl));
}

GroupKind Group::kind() const { return impl_->kind; }
std::uint64_t Group::order() const { return impl_->order; }
bool Group::abelian() const { return impl_->abelian; }
std::uint64_t Group::instance_id() const { return impl_->id; }
const std::string& Group::name() const { return impl_->name; }

Elem Group::identity() const { return Elem{impl_->id, 0}; }

Elem Group::element(std::uint64_t code) const {
  if (code >= impl_->order) {
    throw DomainError("element code " + std::to_string(code) +
                      " out of range for " + impl_->name);
  }
  return Elem{impl_->id, code};
}

bool Group::owns(const Elem& e) const { return e.group_id == impl_->id; }

void Group::require_owned(const Elem& e) const {
  if (e.group_id != impl_->id) {
    throw InstanceMismatchError("element belongs to a different instance of " +
                                impl_->name);
  }
  if (e.code >= impl_->order) {
    throw DomainError("corrupt element code for " + impl_->name);
  }
}

std::uint64_t Group::cyclic_modulus() const {
  if (impl_->kind != GroupKind::cyclic) {
    throw DomainError(impl_->name + " is not cyclic");
  }
  return impl_->modulus;
}

const std::vector<Group>& Group::factors() const {
  if (impl_->kind != GroupKind::product) {
    throw DomainError(impl_->name + " is not a direct product");
  }
  return impl_->factors;
}

std::uint32_t Group::symmetric_degree() const {
  if (impl_->kind != GroupKind::symmetric) {
    throw DomainError(impl_->name + " is not symmetric");
  }
  return impl_->degree;
}

const Group& Group::wreath_base() const {
  if (impl_->kind != GroupKind::wreath) {
    throw DomainError(impl_->name + " is not a wreath product");
  }
  return impl_->wreath_base.front();
}

std::uint32_t Group::wreath_degree() const {
  if (impl_->kind != GroupKind::wreath) {
    throw DomainError(impl_->name + " is not a wreath product");
  }
  return impl_->degree;
}

Elem Group::from_factors(std::span<const Elem> parts) const {
  const auto& factors = this->factors();
  if (parts.size() != factors.size()) {
    throw DomainError("expected " + std::to_string(factors.size()) +
                      " factor elements for " + impl_->name);
  }
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    factors[i].require_owned(parts[i]);
    code = code * factors[i].order() + parts[i].code;
  }
  return Elem{impl_->id, code};
}

std::vector<Elem> Group::to_factors(const Elem& e) const {
  require_owned(e);
  const auto& factors = this->factors();
  std::vector<Elem> parts(factors.size());
  std::uint64_t code = e.code;
  for (std::size_t i = factors.size(); i-- > 0;) {
    const std::uint64_t o = factors[i].order();
    parts[i] = Elem{factors[i].instance_id(), code % o};
    code /= o;
  }
  return parts;
}

Elem Group::from_images(std::span<const std::uint32_t> images) const {
  const std::uint32_t n = symmetric_degree();
  perm::Images p(images.begin(), images.end());
  if (p.size() != n || !perm::is_valid(p)) {
    throw DomainError("invalid permutation images for " + impl_->name);
  }
  return Elem{impl_->id, perm::rank(p)};
}

perm::Images Group::to_images(const Elem& e) const {
  require_owned(e);
  return perm::unrank(symmetric_degree(), e.code);
}

Elem Group::from_wreath(std::span<const Elem> base_parts,
                        std::span<const std::uint32_t> images) const {
  const Group& h = wreath_base();
  const std::uint32_t n = wreath_degree();
  if (base_parts.size() != n) {
    throw DomainError("expected " + std::to_string(n) +
                      " base coordinates for " + impl_->name);
  }
  perm::Images p(images.begin(), images.end());
  if (p.size() != n || !perm::is_valid(p)) {
    throw DomainError("invalid top permutation for " + impl_->name);
  }
  std::uint64_t tuple = 0;
  for (const Elem& part : base_parts) {
    h.require_owned(part);
    tuple = tuple * h.order() + part.code;
  }
  return Elem{impl_->id, tuple * impl_->top_order + perm::rank(p)};
}

std::pair<std::vector<Elem>, perm::Images> Group::to_wreath(
    const Elem& e) const {
  require_owned(e);
  const Group& h = wreath_base();
  const std::uint32_t n = wreath_degree();
  const std::uint64_t perm_rank = e.code % impl_->top_order;
  std::uint64_t tuple = e.code / impl_->top_order;
  std::vector<Elem> parts(n);
  for (std::uint32_t i = n; i-- > 0;) {
    parts[i] = Elem{h.instance_id(), tuple % h.order()};
    tuple /= h.order();
  }
  return {std::move(parts), perm::unrank(n, perm_rank)};
}

Elem Group::structural_mul(const Elem& a, const Elem& b) const {
  switch (impl_->kind) {
    case GroupKind::cyclic: {
      std::uint64_t s = a.code + b.code;
      if (s >= impl_->modulus) s -= impl_->modulus;
      return Elem{impl_->id, s};
    }
    case GroupKind::product: {
      const auto& factors = impl_->factors;
      std::uint64_t code = 0;
      std::uint64_t ca = a.code;
      std::uint64_t cb = b.code;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::uint64_t radix = impl_->radix[i];
        const Group& f = factors[i];
        const Elem fa{f.instance_id(), ca / radix};
        const Elem fb{f.instance_id(), cb / radix};
        ca %= radix;
        cb %= radix;
        code += f.mul(fa, fb).code * radix;
      }
      return Elem{impl_->id, code};
    }
    case GroupKind::symmetric: {
      const std::uint32_t n = impl_->degree;
      return Elem{impl_->id, perm::rank(perm::compose(perm::unrank(n, a.code),
                                                      perm::unrank(n, b.code)))};
    }
    case GroupKind::wreath: {
      auto [ha, pa] = to_wreath(a);
      auto [hb, pb] = to_wreath(b);
      const Group& h = wreath_base();
      const perm::Images pa_inv = perm::inverse(pa);
      std::vector<Elem> parts(ha.size());
      // (h,s)(h',s'): coordinate i picks up h'_{s^{-1}(i)}.
      for (std::size_t i = 0; i < ha.size(); ++i) {
        parts[i] = h.mul(ha[i], hb[pa_inv[i]]);
      }
      const perm::Images top = perm::compose(pa, pb);
      std::uint64_t tuple = 0;
      for (const Elem& part : parts) tuple = tuple * h.order() + part.code;
      return Elem{impl_->id, tuple * impl_->top_order + perm::rank(top)};
    }
  }
  throw DomainError("unreachable group kind");
}

Elem Group::structural_inv(const Elem& a) const {
  switch (impl_->kind) {
    case GroupKind::cyclic:
      return Elem{impl_->id,
                  a.code == 0 ? 0 : impl_->modulus - a.code};
    case GroupKind::product: {
      const auto& factors = impl_->factors;
      std::uint64_t code = 0;
      std::uint64_t ca = a.code;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::uint64_t radix = impl_->radix[i];
        const Group& f = factors[i];
        const Elem fa{f.instance_id(), ca / radix};
        ca %= radix;
        code += f.inv(fa).code * radix;
      }
      return Elem{impl_->id, code};
    }
    case GroupKind::symmetric: {
      const std::uint32_t n = impl_->degree;
      return Elem{impl_->id,
                  perm::rank(perm::inverse(perm::unrank(n, a.code)))};
    }
    case GroupKind::wreath: {
      auto [ha, pa] = to_wreath(a);
      const Group& h = wreath_base();
      // (h,s)^{-1} = (k, s^{-1}) with k_i = h_{s(i)}^{-1}.
      std::vector<Elem> parts(ha.size());
      for (std::size_t i = 0; i < ha.size(); ++i) {
        parts[i] = h.inv(ha[pa[i]]);
      }
      const perm::Images top = perm::inverse(pa);
      std::uint64_t tuple = 0;
      for (const Elem& part : parts) tuple = tuple * h.order() + part.code;
      return Elem{impl_->id, tuple * impl_->top_order + perm::rank(top)};
    }
  }
  throw DomainError("unreachable group kind");
}

Elem Group::mul(const Elem& a, const Elem& b) const {
  require_owned(a);
  require_owned(b);
  if (impl_->tables_ready.load(std::memory_order_acquire)) {
    return Elem{impl_->id,
                impl_->mul_table[a.code * impl_->order + b.code]};
  }
  return structural_mul(a, b);
}

Elem Group::inv(const Elem& a) const {
  require_owned(a);
  if (impl_->tables_ready.load(std::memory_order_acquire)) {
    return Elem{impl_->id, impl_->inv_table[a.code]};
  }
  return structural_inv(a);
}

std::vector<Elem> Group::elements(std::uint64_t cap) const {
  if (impl_->order > cap) {
    throw EnumerationCapError("enumeration of " + impl_->name + " (order " +
                              std::to_string(impl_->order) +
                              ") exceeds cap " + std::to_string(cap));
  }
  std::vector<Elem> out;
  out.reserve(impl_->order);
  for (std::uint64_t c = 0; c < impl_->order; ++c) {
    out.push_back(Elem{impl_->id, c});
  }
  return out;
}

void Group::memoize_tables() const {
  if (impl_->order > kMulTableLimit) return;
  std::call_once(impl_->tables_once, [this] {
    const std::uint64_t n = impl_->order;
    impl_->mul_table.resize(n * n);
    impl_->inv_table.resize(n);
    for (std::uint64_t a = 0; a < n; ++a) {
      const Elem ea{impl_->id, a};
      impl_->inv_table[a] =
          static_cast<std::uint32_t>(structural_inv(ea).code);
      for (std::uint64_t b = 0; b < n; ++b) {
        impl_->mul_table[a * n + b] = static_cast<std::uint32_t>(
            structural_mul(ea, Elem{impl_->id, b}).code);
      }
    }
    impl_->tables_ready.store(true, std::memory_order_release);
  });
}

bool structurally_equal(const Group& a, const Group& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GroupKind::cyclic:
      return a.cyclic_modulus() == b.cyclic_modulus();
    case GroupKind::symmetric:
      return a.symmetric_degree() == b.symmetric_degree();
    case GroupKind::product: {
      const auto& fa = a.factors();
      const auto& fb = b.factors();
      if (fa.size() != fb.size()) return false;
      for (std::size_t i = 0; i < fa.size(); ++i) {
        if (!structurally_equal(fa[i], fb[i])) return false;
      }
      return true;
    }
    case GroupKind::wreath:
      return a.wreath_degree() == b.wreath_degree() &&
             structurally_equal(a.wreath_base(), b.wreath_base());
  }
  return false;
}

}  // namespace gtmm
