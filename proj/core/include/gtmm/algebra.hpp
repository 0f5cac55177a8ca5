#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gtmm/group.hpp"
#include "gtmm/matrix.hpp"
#include "gtmm/tpp.hpp"

namespace gtmm {

/// Scalar multiplication counter threaded through the exact kernels.
struct OpCount {
  std::uint64_t scalar_mults = 0;
};

/// Sparse formal sum of group elements with exact rational coefficients.
/// Zero coefficients are never stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(Group group);

  const Group& group() const { return group_; }
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the given element; zero when absent.
  const Rational& coefficient(const Elem& e) const;

  /// Adds c * e; removes the term when the sum cancels to zero.
  void add_term(const Elem& e, const Rational& c);

  /// Terms sorted by element code, for deterministic output.
  std::vector<std::pair<Elem, Rational>> sorted_terms() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  friend AlgebraElement algebra_mul(const AlgebraElement&,
                                    const AlgebraElement&, OpCount*);

  Group group_;
  std::vector<std::pair<std::uint64_t, Rational>> terms_;  // kept sorted
};

/// Embeds A as sum over (s, t) of A[s][t] * s^{-1} t. Coefficients landing
/// on the same group element accumulate; under the triple product property
/// the map (s, t) -> s^{-1} t is injective and no accumulation happens.
AlgebraElement embed_left(const Group& g, std::span<const Elem> s,
                          std::span<const Elem> t, const RationalMatrix& a);

/// Embeds B as sum over (t, u) of B[t][u] * t^{-1} u.
AlgebraElement embed_right(const Group& g, std::span<const Elem> t,
                           std::span<const Elem> u, const RationalMatrix& b);

/// Full convolution: the coefficient of z is the sum of x_a * y_b over all
/// a·b = z. Cost is nnz(x) * nnz(y) exact scalar multiplications, reported
/// through ops when given.
AlgebraElement algebra_mul(const AlgebraElement& x, const AlgebraElement& y,
                           OpCount* ops = nullptr);

/// Reads the matrix M[s][u] = coefficient of s^{-1} u.
RationalMatrix extract_product(const AlgebraElement& z,
                               std::span<const Elem> s,
                               std::span<const Elem> u);

/// Computes A*B exactly through the group algebra of the triple's group.
/// Requires t.tpp_verified(); the embedding injectivity that the property
/// guarantees is asserted along the way.
RationalMatrix realize_product(const SubsetTriple& t, const RationalMatrix& a,
                               const RationalMatrix& b, OpCount* ops = nullptr);

struct MatrixPair {
  RationalMatrix a, b;
};

/// Computes every A_i*B_i exactly with ONE algebra multiplication, packing
/// all pairs into two algebra elements. Requires the family to be
/// stpp-verified, and additionally refuses families whose blocks overlap in
/// a way that would let one packed product leak into another block's
/// coefficients (cannot happen for the families built in this library, all
/// of which have pairwise disjoint index subsets).
std::vector<RationalMatrix> realize_simultaneous(
    const SimultaneousFamily& f, std::span<const MatrixPair> pairs,
    OpCount* ops = nullptr);

}  // namespace gtmm
