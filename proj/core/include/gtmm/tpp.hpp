#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gtmm/group.hpp"

namespace gtmm {

/// Naive checking is used below this bound on m^2 p^2 q^2; the quotient-set
/// method takes over above it.
inline constexpr std::uint64_t kNaiveTppCutover = 10'000;

class SimultaneousFamily;

/// An ordered triple of subsets (S, T, U) of one group. Order is
/// significant: realization indexes matrix rows and columns positionally by
/// subset elements. Duplicates within a subset are rejected, not deduped.
class SubsetTriple {
 public:
  SubsetTriple(Group group, std::vector<Elem> s, std::vector<Elem> t,
               std::vector<Elem> u);

  const Group& group() const { return group_; }
  const std::vector<Elem>& s() const { return s_; }
  const std::vector<Elem>& t() const { return t_; }
  const std::vector<Elem>& u() const { return u_; }

  /// (m, p, q) = (|S|, |T|, |U|).
  std::array<std::uint64_t, 3> sizes() const;
  /// m*p*q, the size of the realized multiplication.
  std::uint64_t size() const;

  bool tpp_verified() const { return tpp_verified_; }

 private:
  friend bool tpp_check(SubsetTriple& t);
  friend class SimultaneousFamily;
  friend bool stpp_check(SimultaneousFamily& f);
  friend bool tpp_check_each(SimultaneousFamily& f);

  Group group_;
  std::vector<Elem> s_, t_, u_;
  bool tpp_verified_ = false;
};

/// A violating sextuple: s'·s^{-1}·t'·t^{-1}·u'·u^{-1} = 1 with the pairs
/// not all equal.
struct TppWitness {
  Elem s_prime, s, t_prime, t, u_prime, u;
};

/// A violating index triple and element sextuple for a family:
/// s_i·s_j^{-1}·t_j·t_k^{-1}·u_k·u_i^{-1} = 1 without i = j = k and
/// s_i = s_j, t_j = t_k, u_k = u_i.
struct StppWitness {
  std::size_t i = 0, j = 0, k = 0;
  Elem s_i, s_j, t_j, t_k, u_k, u_i;
};

/// The right-quotient set { a·b^{-1} : a, b in S }, sorted by code.
/// Always contains the identity.
std::vector<Elem> quotient_set(const Group& g, std::span<const Elem> s);

/// Exhaustive sextuple scan, cost O(m^2 p^2 q^2). This is the oracle the
/// quotient-set checker is measured against.
std::optional<TppWitness> find_tpp_violation_naive(const SubsetTriple& t);

/// Quotient-set checker, cost O(|SS^-1| * |TT^-1|) with hashed lookups into
/// UU^-1. Agrees with the naive scan on every input.
std::optional<TppWitness> find_tpp_violation(const SubsetTriple& t);

bool tpp_check_naive(const SubsetTriple& t);

/// Dispatches naive vs quotient-set by kNaiveTppCutover and stamps the
/// verified flag on success.
bool tpp_check(SubsetTriple& t);

enum class FamilyStatus { unchecked, tpp_each, stpp };

/// An ordered family of subset triples over one group, carrying its
/// verification state. The family is immutable after construction except
/// for the status stamp.
class SimultaneousFamily {
 public:
  SimultaneousFamily(Group group, std::vector<SubsetTriple> triples);

  const Group& group() const { return group_; }
  const std::vector<SubsetTriple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  FamilyStatus status() const { return status_; }

  /// Component tensor sizes (m_i, p_i, q_i) per triple.
  std::vector<std::array<std::uint64_t, 3>> tensor_sizes() const;

 private:
  friend bool stpp_check(SimultaneousFamily& f);
  friend bool tpp_check_each(SimultaneousFamily& f);

  Group group_;
  std::vector<SubsetTriple> triples_;
  FamilyStatus status_ = FamilyStatus::unchecked;
};

/// Checks the simultaneous property over every ordered index triple
/// (i, j, k), repeats included. The diagonal i = j = k is the plain triple
/// product property of each member; off the diagonal the quotient equation
/// must have no solution at all, since the conclusion also forces the
/// indices to match. The stronger index-matching form is what makes packed
/// realization separable; see realize_simultaneous.
std::optional<StppWitness> find_stpp_violation(const SimultaneousFamily& f);

/// Runs find_stpp_violation and stamps FamilyStatus::stpp on success.
bool stpp_check(SimultaneousFamily& f);

/// Verifies each member triple individually; stamps FamilyStatus::tpp_each
/// when all pass (unless the family is already stpp-verified).
bool tpp_check_each(SimultaneousFamily& f);

}  // namespace gtmm
