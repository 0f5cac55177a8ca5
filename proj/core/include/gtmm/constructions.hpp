#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gtmm/group.hpp"
#include "gtmm/tpp.hpp"

namespace gtmm {

/// One triple of top permutations (sigma, tau, upsilon), each of the wreath
/// degree, selecting the factor ordering of a permuted product triple.
struct PermTriple {
  perm::Images sigma, tau, upsilon;
};

/// A set of k permutation triples over Sym_n.
struct PermutationFamily {
  std::uint32_t degree = 0;
  std::vector<PermTriple> triples;

  std::size_t k() const { return triples.size(); }
};

/// The standard two-triple family over Cyc_n x Cyc_n x Cyc_n whose subsets
/// are punctured coordinate axes:
///   S1 = (C\{0}) x {0} x {0},  T1 = {0} x (C\{0}) x {0},  U1 = {0} x {0} x (C\{0}),
/// with the second triple cyclically shifted one coordinate right. It
/// realizes <n-1, n-1, n-1> twice simultaneously; the returned family is
/// stpp-verified.
SimultaneousFamily punctured_axis_family(std::uint64_t n);

/// The componentwise product family over G x G': |I| * |I'| triples
/// (S_i x S'_j, T_i x T'_j, U_i x U'_j). Requires both inputs verified;
/// the result is re-verified (the simultaneous property is preserved by
/// direct products).
SimultaneousFamily product_family(const SimultaneousFamily& f,
                                  const SimultaneousFamily& g);

/// Lifts an stpp-verified family of n triples over H to the single triple
///   { s·sigma : s in prod S_i, sigma in Sym_n }  (and likewise T, U)
/// over H wr Sym_n, of sizes n!*prod m_i, n!*prod p_i, n!*prod q_i. The
/// result passes the triple product property; verified on return unless
/// verify is false.
SubsetTriple wreath_triple(const SimultaneousFamily& f, bool verify = true);

/// The k permuted product triples over H wr Sym_n: triple j draws base
/// coordinate i from S_{sigma_j(i)} (and T_{tau_j(i)}, U_{upsilon_j(i)}).
/// Returned unverified; run stpp_check on the result.
SimultaneousFamily permuted_wreath_family(const SimultaneousFamily& f,
                                          const PermutationFamily& perms);

struct PermFamilySearchResult {
  PermutationFamily family;
  /// The induced wreath family, re-verified by stpp_check before return.
  SimultaneousFamily verified_family;
  /// Feasibility checks spent (index-triple evaluations).
  std::uint64_t checks = 0;
  bool exhaustive = true;
};

/// Searches for the largest set of permutation triples whose permuted
/// product triples satisfy the simultaneous property in H wr Sym_n.
/// Exhaustive over all subsets when (n!)^3 <= 12, greedy growth with
/// backtracking above; deterministic, ties broken to the lexicographically
/// smallest family. The result is always re-verified before return.
PermFamilySearchResult search_permutation_family(
    const SimultaneousFamily& f, std::uint64_t budget = 1'000'000);

struct TppSearchOptions {
  bool first_only = false;
  /// Restrict each subset to contain the identity. Sound because the
  /// property is invariant under independent right translation of S, T, U;
  /// every triple is a translate of one found in this mode.
  bool modulo_right_translation = false;
  std::uint64_t node_budget = 50'000'000;
  std::size_t max_results = 100'000;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct TppSearchReport {
  std::vector<SubsetTriple> triples;  // each re-verified by tpp_check
  std::uint64_t nodes = 0;
  bool complete = true;  // false when a budget or result cap cut the tree
};

/// Backtracking search for subset triples of the target sizes satisfying
/// the triple product property: grows S, then T, then U in canonical code
/// order, pruning on incremental quotient-set violations.
TppSearchReport find_tpp_triples(const Group& g,
                                 std::array<std::uint64_t, 3> target,
                                 const TppSearchOptions& options = {});

}  // namespace gtmm
