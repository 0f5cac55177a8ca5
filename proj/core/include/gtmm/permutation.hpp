#pragma once

#include <cstdint>
#include <vector>

namespace gtmm::perm {

/// A permutation of {0, ..., n-1} stored as its image array: p[i] = image
/// of i. Composition follows (a*b)(i) = a(b(i)), so b is applied first.
using Images = std::vector<std::uint32_t>;

/// n! as a checked 64-bit value; throws OverflowError for n > 20.
std::uint64_t factorial(std::uint32_t n);

Images identity(std::uint32_t n);
bool is_valid(const Images& p);

Images compose(const Images& a, const Images& b);
Images inverse(const Images& p);

/// Lexicographic rank of p among all permutations of its degree, via the
/// Lehmer code. rank(identity) = 0.
std::uint64_t rank(const Images& p);

/// Inverse of rank: the permutation of degree n with the given
/// lexicographic rank.
Images unrank(std::uint32_t n, std::uint64_t r);

}  // namespace gtmm::perm
