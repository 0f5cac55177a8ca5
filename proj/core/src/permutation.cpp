#include "gtmm/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "gtmm/errors.hpp"

namespace gtmm::perm {

std::uint64_t factorial(std::uint32_t n) {
  if (n > 20) {
    throw OverflowError("factorial(" + std::to_string(n) +
                        ") exceeds 64 bits");
  }
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Images identity(std::uint32_t n) {
  Images p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

bool is_valid(const Images& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Images compose(const Images& a, const Images& b) {
  if (a.size() != b.size()) {
    throw DomainError("permutation degree mismatch in compose");
  }
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Images inverse(const Images& p) {
  Images r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

std::uint64_t rank(const Images& p) {
  const std::size_t n = p.size();
  std::uint64_t r = 0;
  std::uint64_t radix = factorial(static_cast<std::uint32_t>(n));
  // Lehmer digit i counts later positions with a smaller image.
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t digit = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p[j] < p[i]) ++digit;
    }
    radix /= (n - i);
    r += digit * radix;
  }
  return r;
}

Images unrank(std::uint32_t n, std::uint64_t r) {
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  Images p(n);
  std::uint64_t radix = factorial(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    radix /= (n - i);
    const std::uint64_t digit = r / radix;
    r %= radix;
    p[i] = pool[digit];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return p;
}

}  // namespace gtmm::perm
