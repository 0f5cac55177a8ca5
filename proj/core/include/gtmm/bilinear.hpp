#pragma once

#include <cstdint>
#include <vector>

#include "gtmm/algebra.hpp"
#include "gtmm/matrix.hpp"

namespace gtmm {

/// The bilinear map of m x p by p x q matrix multiplication, identified by
/// its three components.
struct MatMulTensor {
  std::uint64_t m = 1, p = 1, q = 1;

  std::uint64_t size() const;  // m*p*q, checked

  friend bool operator==(const MatMulTensor&, const MatMulTensor&) = default;
};

/// One product of a bilinear computation: the functional coefficients f
/// (over the left matrix) and g (over the right matrix), and the output
/// contribution w.
struct BilinearTerm {
  RationalMatrix f;  // m x p
  RationalMatrix g;  // p x q
  RationalMatrix w;  // m x q
};

/// A length-r bilinear computation: AB = sum_i f_i(A) * g_i(B) * w_i, using
/// exactly r scalar multiplications of functional values.
class BilinearComputation {
 public:
  BilinearComputation(MatMulTensor shape, std::vector<BilinearTerm> terms);

  const MatMulTensor& shape() const { return shape_; }
  std::size_t length() const { return terms_.size(); }
  const std::vector<BilinearTerm>& terms() const { return terms_; }

 private:
  MatMulTensor shape_;
  std::vector<BilinearTerm> terms_;
};

/// Evaluates the computation on exact matrices. Counts exactly length()
/// scalar multiplications of functional values in ops (coefficient
/// scalings are linear-stage work and are not counted).
RationalMatrix evaluate_bilinear(const BilinearComputation& comp,
                                 const RationalMatrix& a,
                                 const RationalMatrix& b,
                                 OpCount* ops = nullptr);

/// The classical seven-product scheme for 2x2 by 2x2 multiplication.
/// Built once and re-verified against the naive product on first use.
const BilinearComputation& strassen_222();

/// The schoolbook computation of length m*p*q, the universal fallback.
BilinearComputation naive_computation(const MatMulTensor& shape);

/// Compares evaluate_bilinear with naive_product on `trials` random
/// integer matrix pairs (entries in [-9, 9]); deterministic under seed.
bool verify_computation(const BilinearComputation& comp, std::uint32_t trials,
                        std::uint64_t seed);

/// Given a proven bound R(<n,n,n>) <= r, returns r^k, the implied bound for
/// <n^k, n^k, n^k>, exactly.
BigInt rank_power_bound(std::uint64_t r, std::uint64_t n, std::uint32_t k);

}  // namespace gtmm
