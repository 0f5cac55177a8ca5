#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gtmm/bilinear.hpp"
#include "gtmm/group.hpp"

namespace gtmm {

/// One evaluated exponent bound, with enough provenance to reproduce it.
/// Values above 3 are reported as vacuous (omega <= 3 holds
/// unconditionally) rather than clamped.
struct BoundReport {
  std::string formula;
  std::vector<std::pair<std::string, std::string>> parameters;
  double omega_bound = 0.0;
  std::optional<double> residual;
  bool vacuous = false;
  bool hypothetical_k = false;
  std::string notes;
};

/// omega <= 3 log r / log(m p q), from a proven bound R(<m,p,q>) <= r.
/// Natural logs; the ratio is base invariant. The unit tensor gives no
/// information and is rejected.
double exponent_from_rank(const MatMulTensor& shape, std::uint64_t r);

/// The capacity sum of representation-dimension powers collapses to |G| for
/// Abelian groups, the only case this library evaluates directly;
/// non-Abelian groups are refused.
std::uint64_t abelian_capacity(const Group& g);

struct PseudoExponentResult {
  double omega = 0.0;
  double residual = 0.0;  // |sum sizes^(omega/3) - capacity|
};

/// Solves sum_i sizes[i]^(w/3) = capacity for w by bisection on the
/// monotone left side; bracket [0, 256], absolute tolerance 1e-12.
PseudoExponentResult pseudo_exponent(std::span<const double> sizes,
                                     double capacity);

/// omega <= (log order - log count) / log side, for `count` identical
/// square tensors <side, side, side> packed into an Abelian group of the
/// given order.
double square_family_bound(double order, double count, double side);

struct TensorSize {
  double m = 1, p = 1, q = 1;
};

/// omega <= (n log|H| - log n!) / log cbrt(prod m_i p_i q_i) for an Abelian
/// base group of order h_order whose n simultaneous tensors lift to the
/// wreath product with Sym_n on top.
double wreath_bound(double h_order, std::uint64_t degree,
                    std::span<const TensorSize> sizes);

/// Same bound with `copies` identical tensors, avoiding materializing a
/// huge size list.
double wreath_bound_uniform(double h_order, std::uint64_t degree,
                            const TensorSize& size, std::uint64_t copies);

/// omega <= (n log|H| - log n! - log k) / log cbrt(prod m_i p_i q_i) when k
/// permuted product triples hold simultaneously in the wreath product.
/// Equals wreath_bound exactly at k = 1.
double wreath_family_bound(double h_order, std::uint64_t degree, double k,
                           std::span<const TensorSize> sizes);

double wreath_family_bound_uniform(double h_order, std::uint64_t degree,
                                   double k, const TensorSize& size,
                                   std::uint64_t copies);

/// log(n!) with natural logs: exact compensated summation up to n = 10^6,
/// Stirling series above, continuous at the cutover to 10+ significant
/// digits.
double log_factorial(std::uint64_t n);

/// The three closed-form bound expressions scanned over n:
///   pair:        (3 ln n - ln 2) / ln(n-1)
///   wreath_pair: (6 ln n - ln 2) / (2 ln(n-1))
///   tower:       (3n ln n - n ln 2 + 1) / (n ln(n-1))
/// All use natural logs; `tower` contains a base-dependent "+1" and is
/// pinned to natural logs.
enum class ScanFormula { pair, wreath_pair, tower };

/// Value at one n; +infinity at n = 2 where log(n-1) vanishes.
double scan_formula_value(ScanFormula formula, std::uint64_t n);

struct ScanResult {
  std::uint64_t argmin = 0;
  double value = 0.0;
};

/// Exhaustive scan over [lo, hi], ties broken to the smallest n.
ScanResult scan_minimum(ScanFormula formula, std::uint64_t lo,
                        std::uint64_t hi);

// Report builders used by the CLI and tests; each evaluates the formula
// above and fills in flags.
BoundReport report_exponent_from_rank(const MatMulTensor& shape,
                                      std::uint64_t r);
BoundReport report_square_family(double order, double count, double side);
BoundReport report_wreath_uniform(double h_order, std::uint64_t degree,
                                  const TensorSize& size,
                                  std::uint64_t copies);
BoundReport report_wreath_family_uniform(double h_order, std::uint64_t degree,
                                         double k, const TensorSize& size,
                                         std::uint64_t copies);
BoundReport report_pseudo_exponent(std::span<const double> sizes,
                                   double capacity);

}  // namespace gtmm
