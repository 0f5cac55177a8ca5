#include "gtmm/bilinear.hpp"

#include <mutex>
#include <random>

#include "gtmm/errors.hpp"

namespace gtmm {

std::uint64_t MatMulTensor::size() const {
  if (m == 0 || p == 0 || q == 0) {
    throw DomainError("tensor components must be positive");
  }
  std::uint64_t mp = 0, mpq = 0;
  if (__builtin_mul_overflow(m, p, &mp) ||
      __builtin_mul_overflow(mp, q, &mpq)) {
    throw OverflowError("tensor size m*p*q overflows 64 bits");
  }
  return mpq;
}

BilinearComputation::BilinearComputation(MatMulTensor shape,
                                         std::vector<BilinearTerm> terms)
    : shape_(shape), terms_(std::move(terms)) {
  (void)shape_.size();
  if (terms_.empty()) {
    throw DomainError("a bilinear computation needs at least one term");
  }
  for (const BilinearTerm& t : terms_) {
    if (t.f.rows() != shape_.m || t.f.cols() != shape_.p ||
        t.g.rows() != shape_.p || t.g.cols() != shape_.q ||
        t.w.rows() != shape_.m || t.w.cols() != shape_.q) {
      throw DomainError("bilinear term dimensioned off the tensor shape");
    }
  }
}

RationalMatrix evaluate_bilinear(const BilinearComputation& comp,
                                 const RationalMatrix& a,
                                 const RationalMatrix& b, OpCount* ops) {
  const MatMulTensor& s = comp.shape();
  if (a.rows() != s.m || a.cols() != s.p || b.rows() != s.p ||
      b.cols() != s.q) {
    throw DomainError("matrices do not match the computation shape");
  }
  RationalMatrix out(s.m, s.q);
  for (const BilinearTerm& term : comp.terms()) {
    Rational fv = 0, gv = 0;
    for (std::size_t i = 0; i < s.m; ++i) {
      for (std::size_t j = 0; j < s.p; ++j) {
        if (term.f.at(i, j) != 0) fv += term.f.at(i, j) * a.at(i, j);
      }
    }
    for (std::size_t i = 0; i < s.p; ++i) {
      for (std::size_t j = 0; j < s.q; ++j) {
        if (term.g.at(i, j) != 0) gv += term.g.at(i, j) * b.at(i, j);
      }
    }
    const Rational prod = fv * gv;  // the one counted multiplication
    if (ops != nullptr) ++ops->scalar_mults;
    if (prod == 0) continue;
    for (std::size_t i = 0; i < s.m; ++i) {
      for (std::size_t j = 0; j < s.q; ++j) {
        if (term.w.at(i, j) != 0) out.at(i, j) += prod * term.w.at(i, j);
      }
    }
  }
  return out;
}

namespace {

RationalMatrix coeffs(std::size_t rows, std::size_t cols,
                      std::initializer_list<int> values) {
  RationalMatrix m(rows, cols);
  std::size_t idx = 0;
  for (int v : values) {
    m.at(idx / cols, idx % cols) = v;
    ++idx;
  }
  return m;
}

BilinearComputation build_strassen() {
  const MatMulTensor shape{2, 2, 2};
  std::vector<BilinearTerm> terms;
  // (a11 + a22)(b11 + b22) -> c11, c22
  terms.push_back({coeffs(2, 2, {1, 0, 0, 1}), coeffs(2, 2, {1, 0, 0, 1}),
                   coeffs(2, 2, {1, 0, 0, 1})});
  // (a21 + a22) b11 -> c21, -c22
  terms.push_back({coeffs(2, 2, {0, 0, 1, 1}), coeffs(2, 2, {1, 0, 0, 0}),
                   coeffs(2, 2, {0, 0, 1, -1})});
  // a11 (b12 - b22) -> c12, c22
  terms.push_back({coeffs(2, 2, {1, 0, 0, 0}), coeffs(2, 2, {0, 1, 0, -1}),
                   coeffs(2, 2, {0, 1, 0, 1})});
  // a22 (b21 - b11) -> c11, c21
  terms.push_back({coeffs(2, 2, {0, 0, 0, 1}), coeffs(2, 2, {-1, 0, 1, 0}),
                   coeffs(2, 2, {1, 0, 1, 0})});
  // (a11 + a12) b22 -> -c11, c12
  terms.push_back({coeffs(2, 2, {1, 1, 0, 0}), coeffs(2, 2, {0, 0, 0, 1}),
                   coeffs(2, 2, {-1, 1, 0, 0})});
  // (a21 - a11)(b11 + b12) -> c22
  terms.push_back({coeffs(2, 2, {-1, 0, 1, 0}), coeffs(2, 2, {1, 1, 0, 0}),
                   coeffs(2, 2, {0, 0, 0, 1})});
  // (a12 - a22)(b21 + b22) -> c11
  terms.push_back({coeffs(2, 2, {0, 1, 0, -1}), coeffs(2, 2, {0, 0, 1, 1}),
                   coeffs(2, 2, {1, 0, 0, 0})});
  return BilinearComputation(shape, std::move(terms));
}

}  // namespace

const BilinearComputation& strassen_222() {
  static const BilinearComputation comp = [] {
    BilinearComputation c = build_strassen();
    if (c.length() != 7 || !verify_computation(c, 64, 0x5eed)) {
      throw Error("embedded seven-product scheme failed verification");
    }
    return c;
  }();
  return comp;
}

BilinearComputation naive_computation(const MatMulTensor& shape) {
  std::vector<BilinearTerm> terms;
  terms.reserve(shape.size());
  for (std::size_t i = 0; i < shape.m; ++i) {
    for (std::size_t j = 0; j < shape.p; ++j) {
      for (std::size_t k = 0; k < shape.q; ++k) {
        BilinearTerm t{RationalMatrix(shape.m, shape.p),
                       RationalMatrix(shape.p, shape.q),
                       RationalMatrix(shape.m, shape.q)};
        t.f.at(i, j) = 1;
        t.g.at(j, k) = 1;
        t.w.at(i, k) = 1;
        terms.push_back(std::move(t));
      }
    }
  }
  return BilinearComputation(shape, std::move(terms));
}

bool verify_computation(const BilinearComputation& comp, std::uint32_t trials,
                        std::uint64_t seed) {
  if (trials == 0) throw DomainError("verification needs at least one trial");
  const MatMulTensor& s = comp.shape();
  std::mt19937_64 rng(seed);
  for (std::uint32_t t = 0; t < trials; ++t) {
    const RationalMatrix a = random_integer_matrix(s.m, s.p, -9, 9, rng);
    const RationalMatrix b = random_integer_matrix(s.p, s.q, -9, 9, rng);
    if (!(evaluate_bilinear(comp, a, b) == naive_product(a, b))) return false;
  }
  return true;
}

BigInt rank_power_bound(std::uint64_t r, std::uint64_t n, std::uint32_t k) {
  if (r < 1) throw DomainError("rank bound must be at least 1");
  if (n < 2) throw DomainError("side length must be at least 2");
  if (k < 1) throw DomainError("power must be at least 1");
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(r), k);
  return out;
}

}  // namespace gtmm
