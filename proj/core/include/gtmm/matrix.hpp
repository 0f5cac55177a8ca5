#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gtmm/rational.hpp"

namespace gtmm {

/// Dense matrix of exact rationals, row major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  RationalMatrix& operator+=(const RationalMatrix& other);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
    a += b;
    return a;
  }
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Schoolbook product, the reference every realization is checked against.
RationalMatrix naive_product(const RationalMatrix& a, const RationalMatrix& b);

/// Integer-entry matrix with entries uniform in [lo, hi], drawn from rng.
RationalMatrix random_integer_matrix(std::size_t rows, std::size_t cols,
                                     int lo, int hi, std::mt19937_64& rng);

}  // namespace gtmm
