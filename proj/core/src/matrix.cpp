#include "gtmm/matrix.hpp"

#include "gtmm/errors.hpp"

namespace gtmm {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw DomainError("matrix dimensions must be positive");
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const Rational& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DomainError("matrix dimension mismatch in addition");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix r(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = s * m.data_[i];
  return r;
}

RationalMatrix naive_product(const RationalMatrix& a,
                             const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("matrix dimension mismatch in product");
  }
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a.at(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.cols(); ++k) {
        c.at(i, k) += aij * b.at(j, k);
      }
    }
  }
  return c;
}

RationalMatrix random_integer_matrix(std::size_t rows, std::size_t cols,
                                     int lo, int hi, std::mt19937_64& rng) {
  if (lo > hi) throw DomainError("empty entry range");
  std::uniform_int_distribution<int> dist(lo, hi);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.at(i, j) = dist(rng);
    }
  }
  return m;
}

}  // namespace gtmm
