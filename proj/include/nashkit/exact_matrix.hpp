#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nashkit/error.hpp"
#include "nashkit/rational.hpp"

namespace nashkit {

class SingularMatrixError : public InputError {
 public:
  using InputError::InputError;
};

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalVector column(std::size_t j) const;
  ExactMatrix transpose() const;
  ExactMatrix leading_block(std::size_t k) const;

  bool is_symmetric() const;
  bool is_integral() const;

  ExactMatrix operator-() const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend RationalVector operator*(const ExactMatrix& a, const RationalVector& v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::string to_string(const ExactMatrix& m);

/// Fraction-free Bareiss elimination; exact.
Rational determinant(const ExactMatrix& m);

/// Minors of the top-left k x k blocks, k = 1..n.
std::vector<Rational> leading_principal_minors(const ExactMatrix& m);

/// Sylvester's criterion: (-1)^k * minor_k > 0 for every k.
/// Throws InputError for non-square or non-symmetric input.
bool is_negative_definite(const ExactMatrix& m);

/// Gauss-Jordan over the rationals. Throws SingularMatrixError.
ExactMatrix inverse_exact(const ExactMatrix& m);

/// Unique solution of m x = rhs. Throws SingularMatrixError.
RationalVector solve_exact(const ExactMatrix& m, const RationalVector& rhs);

/// Basis of { x : m x = 0 }, one vector per free column of the RREF.
std::vector<RationalVector> nullspace(const ExactMatrix& m);

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

struct InverseSignReport {
  bool all_nonpositive = false;
  bool all_negative = false;
  std::vector<MatrixEntry> offending_entries;  // entries > 0
  ExactMatrix inverse;
};

InverseSignReport check_inverse_nonpositive(const ExactMatrix& m);

RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);

}  // namespace nashkit
