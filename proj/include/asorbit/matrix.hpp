#pragma once

#include <cassert>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asorbit/rational.hpp"

namespace asorbit {

// Dense matrix of exact rationals, row-major, 0-based indexing.
class Matrix {
 public:
  Matrix(int rows, int cols);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Rational& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  // Rows 0..k-1, columns 0..l-1. Throws std::out_of_range for invalid k, l.
  Matrix upper_left(int k, int l) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;  // throws on dimension mismatch
  void swap_rows(int a, int b);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_;
  int cols_;
  std::vector<Rational> e_;
};

int rank(Matrix m);          // exact rank by pivoted Gaussian elimination
Rational det(Matrix m);      // throws std::invalid_argument if non-square

// Anti-symmetric matrix: validated m^t == -m (so zero diagonal).
class ASMatrix {
 public:
  explicit ASMatrix(Matrix m);  // throws std::invalid_argument if not anti-symmetric

  int n() const { return m_.rows(); }
  const Matrix& underlying() const { return m_; }

  friend bool operator==(const ASMatrix& a, const ASMatrix& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

// Exact Pfaffian; 0 for odd n, and pfaffian(a)^2 == det(a.underlying()).
Rational pfaffian(const ASMatrix& a);

// Raised by the matrix text parser; line/col are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Text form: first line n, then n rows of n whitespace-separated rationals.
Matrix parse_matrix(std::string_view text);  // throws ParseError
std::string format_matrix(const Matrix& m);  // same form, re-parseable

}  // namespace asorbit
