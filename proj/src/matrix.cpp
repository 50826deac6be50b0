#include "asorbit/matrix.hpp"

#include <sstream>
#include <utility>

namespace asorbit {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
  e_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::upper_left(int k, int l) const {
  if (k < 1 || k > rows_ || l < 1 || l > cols_)
    throw std::out_of_range("upper-left block out of range");
  Matrix m(k, l);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j) m(i, j) = (*this)(i, j);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
    }
  return m;
}

void Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

int rank(Matrix m) {
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    m.swap_rows(r, pivot);
    const Rational pv = m(r, c);
    for (int i = r + 1; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) / pv;
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

Rational det(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  Rational result(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      m.swap_rows(c, pivot);
      result = -result;
    }
    const Rational pv = m(c, c);
    result *= pv;
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) / pv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return result;
}

ASMatrix::ASMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("anti-symmetric matrix must be square");
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = i; j < m_.cols(); ++j)
      if (m_(i, j) != -m_(j, i))
        throw std::invalid_argument("matrix is not anti-symmetric at (" + std::to_string(i + 1) +
                                    "," + std::to_string(j + 1) + ")");
}

Rational pfaffian(const ASMatrix& a) {
  const int n = a.n();
  if (n % 2 != 0) return Rational(0);
  Matrix m = a.underlying();
  Rational result(1);
  for (int k = 0; k + 1 < n; k += 2) {
    int pivot = -1;
    for (int j = k + 1; j < n; ++j)
      if (!m(k, j).is_zero()) {
        pivot = j;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != k + 1) {
      // congruence by a transposition flips the sign
      m.swap_rows(k + 1, pivot);
      for (int i = 0; i < n; ++i) std::swap(m(i, k + 1), m(i, pivot));
      result = -result;
    }
    const Rational v = m(k, k + 1);
    result *= v;
    // isolate the 2x2 block at (k, k+1) by congruence updates (Pfaffian-preserving)
    for (int j = k + 2; j < n; ++j) {
      if (!m(k, j).is_zero()) {
        const Rational f = m(k, j) / v;
        for (int i = 0; i < n; ++i) m(i, j) -= f * m(i, k + 1);
        for (int i = 0; i < n; ++i) m(j, i) -= f * m(k + 1, i);
      }
      if (!m(k + 1, j).is_zero()) {
        const Rational f = m(k + 1, j) / (-v);
        for (int i = 0; i < n; ++i) m(i, j) -= f * m(i, k);
        for (int i = 0; i < n; ++i) m(j, i) -= f * m(k, i);
      }
    }
  }
  return result;
}

ParseError::ParseError(int line, int col, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
      line_(line),
      col_(col) {}

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1, col = 1;
  std::string cur;
  int tok_line = 1, tok_col = 1;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back({cur, tok_line, tok_col});
      cur.clear();
    }
  };
  for (char ch : text) {
    if (ch == '\n') {
      flush();
      ++line;
      col = 1;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      flush();
      ++col;
      continue;
    }
    if (cur.empty()) {
      tok_line = line;
      tok_col = col;
    }
    cur.push_back(ch);
    ++col;
  }
  flush();
  return tokens;
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) throw ParseError(1, 1, "empty input, expected matrix size");
  const Token& head = tokens[0];
  long n = 0;
  try {
    std::size_t used = 0;
    n = std::stol(head.text, &used);
    if (used != head.text.size()) n = 0;
  } catch (const std::exception&) {
    n = 0;
  }
  if (n < 1 || n > 4096)
    throw ParseError(head.line, head.col, "invalid matrix size '" + head.text + "'");
  const std::size_t expected = 1 + static_cast<std::size_t>(n) * n;
  if (tokens.size() < expected) {
    const Token& last = tokens.back();
    throw ParseError(last.line, last.col + static_cast<int>(last.text.size()),
                     "expected " + std::to_string(n * n) + " entries, found " +
                         std::to_string(tokens.size() - 1));
  }
  if (tokens.size() > expected) {
    const Token& extra = tokens[expected];
    throw ParseError(extra.line, extra.col, "unexpected trailing content '" + extra.text + "'");
  }
  Matrix m(static_cast<int>(n), static_cast<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Token& t = tokens[1 + static_cast<std::size_t>(i) * n + j];
      try {
        m(i, j) = Rational::parse(t.text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(t.line, t.col, e.what());
      }
    }
  return m;
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ' ';
      os << m(i, j);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace asorbit
