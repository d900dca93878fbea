#pragma once

// Dense integer matrices, companion matrices and the companion ring.

#include "companion_smith/bareiss.hpp"
#include "companion_smith/errors.hpp"
#include "companion_smith/integer.hpp"
#include "companion_smith/intpoly.hpp"

#include <cstddef>
#include <initializer_list>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace companion_smith {

/// Dense row-major matrix over Z. Empty shapes (0 x n, 0 x 0) are valid.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw OutOfRange("IntMatrix: ragged initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix diagonal(std::span<const Integer> values) {
    IntMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Integer>& entries() const { return entries_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& x : entries_)
      if (x != 0) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Copy of the rows [r0, r0 + nr) and columns [c0, c0 + nc).
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw OutOfRange("shape mismatch in +");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
    return c;
  }

  friend IntMatrix operator*(const Integer& s, const IntMatrix& a) {
    IntMatrix c = a;
    for (auto& x : c.entries_) x *= s;
    return c;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw OutOfRange("shape mismatch in *");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

inline IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

/// Flip matrix: ones on the antidiagonal.
inline IntMatrix flip(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

namespace detail {

// Companion layout for any monic g, including deg g = 0 (the 0 x 0 matrix).
inline IntMatrix companion_any_degree(const IntPolynomial& g) {
  require_monic(g);
  const auto n = static_cast<std::size_t>(g.degree());
  IntMatrix c(n, n);
  for (std::size_t j = 0; j < n; ++j) c(0, j) = -g.coeff(n - 1 - j);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  return c;
}

// f(C_g) for monic g of any degree >= 0, via the row-shift recurrence:
// row n-1-j holds the coefficients of [t^j f] from t^(n-1) down to t^0.
inline IntMatrix poly_of_companion_any_degree(const IntPolynomial& f, const IntPolynomial& g) {
  require_monic(g);
  const auto n = static_cast<std::size_t>(g.degree());
  IntMatrix m(n, n);
  if (n == 0) return m;
  std::vector<Integer> cur(n);
  const IntPolynomial h = mod_monic(f, g);
  for (std::size_t k = 0; k < h.coeffs().size(); ++k) cur[k] = h.coeffs()[k];
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t row = n - 1 - j;
    for (std::size_t c = 0; c < n; ++c) m(row, c) = cur[n - 1 - c];
    if (j + 1 == n) break;
    // cur <- t * cur mod g
    const Integer top = cur[n - 1];
    for (std::size_t k = n - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t k = 0; k < n; ++k) cur[k] -= top * g.coeff(k);
  }
  return m;
}

inline void require_positive_degree(const IntPolynomial& g) {
  require_monic(g);
  if (g.degree() < 1) throw OutOfRange("modulus must have degree at least 1");
}

}  // namespace detail

/// Companion matrix: first row (-g_{n-1}, ..., -g_0), ones on the subdiagonal.
inline IntMatrix companion(const IntPolynomial& g) {
  detail::require_positive_degree(g);
  return detail::companion_any_degree(g);
}

/// f(C_g) in O(n^2) coefficient operations, without matrix powers.
inline IntMatrix poly_of_companion(const IntPolynomial& f, const IntPolynomial& g) {
  detail::require_positive_degree(g);
  return detail::poly_of_companion_any_degree(f, g);
}

namespace detail {

inline IntPolynomial row_polynomial(std::span<const Integer> row) {
  if (row.empty()) throw OutOfRange("structured matrix needs at least one entry");
  return IntPolynomial(std::vector<Integer>(row.begin(), row.end()));
}

inline IntPolynomial power_plus_c(std::size_t n, long c) {
  return IntPolynomial::monomial(1, n) + IntPolynomial::constant(c);
}

}  // namespace detail

/// a_0 + a_1 t + ... evaluated at C_{t^n - 1}. The sequence lands in the
/// first column and each column is the downward cyclic shift of the one
/// before it, so this is the transpose of the circulant whose first row is
/// the sequence. Both have the same Smith form.
inline IntMatrix circulant(std::span<const Integer> coefficients) {
  const IntPolynomial f = detail::row_polynomial(coefficients);
  return poly_of_companion(f, detail::power_plus_c(coefficients.size(), -1));
}

/// As circulant, with wrapped entries negated (modulus t^n + 1).
inline IntMatrix skew_circulant(std::span<const Integer> coefficients) {
  const IntPolynomial f = detail::row_polynomial(coefficients);
  return poly_of_companion(f, detail::power_plus_c(coefficients.size(), 1));
}

/// Lower triangular Toeplitz matrix with the given first column.
inline IntMatrix lower_toeplitz(std::span<const Integer> first_col) {
  const IntPolynomial f = detail::row_polynomial(first_col);
  return poly_of_companion(f, IntPolynomial::monomial(1, first_col.size()));
}

inline Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw NotSquare();
  return detail::bareiss_determinant(m.entries(), m.rows());
}

inline bool is_unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

/// Rank over Q by fraction-free elimination.
inline std::size_t rank(const IntMatrix& m) {
  return detail::bareiss_rank(m.entries(), m.rows(), m.cols());
}

/// Canonical representative of [f] in Z[t]/<g>; arithmetic stays reduced.
class CompanionRingElement {
 public:
  CompanionRingElement(const IntPolynomial& f, IntPolynomial modulus)
      : modulus_(std::move(modulus)) {
    detail::require_positive_degree(modulus_);
    representative_ = mod_monic(f, modulus_);
  }

  const IntPolynomial& modulus() const { return modulus_; }
  const IntPolynomial& representative() const { return representative_; }

  /// The matrix f(C_g) this class maps to.
  IntMatrix matrix() const { return poly_of_companion(representative_, modulus_); }

  friend bool operator==(const CompanionRingElement& a, const CompanionRingElement& b) {
    return a.modulus_ == b.modulus_ && a.representative_ == b.representative_;
  }
  friend CompanionRingElement operator+(const CompanionRingElement& a,
                                        const CompanionRingElement& b) {
    a.check_same_ring(b);
    return {a.representative_ + b.representative_, a.modulus_};
  }
  friend CompanionRingElement operator*(const CompanionRingElement& a,
                                        const CompanionRingElement& b) {
    a.check_same_ring(b);
    return {a.representative_ * b.representative_, a.modulus_};
  }

 private:
  void check_same_ring(const CompanionRingElement& other) const {
    if (!(modulus_ == other.modulus_)) throw OutOfRange("elements of different companion rings");
  }

  IntPolynomial modulus_;
  IntPolynomial representative_;
};

// ---------------------------------------------------------------------------
// Text format: "rows cols" on the first line, then one line per row.

inline std::string to_text(const IntMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

namespace detail {

class MatrixReader {
 public:
  explicit MatrixReader(std::string_view text) : text_(text) {}

  IntMatrix read() {
    const std::size_t rows = read_count();
    const std::size_t cols = read_count();
    end_line();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      skip_blank_lines();
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = read_integer();
      end_line();
    }
    skip_blank_lines();
    if (pos_ < text_.size()) fail("unexpected trailing content");
    return m;
  }

 private:
  std::size_t read_count() {
    const Integer v = read_integer();
    if (v < 0 || !v.fits_ulong_p()) fail("dimension must be a non-negative integer", token_column_);
    return v.get_ui();
  }

  Integer read_integer() {
    skip_inline_space();
    token_column_ = column();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') fail("expected an integer, found end of line");
      fail("expected an integer");
    }
    std::string token(text_.substr(start, pos_ - start));
    if (token[0] == '+') token.erase(0, 1);
    if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
      fail("unexpected character");
    return Integer(token);
  }

  void end_line() {
    skip_inline_space();
    if (pos_ >= text_.size()) return;
    if (text_[pos_] != '\n') fail("too many entries on line");
    ++pos_;
    ++line_;
    line_start_ = pos_;
  }

  void skip_blank_lines() {
    for (;;) {
      std::size_t p = pos_;
      while (p < text_.size() && (text_[p] == ' ' || text_[p] == '\t' || text_[p] == '\r')) ++p;
      if (p < text_.size() && text_[p] == '\n') {
        pos_ = p + 1;
        ++line_;
        line_start_ = pos_;
        continue;
      }
      return;
    }
  }

  void skip_inline_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
  }

  std::size_t column() const { return pos_ - line_start_ + 1; }
  [[noreturn]] void fail(const std::string& message) const { fail(message, column()); }
  [[noreturn]] void fail(const std::string& message, std::size_t col) const {
    throw ParseError(message, line_, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  std::size_t token_column_ = 1;
};

}  // namespace detail

inline IntMatrix parse_matrix(std::string_view text) {
  return detail::MatrixReader(text).read();
}

inline IntMatrix read_matrix(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

}  // namespace companion_smith
