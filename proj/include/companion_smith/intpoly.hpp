#pragma once

// Dense univariate polynomials over the integers.

#include "companion_smith/bareiss.hpp"
#include "companion_smith/errors.hpp"
#include "companion_smith/integer.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace companion_smith {

/// Element of Z[t]. Index i of the coefficient vector holds the coefficient
/// of t^i; the top stored coefficient is never zero, so the zero polynomial
/// has no coefficients at all.
class IntPolynomial {
 public:
  /// Degree of the zero polynomial; compares below every real degree.
  static constexpr int kZeroDegree = INT_MIN;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  IntPolynomial(std::initializer_list<long> coeffs)
      : coeffs_(coeffs.begin(), coeffs.end()) {
    trim();
  }

  static IntPolynomial constant(const Integer& c) { return IntPolynomial({c}); }
  static IntPolynomial monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPolynomial(std::move(v));
  }
  // t^k - 1
  static IntPolynomial power_minus_one(std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = 1;
    v[0] -= 1;
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  const Integer& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  /// Coefficient of t^i; zero beyond the stored range.
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<Integer> v(a.coeffs_);
    for (auto& c : v) c = -c;
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p) {
    std::vector<Integer> v(p.coeffs_);
    for (auto& x : v) x *= c;
    return IntPolynomial(std::move(v));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
inline IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

inline IntPolynomial pow(const IntPolynomial& p, unsigned long e) {
  IntPolynomial result{1};
  IntPolynomial base = p;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

inline void require_monic(const IntPolynomial& g) {
  if (g.is_zero()) throw DivisionByZeroPolynomial();
  if (!g.is_monic()) throw NonMonicDivisor();
}

/// Division by a monic polynomial; quotient and remainder stay integral.
inline PolyDivision divmod_monic(const IntPolynomial& p, const IntPolynomial& g) {
  require_monic(g);
  const int n = g.degree();
  if (p.degree() < n) return {IntPolynomial{}, p};
  std::vector<Integer> r(p.coeffs());
  std::vector<Integer> q(r.size() - static_cast<std::size_t>(n));
  const auto& gc = g.coeffs();
  for (std::size_t k = r.size(); k-- > static_cast<std::size_t>(n);) {
    const Integer lead = r[k];
    if (lead == 0) continue;
    const std::size_t shift = k - static_cast<std::size_t>(n);
    q[shift] = lead;
    for (std::size_t i = 0; i < gc.size(); ++i) r[shift + i] -= lead * gc[i];
  }
  r.resize(static_cast<std::size_t>(n));
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

inline IntPolynomial mod_monic(const IntPolynomial& p, const IntPolynomial& g) {
  return divmod_monic(p, g).remainder;
}

/// Quotient p / g for monic g; throws std::logic_error if g does not divide p.
inline IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& g) {
  auto [q, r] = divmod_monic(p, g);
  if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
  return q;
}

/// Non-negative gcd of the coefficients; content(0) = 0.
inline Integer content(const IntPolynomial& p) {
  Integer c = 0;
  for (const auto& x : p.coeffs()) {
    c = gcd(c, x);
    if (c == 1) break;
  }
  return c;
}

inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const Integer c = content(p);
  std::vector<Integer> v(p.coeffs());
  for (auto& x : v) x = exact_div(x, c);
  return IntPolynomial(std::move(v));
}

inline IntPolynomial compose_power(const IntPolynomial& p, std::size_t k) {
  if (k == 0) throw OutOfRange("compose_power: exponent must be positive");
  if (p.is_zero()) return p;
  std::vector<Integer> v((p.coeffs().size() - 1) * k + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i * k] = p.coeffs()[i];
  return IntPolynomial(std::move(v));
}

namespace detail {

// lc(b)^(deg a - deg b + 1) * a mod b, for b nonzero with deg a >= deg b.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  const int db = b.degree();
  int remaining = a.degree() - db + 1;
  const Integer lb = b.leading();
  std::vector<Integer> r(a.coeffs());
  const auto& bc = b.coeffs();
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const std::size_t top = r.size() - 1;
    const Integer lead = r[top];
    const std::size_t shift = top - static_cast<std::size_t>(db);
    for (auto& x : r) x *= lb;
    for (std::size_t i = 0; i < bc.size(); ++i) r[shift + i] -= lead * bc[i];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    --remaining;
  }
  if (remaining > 0) {
    const Integer scale = pow(lb, static_cast<unsigned long>(remaining));
    for (auto& x : r) x *= scale;
  }
  return IntPolynomial(std::move(r));
}

inline IntPolynomial divide_coefficients(const IntPolynomial& p, const Integer& d) {
  std::vector<Integer> v(p.coeffs());
  for (auto& x : v) x = exact_div(x, d);
  return IntPolynomial(std::move(v));
}

}  // namespace detail

/// Monic gcd of an arbitrary f and a monic g in Z[t]. The gcd divides the
/// monic g, so by Gauss's lemma its primitive representative has unit
/// leading coefficient.
inline IntPolynomial gcd_with_monic(const IntPolynomial& f, const IntPolynomial& g) {
  require_monic(g);
  IntPolynomial b = mod_monic(f, g);
  if (b.is_zero()) return g;
  if (b.degree() == 0) return IntPolynomial{1};

  // Subresultant pseudo-remainder sequence.
  IntPolynomial a = g;
  b = primitive_part(b);
  Integer scale_g = 1;
  Integer scale_h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    IntPolynomial r = detail::pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return IntPolynomial{1};
    a = std::move(b);
    b = detail::divide_coefficients(
        r, scale_g * pow(scale_h, static_cast<unsigned long>(delta)));
    scale_g = a.leading();
    if (delta == 0) continue;
    scale_h = exact_div(pow(scale_g, static_cast<unsigned long>(delta)),
                        pow(scale_h, static_cast<unsigned long>(delta - 1)));
  }
  IntPolynomial z = primitive_part(b);
  if (z.leading() == -1) z = -z;
  if (!z.is_monic()) throw std::logic_error("gcd with a monic polynomial is not monic");
  return z;
}

/// prod over roots theta of g of f(theta), computed as the Sylvester
/// determinant Res(g, f). Exact because g is monic.
inline Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
  require_monic(g);
  if (g.degree() < 1) throw OutOfRange("resultant: deg g must be at least 1");
  const IntPolynomial h = mod_monic(f, g);
  if (h.is_zero()) return 0;
  const auto n = static_cast<std::size_t>(g.degree());
  const auto k = static_cast<std::size_t>(h.degree());
  const std::size_t size = n + k;
  std::vector<Integer> syl(size * size);
  for (std::size_t row = 0; row < k; ++row)
    for (std::size_t i = 0; i <= n; ++i) syl[row * size + row + i] = g.coeff(n - i);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i <= k; ++i) syl[(k + row) * size + row + i] = h.coeff(k - i);
  return detail::bareiss_determinant(std::move(syl), size);
}

/// The n-th cyclotomic polynomial, memoized across calls.
inline IntPolynomial cyclotomic(std::size_t n) {
  if (n == 0) throw OutOfRange("cyclotomic: index must be positive");
  static std::mutex mutex;
  static std::map<std::size_t, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPolynomial result = IntPolynomial::power_minus_one(n);
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0) result = exact_quotient(result, cyclotomic(d));
  std::lock_guard lock(mutex);
  cache.emplace(n, result);
  return result;
}

/// Euler's totient, by trial division.
inline std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// ---------------------------------------------------------------------------
// Text format: descending human form "3t^2 - t + 1", or a low-to-high
// comma-separated coefficient list "1,-1,3".

inline std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const Integer& c = p.coeffs()[k];
    if (c == 0) continue;
    if (out.empty())
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    const Integer mag = abs_value(c);
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

namespace detail {

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view text) : text_(text) {}

  IntPolynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    if (text_.find('t') == std::string_view::npos &&
        text_.find(',') != std::string_view::npos)
      return parse_list();
    return parse_terms();
  }

 private:
  IntPolynomial parse_list() {
    std::vector<Integer> coeffs;
    for (;;) {
      skip_space();
      coeffs.push_back(parse_signed_integer());
      skip_space();
      if (at_end()) break;
      expect(',');
    }
    return IntPolynomial(std::move(coeffs));
  }

  IntPolynomial parse_terms() {
    std::vector<Integer> coeffs;
    bool first = true;
    for (;;) {
      skip_space();
      if (at_end()) {
        if (first) fail("empty polynomial");
        break;
      }
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      Integer c = 1;
      bool have_coeff = false;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        c = parse_digits();
        have_coeff = true;
        skip_space();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_space();
          if (at_end() || peek() != 't') fail("expected 't' after '*'");
        }
      }
      std::size_t exponent = 0;
      if (!at_end() && peek() == 't') {
        ++pos_;
        exponent = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected exponent");
          exponent = parse_digits().get_ui();
        }
      } else if (!have_coeff) {
        fail("expected a term");
      }
      if (negative) c = -c;
      if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
      coeffs[exponent] += c;
    }
    return IntPolynomial(std::move(coeffs));
  }

  Integer parse_signed_integer() {
    bool negative = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negative = peek() == '-';
      ++pos_;
      skip_space();
    }
    Integer v = parse_digits();
    return negative ? Integer(-v) : v;
  }

  Integer parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 1, pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline IntPolynomial parse_polynomial(std::string_view text) {
  return detail::PolyScanner(text).parse();
}

}  // namespace companion_smith
