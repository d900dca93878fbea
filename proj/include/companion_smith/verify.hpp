#pragma once

// Seeded verification sweeps: each closed form or reduction against the
// general Smith engine or the minor oracle.

#include "companion_smith/errors.hpp"
#include "companion_smith/exactmat.hpp"
#include "companion_smith/integer.hpp"
#include "companion_smith/intpoly.hpp"
#include "companion_smith/smith.hpp"
#include "companion_smith/structured.hpp"
#include "companion_smith/topology.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace companion_smith::verify {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few, in input order

  std::size_t total() const { return passed + failed; }
  bool ok() const { return failed == 0; }
};

struct SweepConfig {
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t minor_cap = kDefaultMinorCap;
  // Suite-specific scale; 0 selects the suite default.
  std::size_t max = 0;
};

inline constexpr std::size_t kMaxReportedFailures = 10;

/// Runs check(item) for every item, fanning out over `jobs` threads.
/// Results are merged in input order, so reports do not depend on `jobs`.
template <class Item, class Check>
SuiteResult run_items(std::string name, const std::vector<Item>& items, Check check,
                      std::size_t jobs) {
  std::vector<std::optional<std::string>> outcome(items.size());
  auto evaluate = [&](std::size_t i) {
    try {
      outcome[i] = check(items[i]);
    } catch (const std::exception& e) {
      outcome[i] = std::string("exception: ") + e.what();
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, items.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++) evaluate(i);
      });
    for (auto& t : workers) t.join();
  }
  SuiteResult result;
  result.name = std::move(name);
  for (auto& o : outcome) {
    if (!o) {
      ++result.passed;
      continue;
    }
    ++result.failed;
    if (result.failures.size() < kMaxReportedFailures) result.failures.push_back(std::move(*o));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Deterministic generators.

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi]; modulo reduction keeps the stream platform independent.
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  IntPolynomial polynomial(int max_degree, long lo = -9, long hi = 9) {
    const long d = uniform(0, max_degree);
    std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = uniform(lo, hi);
    return IntPolynomial(std::move(c));
  }

  IntPolynomial monic(int min_degree, int max_degree, long lo = -9, long hi = 9) {
    const long d = uniform(min_degree, max_degree);
    std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = uniform(lo, hi);
    c.back() = 1;
    return IntPolynomial(std::move(c));
  }

  IntMatrix matrix(std::size_t rows, std::size_t cols, long lo = -9, long hi = 9) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

inline bool coefficients_within(const IntPolynomial& p, long bound) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [bound](const Integer& c) { return abs_value(c) <= bound; });
}

struct PolyPair {
  IntPolynomial f;
  IntPolynomial g;
};

/// Pairs with deg g <= max_deg_g, deg f <= max_deg_f, coefficients in [-9, 9],
/// g monic. Odd-indexed pairs share a planted monic common factor.
inline std::vector<PolyPair> random_pairs(std::uint64_t seed, std::size_t count, int max_deg_g,
                                          int max_deg_f) {
  Generator gen(seed);
  std::vector<PolyPair> pairs;
  pairs.reserve(count);
  while (pairs.size() < count) {
    if (pairs.size() % 2 == 1) {
      bool planted = false;
      for (int attempt = 0; attempt < 64 && !planted; ++attempt) {
        const IntPolynomial z = gen.monic(1, std::min(3, max_deg_g), -2, 2);
        const int dz = z.degree();
        const IntPolynomial f_part = gen.polynomial(max_deg_f - dz, -2, 2);
        const IntPolynomial g_part = gen.monic(0, max_deg_g - dz, -2, 2);
        IntPolynomial f = z * f_part;
        IntPolynomial g = z * g_part;
        if (coefficients_within(f, 9) && coefficients_within(g, 9)) {
          pairs.push_back({std::move(f), std::move(g)});
          planted = true;
        }
      }
      if (planted) continue;
    }
    IntPolynomial g = gen.monic(1, max_deg_g);
    IntPolynomial f = gen.polynomial(max_deg_f);
    pairs.push_back({std::move(f), std::move(g)});
  }
  return pairs;
}

inline std::string describe(const IntPolynomial& f, const IntPolynomial& g) {
  return "f = " + to_string(f) + ", g = " + to_string(g);
}

inline std::string describe(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

// ---------------------------------------------------------------------------
// Suites.

/// Phi_m(C_{Phi_n}) closed form vs engine for 1 <= n <= m <= max (default 36).
inline SuiteResult cyclotomic_suite(const SweepConfig& cfg) {
  const std::size_t max = cfg.max ? cfg.max : 36;
  std::vector<std::pair<std::size_t, std::size_t>> items;
  for (std::size_t m = 1; m <= max; ++m)
    for (std::size_t n = 1; n <= m; ++n) items.emplace_back(m, n);
  return run_items(
      "cyclotomic", items,
      [](const std::pair<std::size_t, std::size_t>& mn) -> std::optional<std::string> {
        const auto [m, n] = mn;
        const auto closed = cyclotomic_companion_smith(m, n).invariant_factors;
        const auto engine =
            smith_form(poly_of_companion(cyclotomic(m), cyclotomic(n))).invariant_factors;
        if (closed == engine) return std::nullopt;
        return "(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
               "): closed " + describe(closed) + " vs engine " + describe(engine);
      },
      cfg.jobs);
}

struct TorusTriple {
  std::size_t r, s, n;
};

inline std::string describe(const TorusTriple& t) {
  return "(r, s, n) = (" + std::to_string(t.r) + ", " + std::to_string(t.s) + ", " +
         std::to_string(t.n) + ")";
}

/// Torus circulant closed form vs engine: coprime 2 <= r < s <= max
/// (default 9), 2 <= n <= 12. Also checks r <-> s symmetry.
inline SuiteResult torus_suite(const SweepConfig& cfg) {
  const std::size_t max = cfg.max ? cfg.max : 9;
  std::vector<TorusTriple> items;
  for (std::size_t r = 2; r <= max; ++r)
    for (std::size_t s = r + 1; s <= max; ++s)
      if (std::gcd(r, s) == 1)
        for (std::size_t n = 2; n <= 12; ++n) items.push_back({r, s, n});
  return run_items(
      "dunwoody", items,
      [](const TorusTriple& t) -> std::optional<std::string> {
        const auto closed = torus_circulant_smith(t.r, t.s, t.n).invariant_factors;
        const auto engine = smith_form(torus_circulant(t.r, t.s, t.n)).invariant_factors;
        if (closed != engine)
          return describe(t) + ": closed " + describe(closed) + " vs engine " + describe(engine);
        if (torus_circulant_smith(t.s, t.r, t.n).invariant_factors != closed)
          return describe(t) + ": not symmetric in r and s";
        return std::nullopt;
      },
      cfg.jobs);
}

inline bool pairwise_coprime(std::size_t a, std::size_t b, std::size_t c) {
  return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1;
}

/// Brieskorn homology over coprime r != s: trivial iff pairwise coprime,
/// agrees with direct elimination, Betti law. Default grid r, s <= 9 and
/// n <= 12; with max set, r, s, n <= max.
inline SuiteResult brieskorn_suite(const SweepConfig& cfg) {
  const std::size_t max_rs = cfg.max ? cfg.max : 9;
  const std::size_t max_n = cfg.max ? cfg.max : 12;
  std::vector<TorusTriple> items;
  for (std::size_t r = 2; r <= max_rs; ++r)
    for (std::size_t s = 2; s <= max_rs; ++s)
      if (r != s && std::gcd(r, s) == 1)
        for (std::size_t n = 2; n <= max_n; ++n) items.push_back({r, s, n});
  return run_items(
      "brieskorn", items,
      [](const TorusTriple& t) -> std::optional<std::string> {
        const AbelianGroup h = brieskorn_homology(t.r, t.s, t.n);
        if (h.is_trivial() != pairwise_coprime(t.r, t.s, t.n))
          return describe(t) + ": triviality law fails, H_1 = " + to_string(h);
        const std::size_t x = std::gcd(t.r, t.n), y = std::gcd(t.s, t.n);
        if (h.betti != (x - 1) * (y - 1)) return describe(t) + ": Betti law fails";
        const AbelianGroup direct = brieskorn_homology_by_elimination(t.r, t.s, t.n);
        if (!(h == direct))
          return describe(t) + ": " + to_string(h) + " vs elimination " + to_string(direct);
        return std::nullopt;
      },
      cfg.jobs);
}

/// Reduction by the gcd vs direct engine, and the rank law
/// (default 500 pairs, deg g <= 8, deg f <= 12).
inline SuiteResult reduction_suite(const SweepConfig& cfg) {
  const auto items = random_pairs(cfg.seed, cfg.max ? cfg.max : 500, 8, 12);
  return run_items(
      "theorem-c", items,
      [](const PolyPair& p) -> std::optional<std::string> {
        const SmithDecomposition fast = smith_via_theorem_c(p.f, p.g);
        const SmithDecomposition engine = smith_form(poly_of_companion(p.f, p.g));
        if (fast.invariant_factors != engine.invariant_factors)
          return describe(p.f, p.g) + ": reduced " + describe(fast.invariant_factors) +
                 " vs engine " + describe(engine.invariant_factors);
        const auto expected_rank = static_cast<std::size_t>(
            p.g.degree() - gcd_with_monic(p.f, p.g).degree());
        if (engine.rank != expected_rank || fast.rank != expected_rank)
          return describe(p.f, p.g) + ": rank law fails";
        return std::nullopt;
      },
      cfg.jobs);
}

/// Last nonzero determinantal divisor from the minor oracle vs |res(F, G)|,
/// on the reduction-suite pairs with deg g <= 6.
inline SuiteResult last_divisor_suite(const SweepConfig& cfg) {
  std::vector<PolyPair> items;
  for (auto& p : random_pairs(cfg.seed, cfg.max ? cfg.max : 500, 8, 12))
    if (p.g.degree() <= 6) items.push_back(std::move(p));
  const std::size_t cap = cfg.minor_cap;
  return run_items(
      "corollary-d", items,
      [cap](const PolyPair& p) -> std::optional<std::string> {
        const IntMatrix m = poly_of_companion(p.f, p.g);
        const std::size_t r = smith_form(m).rank;
        if (r == 0) {
          try {
            last_nonzero_determinantal_divisor(p.f, p.g);
          } catch (const AllZeroMatrix&) {
            return std::nullopt;
          }
          return describe(p.f, p.g) + ": zero matrix not reported";
        }
        const auto gammas = determinantal_divisors(m, r, cap);
        const Integer expected = last_nonzero_determinantal_divisor(p.f, p.g);
        if (gammas.back() == expected) return std::nullopt;
        return describe(p.f, p.g) + ": gamma_r = " + gammas.back().get_str() +
               " vs |res(F, G)| = " + expected.get_str();
      },
      cfg.jobs);
}

/// det f(C_g) = res(f, g) (default 500 pairs, deg g <= 7).
inline SuiteResult determinant_resultant_suite(const SweepConfig& cfg) {
  const auto items = random_pairs(cfg.seed ^ 0x9e3779b97f4a7c15ULL, cfg.max ? cfg.max : 500, 7, 12);
  return run_items(
      "eq1-resultant", items,
      [](const PolyPair& p) -> std::optional<std::string> {
        const Integer det = determinant(poly_of_companion(p.f, p.g));
        const Integer res = resultant(p.f, p.g);
        if (det == res) return std::nullopt;
        return describe(p.f, p.g) + ": det " + det.get_str() + " vs res " + res.get_str();
      },
      cfg.jobs);
}

/// gamma_1 = cont(f mod g) vs the minor oracle (default 200 pairs, deg g <= 6).
inline SuiteResult first_divisor_suite(const SweepConfig& cfg) {
  const auto items = random_pairs(cfg.seed ^ 0x5851f42d4c957f2dULL, cfg.max ? cfg.max : 200, 6, 12);
  const std::size_t cap = cfg.minor_cap;
  return run_items(
      "lemma-gamma1", items,
      [cap](const PolyPair& p) -> std::optional<std::string> {
        const Integer fast = first_determinantal_divisor(p.f, p.g);
        const Integer oracle = determinantal_divisors(poly_of_companion(p.f, p.g), 1, cap)[0];
        if (fast == oracle) return std::nullopt;
        return describe(p.f, p.g) + ": cont " + fast.get_str() + " vs gamma_1 " +
               oracle.get_str();
      },
      cfg.jobs);
}

struct SplitInstance {
  bool product = true;  // product split (f1 f2, g) or direct-sum split (f, g1 g2)
  bool coprime = true;
  IntPolynomial p1, p2, p3;  // (f1, f2, g) or (f, g1, g2)
};

inline bool split_is_coprime(const SplitInstance& s) {
  if (s.product) return gcd(resultant(s.p1, s.p3), resultant(s.p2, s.p3)) == 1;
  return gcd(resultant(s.p1, s.p2), resultant(s.p1, s.p3)) == 1;
}

/// Constructs `count` coprime instances of each split (seeded rejection
/// sampling) and count / 5 violating instances of each.
inline std::vector<SplitInstance> split_instances(std::uint64_t seed, std::size_t count) {
  Generator gen(seed);
  std::vector<SplitInstance> out;
  auto draw = [&](bool product) {
    SplitInstance s;
    s.product = product;
    if (product) {
      s.p1 = gen.polynomial(3, -4, 4);
      s.p2 = gen.polynomial(3, -4, 4);
      s.p3 = gen.monic(1, 5, -3, 3);
    } else {
      s.p1 = gen.polynomial(4, -4, 4);
      s.p2 = gen.monic(1, 4, -3, 3);
      s.p3 = gen.monic(1, 4, -3, 3);
    }
    s.coprime = split_is_coprime(s);
    return s;
  };
  for (bool product : {true, false}) {
    std::size_t good = 0, bad = 0;
    while (good < count || bad < count / 5) {
      SplitInstance s = draw(product);
      if (s.coprime && good < count) {
        ++good;
        out.push_back(std::move(s));
      } else if (!s.coprime && bad < count / 5) {
        ++bad;
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

/// Product and direct-sum splittings vs the direct engine; violating
/// instances must raise ResultantsNotCoprime (default 100 of each).
inline SuiteResult factor_splits_suite(const SweepConfig& cfg) {
  const auto items = split_instances(cfg.seed, cfg.max ? cfg.max : 100);
  return run_items(
      "factor-splits", items,
      [](const SplitInstance& s) -> std::optional<std::string> {
        const std::string what =
            (s.product ? "product f1 = " + to_string(s.p1) + ", f2 = " + to_string(s.p2) +
                             ", g = " + to_string(s.p3)
                       : "direct sum f = " + to_string(s.p1) + ", g1 = " + to_string(s.p2) +
                             ", g2 = " + to_string(s.p3));
        auto split = [&] {
          return s.product ? smith_product_split(s.p1, s.p2, s.p3)
                           : smith_direct_sum_split(s.p1, s.p2, s.p3);
        };
        if (!s.coprime) {
          try {
            split();
          } catch (const ResultantsNotCoprime&) {
            return std::nullopt;
          }
          return what + ": non-coprime instance accepted";
        }
        const auto fast = split().invariant_factors;
        const IntMatrix direct = s.product ? poly_of_companion(s.p1 * s.p2, s.p3)
                                           : poly_of_companion(s.p1, s.p2 * s.p3);
        const auto engine = smith_form(direct).invariant_factors;
        if (fast == engine) return std::nullopt;
        return what + ": split " + describe(fast) + " vs engine " + describe(engine);
      },
      cfg.jobs);
}

struct DivisorPair {
  IntPolynomial g, a, b;
};

/// Every monic factorization g = a b of g = t^n +- 1 (n <= max, default 8)
/// into products of cyclotomic factors.
inline std::vector<DivisorPair> cyclotomic_factorizations(std::size_t max) {
  std::vector<DivisorPair> out;
  for (std::size_t n = 1; n <= max; ++n)
    for (int sign : {-1, 1}) {
      const IntPolynomial g = IntPolynomial::monomial(1, n) + IntPolynomial::constant(sign);
      // t^n - 1 = prod_{d | n} Phi_d;  t^n + 1 = prod_{d | 2n, d !| n} Phi_d
      std::vector<IntPolynomial> factors;
      for (std::size_t d = 1; d <= 2 * n; ++d) {
        const bool in_minus = n % d == 0;
        const bool in_plus = (2 * n) % d == 0 && !in_minus;
        if ((sign < 0 && in_minus) || (sign > 0 && in_plus)) factors.push_back(cyclotomic(d));
      }
      for (std::size_t mask = 0; mask < (std::size_t{1} << factors.size()); ++mask) {
        IntPolynomial a{1}, b{1};
        for (std::size_t i = 0; i < factors.size(); ++i) {
          if ((mask >> i) & 1U)
            a = a * factors[i];
          else
            b = b * factors[i];
        }
        out.push_back({g, std::move(a), std::move(b)});
      }
    }
  return out;
}

/// U_a C_g = X_{a,b} U_a, U_a unimodular, and a(C_g) ~ I (+) 0.
inline SuiteResult similarity_suite(const SweepConfig& cfg) {
  const auto items = cyclotomic_factorizations(cfg.max ? cfg.max : 8);
  return run_items(
      "similarity", items,
      [](const DivisorPair& d) -> std::optional<std::string> {
        const std::string what = "g = " + to_string(d.g) + ", a = " + to_string(d.a);
        const SimilarityWitness w = similarity_witness(d.a, d.b);
        if (!(w.u_a * companion(d.g) == w.x_ab * w.u_a)) return what + ": U_a C_g != X U_a";
        if (!is_unimodular(w.u_a)) return what + ": U_a not unimodular";
        const std::size_t n = static_cast<std::size_t>(d.g.degree());
        const std::size_t m = static_cast<std::size_t>(d.a.degree());
        std::vector<Integer> expected(n - m, Integer(1));
        expected.resize(n, Integer(0));
        const auto got = smith_form(poly_of_companion(d.a, d.g)).invariant_factors;
        if (got != expected) return what + ": Smith form of a(C_g) is " + describe(got);
        return std::nullopt;
      },
      cfg.jobs);
}

/// Engine validity with transforms on random matrices up to 6 x 6
/// (default 200), against the minor oracle.
inline SuiteResult engine_suite(const SweepConfig& cfg) {
  Generator gen(cfg.seed ^ 0x2545f4914f6cdd1dULL);
  std::vector<IntMatrix> items;
  const std::size_t count = cfg.max ? cfg.max : 200;
  for (std::size_t k = 0; k < count; ++k) {
    const auto rows = static_cast<std::size_t>(gen.uniform(1, 6));
    const auto cols = static_cast<std::size_t>(gen.uniform(1, 6));
    IntMatrix m = gen.matrix(rows, cols);
    // Every third matrix gets a dependent row to exercise rank deficiency.
    if (k % 3 == 2 && rows >= 2) {
      const auto dst = static_cast<std::size_t>(gen.uniform(0, static_cast<long>(rows) - 1));
      const auto src = (dst + 1) % rows;
      const long mult = gen.uniform(-2, 2);
      for (std::size_t j = 0; j < cols; ++j) m(dst, j) = mult * m(src, j);
    }
    items.push_back(std::move(m));
  }
  const std::size_t cap = cfg.minor_cap;
  return run_items(
      "engine", items,
      [cap](const IntMatrix& m) -> std::optional<std::string> {
        const SmithDecomposition snf = smith_form(m, true);
        const std::string what = "matrix\n" + to_text(m);
        const auto& s = snf.invariant_factors;
        IntMatrix diag(m.rows(), m.cols());
        for (std::size_t i = 0; i < s.size(); ++i) diag(i, i) = s[i];
        if (!(*snf.left * m * *snf.right == diag)) return what + "left * M * right != diag";
        if (abs_value(determinant(*snf.left)) != 1 || abs_value(determinant(*snf.right)) != 1)
          return what + "transform not unimodular";
        if (!is_divisor_chain(s)) return what + "not a divisor chain";
        if (snf.rank != count_nonzero(s) || snf.rank != rank(m)) return what + "rank mismatch";
        const auto oracle = invariant_factors_from_divisors(
            determinantal_divisors(m, std::min(m.rows(), m.cols()), cap));
        if (oracle != s) return what + "engine " + describe(s) + " vs minors " + describe(oracle);
        return std::nullopt;
      },
      cfg.jobs);
}

struct SuiteEntry {
  const char* name;
  SuiteResult (*run)(const SweepConfig&);
};

/// Named suites for the CLI; "all" runs every entry in this order.
inline const std::vector<SuiteEntry>& suites() {
  static const std::vector<SuiteEntry> table = {
      {"theorem-c", reduction_suite},       {"corollary-d", last_divisor_suite},
      {"cyclotomic", cyclotomic_suite},     {"dunwoody", torus_suite},
      {"eq1-resultant", determinant_resultant_suite}, {"factor-splits", factor_splits_suite},
      {"lemma-gamma1", first_divisor_suite}, {"brieskorn", brieskorn_suite},
      {"similarity", similarity_suite},     {"engine", engine_suite},
  };
  return table;
}

}  // namespace companion_smith::verify
