#pragma once

// Abelianizations of finitely presented groups and Brieskorn homology.

#include "companion_smith/errors.hpp"
#include "companion_smith/exactmat.hpp"
#include "companion_smith/integer.hpp"
#include "companion_smith/intpoly.hpp"
#include "companion_smith/smith.hpp"
#include "companion_smith/structured.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace companion_smith {

/// Z_{t_1} + ... + Z_{t_k} + Z^betti with t_1 | ... | t_k and every t_i >= 2.
/// Field equality is group isomorphism.
struct AbelianGroup {
  std::vector<Integer> torsion;
  std::size_t betti = 0;

  bool is_trivial() const { return torsion.empty() && betti == 0; }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  /// Group presented by `generators` generators and relators whose relation
  /// matrix has the given invariant factors.
  static AbelianGroup from_invariant_factors(std::span<const Integer> factors,
                                             std::size_t generators) {
    std::vector<Integer> nonzero;
    for (const auto& f : factors)
      if (f != 0) nonzero.push_back(f);
    if (nonzero.size() > generators) throw OutOfRange("more nonzero factors than generators");
    AbelianGroup group;
    group.betti = generators - nonzero.size();
    for (auto& f : diagonal_smith_chain(std::move(nonzero)))
      if (f != 1) group.torsion.push_back(std::move(f));
    return group;
  }
};

/// "Z_2^2 + Z_6 + Z^2"; the trivial group renders as "0".
inline std::string to_string(const AbelianGroup& group) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < group.torsion.size();) {
    std::size_t j = i;
    while (j < group.torsion.size() && group.torsion[j] == group.torsion[i]) ++j;
    std::string part = "Z_" + group.torsion[i].get_str();
    if (j - i > 1) part += "^" + std::to_string(j - i);
    parts.push_back(std::move(part));
    i = j;
  }
  if (group.betti == 1) parts.emplace_back("Z");
  if (group.betti > 1) parts.push_back("Z^" + std::to_string(group.betti));
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

/// Abelianization from the generators x relators relation matrix.
inline AbelianGroup abelianization(const IntMatrix& relations) {
  const SmithDecomposition snf = smith_form(relations);
  return AbelianGroup::from_invariant_factors(snf.invariant_factors, relations.rows());
}

/// Exponent sums a_0 .. a_{n-1} of the word w in a cyclic presentation P_n(w).
struct CyclicPresentationData {
  std::size_t n = 0;
  std::vector<Integer> exponent_sums;
};

inline IntPolynomial representer_polynomial(const CyclicPresentationData& data) {
  if (data.n < 1 || data.exponent_sums.size() != data.n)
    throw OutOfRange("cyclic presentation needs n >= 1 exponent sums");
  return IntPolynomial(data.exponent_sums);
}

/// The relation matrix of P_n(w): circulant(a_0, ..., a_{n-1}).
inline IntMatrix representer_circulant(const CyclicPresentationData& data) {
  representer_polynomial(data);
  return circulant(data.exponent_sums);
}

/// Exponent-sum data whose representer is the projection of f to Z[t]/<t^n - 1>.
inline CyclicPresentationData cyclic_data_from_polynomial(const IntPolynomial& f, std::size_t n) {
  if (n < 1) throw OutOfRange("cyclic presentation needs n >= 1");
  const IntPolynomial h = mod_monic(f, IntPolynomial::power_minus_one(n));
  CyclicPresentationData data{n, std::vector<Integer>(n, Integer(0))};
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) data.exponent_sums[i] = h.coeffs()[i];
  return data;
}

/// H_1 of the Brieskorn manifold M(r, s, n), gcd(r, s) = 1, from the
/// closed-form torus circulant Smith form.
inline AbelianGroup brieskorn_homology(std::size_t r, std::size_t s, std::size_t n) {
  if (r < 2 || s < 2 || n < 2) throw OutOfRange("brieskorn_homology needs r, s, n >= 2");
  const SmithDecomposition snf = torus_circulant_smith(r, s, n);
  return AbelianGroup::from_invariant_factors(snf.invariant_factors, n);
}

/// Same group, by eliminating the actual relation circulant.
inline AbelianGroup brieskorn_homology_by_elimination(std::size_t r, std::size_t s,
                                                      std::size_t n) {
  if (r < 2 || s < 2 || n < 2) throw OutOfRange("brieskorn_homology needs r, s, n >= 2");
  return abelianization(
      representer_circulant(cyclic_data_from_polynomial(alexander_polynomial(r, s), n)));
}

}  // namespace companion_smith
