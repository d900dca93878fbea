#pragma once

// JSON encodings used by the command-line tool. Integers that fit in a
// signed 64-bit value are JSON numbers; larger ones are decimal strings.

#include "companion_smith/exactmat.hpp"
#include "companion_smith/integer.hpp"
#include "companion_smith/intpoly.hpp"
#include "companion_smith/smith.hpp"
#include "companion_smith/topology.hpp"
#include "companion_smith/verify.hpp"

#include "json.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace companion_smith {

inline nlohmann::json to_json(const Integer& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

inline nlohmann::json to_json(const std::vector<Integer>& values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

/// Array of rows.
inline nlohmann::json to_json(const IntMatrix& m) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline nlohmann::json to_json(const SmithDecomposition& snf) {
  nlohmann::json out;
  out["invariant_factors"] = to_json(snf.invariant_factors);
  out["rank"] = snf.rank;
  out["left"] = snf.left ? to_json(*snf.left) : nlohmann::json(nullptr);
  out["right"] = snf.right ? to_json(*snf.right) : nlohmann::json(nullptr);
  return out;
}

inline nlohmann::json to_json(const AbelianGroup& group) {
  return {{"torsion", to_json(group.torsion)}, {"betti", group.betti}};
}

inline nlohmann::json to_json(const verify::SuiteResult& result) {
  return {{"suite", result.name},
          {"passed", result.passed},
          {"failed", result.failed},
          {"failures", result.failures}};
}

}  // namespace companion_smith
