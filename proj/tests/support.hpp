#pragma once

#include <random>
#include <vector>

#include "qkseidel/qkseidel.hpp"

namespace qkseidel::testing {

inline Word random_word(std::mt19937& rng, int rank, int length, int first = 1) {
  std::uniform_int_distribution<int> node(first, rank);
  Word w;
  for (int k = 0; k < length; ++k) w.push_back(node(rng));
  return w;
}

inline const WeylElement& random_element(std::mt19937& rng, const RootSystem& rs) {
  const auto& all = rs.elements();
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

inline LaurentPoly random_poly(std::mt19937& rng, int rank, int terms = 3) {
  std::uniform_int_distribution<int> exp(-2, 2), coeff(-3, 3);
  LaurentPoly p;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(static_cast<std::size_t>(rank));
    for (auto& x : e) x = exp(rng);
    p += LaurentPoly::monomial(RootVec(e), coeff(rng));
  }
  return p;
}

}  // namespace qkseidel::testing
