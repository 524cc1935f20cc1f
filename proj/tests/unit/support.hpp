#pragma once

#include "dunkl/dunkl_context.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace dunkl;

inline DunklContext make_context(const std::string& label, std::vector<Rational> k) {
  RootSystem rs = parse_group_label(label);
  if (k.size() == 1) k.assign(root_orbits(rs).size(), k.front());
  Multiplicity m(rs, k);
  return DunklContext(std::move(rs), std::move(m));
}

struct Reference {
  std::string label;
  std::vector<Rational> k;
};

// The four reference configurations used throughout the tests.
inline std::vector<Reference> reference_configs() {
  return {
      {"Z2^2", {Rational(1, 2), Rational(2)}},
      {"A2", {Rational(3, 4)}},
      {"B2", {Rational(1), Rational(1, 2)}},
      {"D3", {Rational(2)}},
  };
}

inline std::vector<Rational> reference_ts() { return {Rational(1, 4), Rational(1, 2), Rational(2)}; }

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t rank, unsigned max_degree, int terms) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), deg(0, static_cast<int>(max_degree));
  Polynomial p(rank);
  for (int i = 0; i < terms; ++i) {
    std::vector<unsigned> e(rank, 0);
    int budget = deg(rng);
    for (std::size_t j = 0; j < rank && budget > 0; ++j) {
      std::uniform_int_distribution<int> take(0, budget);
      e[j] = static_cast<unsigned>(take(rng));
      budget -= static_cast<int>(e[j]);
    }
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p.add_term(MultiIndex(e), c);
  }
  return p;
}

}  // namespace testing
