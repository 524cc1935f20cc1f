#pragma once

#include "dunkl/polynomial.hpp"
#include "dunkl/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dunkl {

class UnsupportedFamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidMultiplicityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Root = std::vector<Rational>;

/// Rational-coordinate catalog families. A is realized as A_{N-1} inside R^N.
enum class Family { Z2, A, B, D };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

/// Graded (coordinate sum) then lexicographic order on root vectors.
bool root_less(const Root& a, const Root& b);

struct RootSystem {
  Family family = Family::Z2;
  std::size_t rank = 0;
  std::string label;
  std::vector<Root> roots;           // full R, sorted by root_less
  std::vector<Root> positive_roots;  // first nonzero coordinate positive, sorted
  std::vector<LinearMap> reflections;  // one per positive root, same order
};

/// Builds R for the family in ambient dimension `rank`:
///   Z2^N: {+-e_i}; A_{N-1}: {e_i - e_j}; B_N: {+-e_i, +-e_i +- e_j}; D_N: {+-e_i +- e_j}.
RootSystem build_catalog(Family family, std::size_t rank);

/// I2(3) ~ A2 (in R^3) and I2(4) ~ B2; other m have irrational coordinates.
RootSystem build_dihedral(unsigned m);

/// "Z2", "Z2^3", "A2", "B2", "D3", "I2(4)".
RootSystem parse_group_label(std::string_view label);

/// |W| for the catalog family.
std::size_t expected_group_order(Family family, std::size_t rank);

struct GroupElements {
  std::vector<LinearMap> matrices;  // identity first, then BFS order
};

/// Closure of the reflections under composition. Throws std::runtime_error
/// when the closure grows past `cap`.
GroupElements generate_group(const RootSystem& rs, std::size_t cap = 100000);

struct RootOrbit {
  Root representative;  // smallest root under root_less
  std::vector<Root> roots;
};

/// Partition of R into W-orbits, ordered by representative.
std::vector<RootOrbit> root_orbits(const RootSystem& rs);

/// W-invariant multiplicity k >= 0, one value per root orbit (orbit order as
/// returned by root_orbits).
class Multiplicity {
 public:
  Multiplicity() = default;
  Multiplicity(const RootSystem& rs, std::vector<Rational> orbit_values);

  static Multiplicity uniform(const RootSystem& rs, const Rational& k);
  /// Per-root assignment; rejects anything not constant on orbits.
  static Multiplicity from_roots(const RootSystem& rs, const std::map<Root, Rational>& per_root);

  const std::vector<Rational>& values() const { return values_; }
  const std::vector<RootOrbit>& orbits() const { return orbits_; }
  const Rational& operator()(const Root& alpha) const;
  bool is_zero() const;
  /// True when every 2k(alpha) is an integer.
  bool has_integral_double() const;

 private:
  std::vector<RootOrbit> orbits_;
  std::vector<Rational> values_;
  std::map<Root, std::size_t> orbit_of_;
};

/// w_k(x) = prod_{alpha in R+} |<alpha, x>|^{2k(alpha)}. Exact when every
/// 2k is an integer, floating otherwise.
std::variant<Rational, double> weight_function(const RootSystem& rs, const Multiplicity& k,
                                               std::span<const Rational> x);
double weight_function(const RootSystem& rs, const Multiplicity& k, std::span<const double> x);

/// gamma(k) = sum over positive roots of k(alpha).
Rational gamma_k(const RootSystem& rs, const Multiplicity& k);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace dunkl
