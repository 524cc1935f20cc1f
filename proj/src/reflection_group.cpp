#include "dunkl/reflection_group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <optional>
#include <set>

namespace dunkl {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Z2: return "Z2";
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "Z2") return Family::Z2;
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "D") return Family::D;
  throw UnsupportedFamilyError("unsupported root system family '" + std::string(name) +
                               "' (catalog: Z2, A, B, D)");
}

bool root_less(const Root& a, const Root& b) {
  Rational sa = 0, sb = 0;
  for (const auto& v : a) sa += v;
  for (const auto& v : b) sb += v;
  if (int c = cmp(sa, sb); c != 0) return c < 0;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

namespace {

Root unit(std::size_t n, std::size_t i, int sign = 1) {
  Root r(n);
  r[i] = sign;
  return r;
}

Root combo(std::size_t n, std::size_t i, int si, std::size_t j, int sj) {
  Root r(n);
  r[i] = si;
  r[j] = sj;
  return r;
}

bool is_positive(const Root& r) {
  for (const auto& v : r) {
    if (sgn(v) != 0) return sgn(v) > 0;
  }
  return false;
}

std::string make_label(Family f, std::size_t n) {
  switch (f) {
    case Family::Z2: return n == 1 ? "Z2" : "Z2^" + std::to_string(n);
    case Family::A: return "A" + std::to_string(n - 1);
    case Family::B: return "B" + std::to_string(n);
    case Family::D: return "D" + std::to_string(n);
  }
  return {};
}

}  // namespace

RootSystem build_catalog(Family family, std::size_t rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if ((family == Family::A || family == Family::D) && rank < 2) {
    throw std::invalid_argument(std::string(family_name(family)) + " family requires ambient rank >= 2");
  }

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.label = make_label(family, rank);
  const std::size_t n = rank;

  auto add_short = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      rs.roots.push_back(unit(n, i, 1));
      rs.roots.push_back(unit(n, i, -1));
    }
  };
  auto add_long = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (int si : {1, -1}) {
          for (int sj : {1, -1}) rs.roots.push_back(combo(n, i, si, j, sj));
        }
      }
    }
  };

  switch (family) {
    case Family::Z2: add_short(); break;
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) rs.roots.push_back(combo(n, i, 1, j, -1));
        }
      }
      break;
    case Family::B:
      add_short();
      add_long();
      break;
    case Family::D: add_long(); break;
  }

  std::sort(rs.roots.begin(), rs.roots.end(), root_less);
  for (const auto& r : rs.roots) {
    if (is_positive(r)) rs.positive_roots.push_back(r);
  }
  for (const auto& r : rs.positive_roots) rs.reflections.push_back(LinearMap::reflection(r));
  return rs;
}

RootSystem build_dihedral(unsigned m) {
  if (m == 3) return build_catalog(Family::A, 3);
  if (m == 4) return build_catalog(Family::B, 2);
  throw UnsupportedFamilyError("dihedral group I2(" + std::to_string(m) +
                               ") has no rational realization; only I2(3) and I2(4) are available");
}

RootSystem parse_group_label(std::string_view label) {
  std::string s;
  for (char c : label) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  auto number = [&](std::string_view digits) -> std::size_t {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw UnsupportedFamilyError("cannot parse group label '" + std::string(label) + "'");
    }
    return std::stoul(std::string(digits));
  };

  if (s.rfind("I2(", 0) == 0 && s.back() == ')') {
    return build_dihedral(static_cast<unsigned>(number(std::string_view(s).substr(3, s.size() - 4))));
  }
  if (s.rfind("Z2", 0) == 0) {
    if (s == "Z2") return build_catalog(Family::Z2, 1);
    if (s.size() > 3 && s[2] == '^') return build_catalog(Family::Z2, number(std::string_view(s).substr(3)));
  } else if (!s.empty()) {
    const std::size_t size = number(std::string_view(s).substr(1));
    switch (s.front()) {
      case 'A':
        if (size < 1) break;
        return build_catalog(Family::A, size + 1);
      case 'B': return build_catalog(Family::B, size);
      case 'D': return build_catalog(Family::D, size);
      default: break;
    }
  }
  throw UnsupportedFamilyError("unsupported group label '" + std::string(label) +
                               "' (examples: Z2, Z2^2, A2, B2, D3, I2(3), I2(4))");
}

std::size_t expected_group_order(Family family, std::size_t rank) {
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= rank; ++i) fact *= i;
  const std::size_t two_n = std::size_t{1} << rank;
  switch (family) {
    case Family::Z2: return two_n;
    case Family::A: return fact;
    case Family::B: return two_n * fact;
    case Family::D: return two_n / 2 * fact;
  }
  return 0;
}

GroupElements generate_group(const RootSystem& rs, std::size_t cap) {
  GroupElements g;
  std::set<LinearMap> seen;
  std::deque<LinearMap> queue;
  const LinearMap id = LinearMap::identity(rs.rank);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    LinearMap cur = std::move(queue.front());
    queue.pop_front();
    g.matrices.push_back(cur);
    for (const auto& s : rs.reflections) {
      LinearMap next = s * cur;
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw std::runtime_error("group closure exceeded the safety cap; root system is corrupt");
        queue.push_back(std::move(next));
      }
    }
  }
  return g;
}

std::vector<RootOrbit> root_orbits(const RootSystem& rs) {
  std::set<Root, decltype(&root_less)> assigned(&root_less);
  std::vector<RootOrbit> orbits;
  for (const auto& r : rs.roots) {
    if (assigned.count(r)) continue;
    std::set<Root, decltype(&root_less)> orbit(&root_less);
    std::deque<Root> queue{r};
    orbit.insert(r);
    while (!queue.empty()) {
      Root cur = std::move(queue.front());
      queue.pop_front();
      for (const auto& s : rs.reflections) {
        Root img = s.apply(cur);
        if (orbit.insert(img).second) queue.push_back(std::move(img));
      }
    }
    RootOrbit o;
    o.roots.assign(orbit.begin(), orbit.end());
    o.representative = o.roots.front();
    assigned.insert(o.roots.begin(), o.roots.end());
    orbits.push_back(std::move(o));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const RootOrbit& a, const RootOrbit& b) { return root_less(a.representative, b.representative); });
  return orbits;
}

Multiplicity::Multiplicity(const RootSystem& rs, std::vector<Rational> orbit_values)
    : orbits_(root_orbits(rs)), values_(std::move(orbit_values)) {
  if (values_.size() != orbits_.size()) {
    throw InvalidMultiplicityError("multiplicity needs " + std::to_string(orbits_.size()) + " orbit value(s) for " +
                                   rs.label + ", got " + std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (sgn(v) < 0) throw InvalidMultiplicityError("multiplicity values must be non-negative");
  }
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    for (const auto& r : orbits_[i].roots) orbit_of_[r] = i;
  }
}

Multiplicity Multiplicity::uniform(const RootSystem& rs, const Rational& k) {
  return Multiplicity(rs, std::vector<Rational>(root_orbits(rs).size(), k));
}

Multiplicity Multiplicity::from_roots(const RootSystem& rs, const std::map<Root, Rational>& per_root) {
  const auto orbits = root_orbits(rs);
  std::vector<Rational> values;
  for (const auto& o : orbits) {
    std::optional<Rational> v;
    for (const auto& r : o.roots) {
      auto it = per_root.find(r);
      if (it == per_root.end()) continue;
      if (v && *v != it->second) {
        throw InvalidMultiplicityError("multiplicity is not constant on the W-orbit of root " +
                                       to_string(Polynomial::linear_form(o.representative)));
      }
      v = it->second;
    }
    if (!v) throw InvalidMultiplicityError("multiplicity missing for an entire root orbit");
    values.push_back(*v);
  }
  return Multiplicity(rs, std::move(values));
}

const Rational& Multiplicity::operator()(const Root& alpha) const {
  auto it = orbit_of_.find(alpha);
  if (it == orbit_of_.end()) throw std::invalid_argument("vector is not a root of this system");
  return values_[it->second];
}

bool Multiplicity::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return sgn(v) == 0; });
}

bool Multiplicity::has_integral_double() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return is_integer(Rational(2 * v)); });
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::variant<Rational, double> weight_function(const RootSystem& rs, const Multiplicity& k,
                                               std::span<const Rational> x) {
  if (x.size() != rs.rank) throw std::invalid_argument("point has wrong dimension");
  if (!k.has_integral_double()) {
    std::vector<double> xd;
    for (const auto& v : x) xd.push_back(v.get_d());
    return weight_function(rs, k, std::span<const double>(xd));
  }
  Rational w = 1;
  for (const auto& alpha : rs.positive_roots) {
    const Rational twice_k = 2 * k(alpha);
    w *= pow(Rational(abs(dot(alpha, x))), static_cast<int>(twice_k.get_num().get_si()));
  }
  return w;
}

double weight_function(const RootSystem& rs, const Multiplicity& k, std::span<const double> x) {
  if (x.size() != rs.rank) throw std::invalid_argument("point has wrong dimension");
  double w = 1.0;
  for (const auto& alpha : rs.positive_roots) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += alpha[i].get_d() * x[i];
    w *= std::pow(std::abs(s), 2.0 * k(alpha).get_d());
  }
  return w;
}

Rational gamma_k(const RootSystem& rs, const Multiplicity& k) {
  Rational g = 0;
  for (const auto& alpha : rs.positive_roots) g += k(alpha);
  return g;
}

}  // namespace dunkl
