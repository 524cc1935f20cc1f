#include "dunkl/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dunkl {

// ---------------------------------------------------------------- LinearMap

LinearMap LinearMap::identity(std::size_t rank) {
  LinearMap m(rank);
  for (std::size_t i = 0; i < rank; ++i) m(i, i) = 1;
  return m;
}

LinearMap LinearMap::reflection(std::span<const Rational> alpha) {
  const std::size_t n = alpha.size();
  Rational norm2 = 0;
  for (const auto& a : alpha) norm2 += a * a;
  if (norm2 == 0) throw std::invalid_argument("reflection along the zero vector");
  LinearMap m = identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= 2 * alpha[i] * alpha[j] / norm2;
  }
  return m;
}

std::vector<Rational> LinearMap::apply(std::span<const Rational> x) const {
  if (x.size() != rank_) throw std::invalid_argument("linear map dimension mismatch");
  std::vector<Rational> y(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) {
      if (sgn((*this)(i, j)) != 0) y[i] += (*this)(i, j) * x[j];
    }
  }
  return y;
}

LinearMap LinearMap::operator*(const LinearMap& other) const {
  if (other.rank_ != rank_) throw std::invalid_argument("linear map dimension mismatch");
  LinearMap r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t k = 0; k < rank_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rank_; ++j) r(i, j) += a * other(k, j);
    }
  }
  return r;
}

bool LinearMap::is_signed_permutation() const {
  for (std::size_t i = 0; i < rank_; ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < rank_; ++j) {
      const Rational& a = (*this)(i, j);
      if (sgn(a) == 0) continue;
      if (a != 1 && a != -1) return false;
      ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

bool LinearMap::operator<(const LinearMap& other) const {
  if (rank_ != other.rank_) return rank_ < other.rank_;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (int c = cmp(entries_[i], other.entries_[i]); c != 0) return c < 0;
  }
  return false;
}

// --------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t rank, const Rational& c) {
  Polynomial p(rank);
  p.add_term(MultiIndex(rank), c);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& nu, const Rational& c) {
  Polynomial p(nu.rank());
  p.add_term(nu, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t rank, std::size_t axis) {
  return monomial(MultiIndex::unit(rank, axis));
}

Polynomial Polynomial::linear_form(std::span<const Rational> alpha) {
  Polynomial p(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) p.add_term(MultiIndex::unit(alpha.size(), i), alpha[i]);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // Graded order puts a maximal-degree term first.
  return static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

Rational Polynomial::coefficient(const MultiIndex& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& nu, const Rational& c) {
  if (nu.rank() != rank_) throw std::invalid_argument("monomial rank does not match polynomial rank");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::check_rank(const Polynomial& other) const {
  if (other.rank_ != rank_) {
    throw std::invalid_argument("polynomial rank mismatch (" + std::to_string(rank_) + " vs " +
                                std::to_string(other.rank_) + ")");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_rank(other);
  for (const auto& [nu, c] : other.terms_) add_term(nu, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_rank(other);
  for (const auto& [nu, c] : other.terms_) add_term(nu, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [nu, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_rank(b);
  Polynomial r(a.rank_);
  for (const auto& [mu, c] : a.terms_) {
    for (const auto& [nu, d] : b.terms_) r.add_term(mu + nu, c * d);
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [nu, c] : r.terms_) c = -c;
  return r;
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

// ------------------------------------------------------------------ calculus

Polynomial partial_derivative(const Polynomial& p, std::size_t axis) {
  if (axis >= p.rank()) throw std::out_of_range("partial derivative axis out of range");
  Polynomial r(p.rank());
  for (const auto& [nu, c] : p.terms()) {
    if (nu[axis] == 0) continue;
    MultiIndex mu = nu;
    mu[axis] -= 1;
    r.add_term(mu, c * nu[axis]);
  }
  return r;
}

namespace {

Polynomial substitute_signed_permutation(const Polynomial& p, const LinearMap& m) {
  const std::size_t n = p.rank();
  std::vector<std::size_t> target(n);
  std::vector<bool> negative(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(m(i, j)) != 0) {
        target[i] = j;
        negative[i] = sgn(m(i, j)) < 0;
      }
    }
  }
  Polynomial r(n);
  for (const auto& [nu, c] : p.terms()) {
    MultiIndex mu(n);
    bool flip = false;
    for (std::size_t i = 0; i < n; ++i) {
      mu[target[i]] += nu[i];
      if (negative[i] && nu[i] % 2 == 1) flip = !flip;
    }
    r.add_term(mu, flip ? Rational(-c) : c);
  }
  return r;
}

}  // namespace

Polynomial substitute_linear(const Polynomial& p, const LinearMap& m) {
  if (m.rank() != p.rank()) throw std::invalid_argument("substitution dimension mismatch");
  if (m.is_signed_permutation()) return substitute_signed_permutation(p, m);

  const std::size_t n = p.rank();
  // powers[i][e] = (row_i . x)^e, grown on demand
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j);
    powers[i].push_back(Polynomial::constant(n, 1));
    powers[i].push_back(Polynomial::linear_form(row));
  }
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][e];
  };

  Polynomial r(n);
  for (const auto& [nu, c] : p.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (nu[i] != 0) term = term * power(i, nu[i]);
    }
    r += term;
  }
  return r;
}

Polynomial divide_exact_by_linear_form(const Polynomial& p, std::span<const Rational> alpha) {
  const std::size_t n = p.rank();
  if (alpha.size() != n) throw std::invalid_argument("linear form dimension mismatch");
  std::size_t pivot = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(alpha[j]) != 0) pivot = j;
  }
  if (pivot == n) throw std::invalid_argument("division by the zero linear form");

  // Long division in the pivot variable: bucket terms by their pivot exponent
  // and clear buckets from the top; whatever is left in bucket 0 is remainder.
  const int top = p.degree();
  if (top < 0) return Polynomial(n);
  std::vector<Polynomial::TermMap> buckets(static_cast<std::size_t>(top) + 1);
  for (const auto& [nu, c] : p.terms()) buckets[nu[pivot]].emplace(nu, c);

  Polynomial q(n);
  const Rational inv_pivot = 1 / alpha[pivot];
  for (std::size_t e = buckets.size() - 1; e >= 1; --e) {
    for (const auto& [nu, c] : buckets[e]) {
      MultiIndex base = nu;
      base[pivot] -= 1;
      const Rational qc = c * inv_pivot;
      q.add_term(base, qc);
      for (std::size_t l = 0; l < n; ++l) {
        if (l == pivot || sgn(alpha[l]) == 0) continue;
        MultiIndex shifted = base;
        shifted[l] += 1;
        auto& lower = buckets[e - 1];
        auto [it, inserted] = lower.try_emplace(shifted, -qc * alpha[l]);
        if (!inserted) {
          it->second -= qc * alpha[l];
          if (sgn(it->second) == 0) lower.erase(it);
        }
      }
    }
  }
  if (!buckets[0].empty()) {
    throw NotDivisibleError("polynomial is not divisible by the linear form (nonzero remainder)");
  }
  return q;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.rank()) throw std::invalid_argument("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [nu, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (nu[i] != 0) term *= pow(point[i], static_cast<int>(nu[i]));
    }
    sum += term;
  }
  return sum;
}

double evaluate(const Polynomial& p, std::span<const double> point) {
  if (point.size() != p.rank()) throw std::invalid_argument("evaluation point has wrong length");
  double sum = 0.0;
  for (const auto& [nu, c] : p.terms()) {
    double term = c.get_d();
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned e = 0; e < nu[i]; ++e) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Polynomial homogeneous_component(const Polynomial& p, unsigned n) {
  Polynomial r(p.rank());
  for (const auto& [nu, c] : p.terms()) {
    if (nu.degree() == n) r.add_term(nu, c);
  }
  return r;
}

// --------------------------------------------------------------- text forms

namespace {

std::string monomial_text(const MultiIndex& nu) {
  std::string s;
  for (std::size_t i = 0; i < nu.rank(); ++i) {
    if (nu[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (nu[i] > 1) s += "^" + std::to_string(nu[i]);
  }
  return s;
}

std::string monomial_latex(const MultiIndex& nu) {
  std::string s;
  for (std::size_t i = 0; i < nu.rank(); ++i) {
    if (nu[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += "x_{" + std::to_string(i + 1) + "}";
    if (nu[i] > 1) s += "^{" + std::to_string(nu[i]) + "}";
  }
  return s;
}

std::string rational_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

template <typename CoefFn, typename MonoFn>
std::string render(const Polynomial& p, CoefFn coef_text, MonoFn mono_text, std::string_view times) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [nu, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    std::string body;
    if (nu.degree() == 0) {
      body = coef_text(mag);
    } else if (mag == 1) {
      body = mono_text(nu);
    } else {
      body = coef_text(mag) + std::string(times) + mono_text(nu);
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p) {
  return render(p, [](const Rational& q) { return to_string(q); }, monomial_text, "*");
}

std::string to_latex(const Polynomial& p) { return render(p, rational_latex, monomial_latex, " "); }

Polynomial parse_polynomial(std::string_view text, std::size_t rank) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial text");

  Polynomial p(rank);
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected '+' or '-' in polynomial text");
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string_view term(s.data() + pos, (end == std::string::npos ? s.size() : end) - pos);
    if (term.empty()) throw std::invalid_argument("empty term in polynomial text");
    pos = end == std::string::npos ? s.size() : end;

    Rational coef = negative ? -1 : 1;
    MultiIndex nu(rank);
    std::size_t fpos = 0;
    while (fpos <= term.size()) {
      std::size_t fend = term.find('*', fpos);
      std::string_view factor = term.substr(fpos, fend == std::string_view::npos ? std::string_view::npos : fend - fpos);
      if (factor.empty()) throw std::invalid_argument("empty factor in polynomial text");
      if (factor.front() == 'x') {
        std::size_t caret = factor.find('^');
        std::string idx(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
        std::string exp = caret == std::string_view::npos ? "1" : std::string(factor.substr(caret + 1));
        if (idx.empty() || exp.empty() || !std::all_of(idx.begin(), idx.end(), ::isdigit) ||
            !std::all_of(exp.begin(), exp.end(), ::isdigit)) {
          throw std::invalid_argument("bad variable factor '" + std::string(factor) + "'");
        }
        std::size_t axis = std::stoul(idx);
        if (axis < 1 || axis > rank) throw std::invalid_argument("variable index out of range in '" + std::string(factor) + "'");
        nu[axis - 1] += static_cast<unsigned>(std::stoul(exp));
      } else {
        coef *= parse_rational(factor);
      }
      if (fend == std::string_view::npos) break;
      fpos = fend + 1;
    }
    p.add_term(nu, coef);
  }
  return p;
}

}  // namespace dunkl
