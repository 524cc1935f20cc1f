#include "dunkl/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace dunkl {

MultiIndex MultiIndex::unit(std::size_t rank, std::size_t axis) {
  if (axis >= rank) throw std::out_of_range("axis out of range");
  MultiIndex e(rank);
  e.exps_[axis] = 1;
  return e;
}

unsigned MultiIndex::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

bool MultiIndex::is_even() const {
  for (unsigned e : exps_) {
    if (e % 2 != 0) return false;
  }
  return true;
}

Rational MultiIndex::factorial() const {
  Rational f = 1;
  for (unsigned e : exps_) f *= dunkl::factorial(e);
  return f;
}

Rational MultiIndex::binomial(const MultiIndex& rho) const {
  Rational b = 1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (rho.exps_[i] > exps_[i]) return 0;
    b *= dunkl::binomial(exps_[i], rho.exps_[i]);
  }
  return b;
}

bool MultiIndex::divides(const MultiIndex& nu) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > nu.exps_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.rank() != rank()) throw std::invalid_argument("multi-index rank mismatch");
  MultiIndex r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (other.rank() != rank()) throw std::invalid_argument("multi-index rank mismatch");
  if (!other.divides(*this)) throw std::invalid_argument("multi-index difference would be negative");
  MultiIndex r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  return exps_ <=> other.exps_;
}

std::string MultiIndex::label() const {
  if (exps_.size() == 1) return std::to_string(exps_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exps_[i]);
  }
  return s + ")";
}

namespace {

void fill_degree(std::vector<unsigned>& cur, std::size_t axis, unsigned remaining, std::vector<MultiIndex>& out) {
  if (axis + 1 == cur.size()) {
    cur[axis] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[axis] = e;
    fill_degree(cur, axis + 1, remaining - e, out);
  }
  cur[axis] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t rank, unsigned n) {
  std::vector<MultiIndex> out;
  if (rank == 0) return out;
  out.reserve(homogeneous_dimension(rank, n));
  std::vector<unsigned> cur(rank, 0);
  fill_degree(cur, 0, n, out);
  return out;
}

std::vector<MultiIndex> monomials_up_to_degree(std::size_t rank, unsigned n) {
  std::vector<MultiIndex> out;
  for (unsigned d = 0; d <= n; ++d) {
    auto block = monomials_of_degree(rank, d);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<MultiIndex> sub_indices(const MultiIndex& nu) {
  std::vector<MultiIndex> out{MultiIndex(nu.rank())};
  for (std::size_t i = 0; i < nu.rank(); ++i) {
    std::vector<MultiIndex> next;
    next.reserve(out.size() * (nu[i] + 1));
    for (const auto& rho : out) {
      for (unsigned e = 0; e <= nu[i]; ++e) {
        MultiIndex r = rho;
        r[i] = e;
        next.push_back(std::move(r));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::size_t homogeneous_dimension(std::size_t rank, unsigned n) {
  if (rank == 0) return 0;
  return binomial(static_cast<unsigned>(n + rank - 1), static_cast<unsigned>(rank - 1)).get_num().get_ui();
}

}  // namespace dunkl
