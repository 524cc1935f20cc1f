#pragma once

#include "dunkl/matrix.hpp"
#include "dunkl/multi_index.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/reflection_group.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace dunkl {

/// A positive root with its reflection and multiplicity, precomputed for
/// operator application.
struct PositiveRootTerm {
  Root alpha;
  Rational k;
  LinearMap reflection;
};

/// The pair (W, k) that parameterizes every operator in the library, plus a
/// lazily grown cache of per-monomial Dunkl images and per-degree intertwiner
/// matrices. Copies share the cache; entries are pure functions of (W, k), so
/// concurrent fills are idempotent.
class DunklContext {
 public:
  DunklContext(RootSystem rs, Multiplicity k);

  const RootSystem& root_system() const { return rs_; }
  const Multiplicity& multiplicity() const { return k_; }
  std::size_t rank() const { return rs_.rank; }
  const std::vector<PositiveRootTerm>& positive_terms() const { return terms_; }

  using MatrixPtr = std::shared_ptr<const RationalMatrix>;
  using ImagesPtr = std::shared_ptr<const std::vector<Polynomial>>;

  /// T_i x^nu for every axis i, cached per monomial.
  ImagesPtr monomial_images(const MultiIndex& nu, const std::function<std::vector<Polynomial>()>& build) const;

  enum class MatrixKind { intertwiner_inverse, intertwiner_forward };
  MatrixPtr degree_matrix(MatrixKind kind, unsigned degree, const std::function<RationalMatrix()>& build) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MultiIndex, ImagesPtr> images;
    std::map<std::pair<MatrixKind, unsigned>, MatrixPtr> matrices;
  };

  RootSystem rs_;
  Multiplicity k_;
  std::vector<PositiveRootTerm> terms_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace dunkl
