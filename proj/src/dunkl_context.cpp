#include "dunkl/dunkl_context.hpp"

namespace dunkl {

DunklContext::DunklContext(RootSystem rs, Multiplicity k)
    : rs_(std::move(rs)), k_(std::move(k)), cache_(std::make_shared<Cache>()) {
  if (k_.orbits().empty() && !rs_.roots.empty()) {
    throw InvalidMultiplicityError("multiplicity was not built for this root system");
  }
  for (std::size_t i = 0; i < rs_.positive_roots.size(); ++i) {
    const Root& alpha = rs_.positive_roots[i];
    terms_.push_back({alpha, k_(alpha), rs_.reflections[i]});
  }
}

DunklContext::ImagesPtr DunklContext::monomial_images(const MultiIndex& nu,
                                                      const std::function<std::vector<Polynomial>()>& build) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->images.find(nu); it != cache_->images.end()) return it->second;
  }
  auto value = std::make_shared<const std::vector<Polynomial>>(build());
  std::lock_guard lock(cache_->mutex);
  return cache_->images.try_emplace(nu, std::move(value)).first->second;
}

DunklContext::MatrixPtr DunklContext::degree_matrix(MatrixKind kind, unsigned degree,
                                                    const std::function<RationalMatrix()>& build) const {
  const auto key = std::make_pair(kind, degree);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->matrices.find(key); it != cache_->matrices.end()) return it->second;
  }
  auto value = std::make_shared<const RationalMatrix>(build());
  std::lock_guard lock(cache_->mutex);
  return cache_->matrices.try_emplace(key, std::move(value)).first->second;
}

}  // namespace dunkl
