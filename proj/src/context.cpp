#include "scatter/context.hpp"

namespace scatter {

SpaceContext::SpaceContext(Rat r, Ordinal delta)
    : r_(std::move(r)), delta_(std::move(delta)), dprime_(add(delta_, Ordinal::omega())) {
  if (r_ <= 3) throw std::invalid_argument("scale ratio must exceed 3, got " + fraction_string(r_));
  pows_.push_back(Rat(1));
}

Ordinal SpaceContext::alpha_n(const Ordinal& alpha, std::uint64_t n) const {
  if (alpha > delta_) throw std::domain_error("block sequence requires alpha <= delta");
  return dprime_.rung(alpha.is_limit() ? alpha : add(alpha, Ordinal::omega()), n);
}

const Rat& SpaceContext::r_pow(std::uint32_t n) const {
  while (pows_.size() <= n) pows_.push_back(pows_.back() * r_);
  return pows_[n];
}

Rat SpaceContext::s(std::uint32_t n, const Rat& x) const { return (x + 1) / r_pow(n); }

Rat SpaceContext::s_inv(std::uint32_t n, const Rat& x) const { return x * r_pow(n) - 1; }

std::uint32_t SpaceContext::block_of(const Rat& x) const {
  if (x <= 0) return 0;
  for (std::uint32_t n = 1;; ++n) {
    const Rat& p = r_pow(n);
    if (Rat(1) / p <= x) return x <= Rat(2) / p ? n : 0;
  }
}

}  // namespace scatter
