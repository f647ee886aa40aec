#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "scatter/ladder.hpp"
#include "scatter/ordinal.hpp"
#include "scatter/rational.hpp"

namespace scatter {

// Shared (r, delta) environment for the set and map constructions on [0,1]:
// caches powers of r and the delta' = delta + w ladder system behind the
// block sequences.  Immutable from the caller's point of view; internal
// caches fill idempotently.
class SpaceContext {
 public:
  SpaceContext(Rat r, Ordinal delta);

  const Rat& r() const { return r_; }
  const Ordinal& delta() const { return delta_; }

  // theorem_sequence(delta, alpha, n) against the cached ladder system.
  Ordinal alpha_n(const Ordinal& alpha, std::uint64_t n) const;

  const Rat& r_pow(std::uint32_t n) const;

  // s_n(x) = x/r^n + 1/r^n and its inverse.
  Rat s(std::uint32_t n, const Rat& x) const;
  Rat s_inv(std::uint32_t n, const Rat& x) const;

  // The unique n >= 1 with 1/r^n <= x <= 2/r^n, or 0 when x lies in no block.
  std::uint32_t block_of(const Rat& x) const;

 private:
  Rat r_;
  Ordinal delta_;
  LadderContext dprime_;
  mutable std::vector<Rat> pows_;
};

using ContextPtr = std::shared_ptr<const SpaceContext>;

inline ContextPtr make_context(Rat r, Ordinal delta) {
  return std::make_shared<SpaceContext>(std::move(r), std::move(delta));
}

}  // namespace scatter
