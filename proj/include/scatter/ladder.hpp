#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "scatter/ordinal.hpp"

namespace scatter {

// Monotone ladder system in `top`: rung(beta, n) = c_n(beta) for every limit
// beta <= top.  Three-case recursion:
//   top = a' + w:            c_n(top) = a' + n,  c_n(beta) recurses into a'
//   top a limit of limits:   pick the canonical fundamental sequence {a_i},
//                            c_n(top) = a_n, and for a_{i0} < beta <= a_{i0+1}
//                            c_n(beta) = min(a_n, max(a_{i0}, rung in a_{i0+1}))
// Values are memoized per context; sub-ladders are cached children.
// A successor top >= w is accepted by dropping its finite tail.
class LadderContext {
 public:
  explicit LadderContext(Ordinal top);

  const Ordinal& top() const { return top_; }

  // c_n^top(beta).  Throws std::domain_error if beta is not a limit ordinal
  // or beta > top.
  Ordinal rung(const Ordinal& beta, std::uint64_t n) const;

 private:
  const Ordinal& fs(std::uint64_t i) const;
  const LadderContext& child(const Ordinal& sub_top) const;

  Ordinal top_;
  Ordinal lambda_;        // top with any finite tail removed
  bool plus_omega_;       // lambda = alpha_prime + w
  Ordinal alpha_prime_;   // only when plus_omega_
  mutable std::vector<Ordinal> fs_;  // canonical fundamental sequence of lambda
  mutable std::map<std::pair<Ordinal, std::uint64_t>, Ordinal> memo_;
  mutable std::map<Ordinal, std::unique_ptr<LadderContext>> children_;
};

inline Ordinal ladder(const LadderContext& ctx, const Ordinal& beta, std::uint64_t n) {
  return ctx.rung(beta, n);
}

// The block sequence {alpha_n} used by the set and map constructions, built
// inside delta' = delta + w: limit alpha uses c_n(alpha) directly, successor
// (and zero) alpha rides c_n(alpha + w).  Requires alpha <= delta.
Ordinal theorem_sequence(const Ordinal& delta, const Ordinal& alpha, std::uint64_t n);

}  // namespace scatter
