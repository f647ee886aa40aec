#include "scatter/ladder.hpp"

#include <algorithm>

namespace scatter {

namespace {

// Drops the trailing finite term, leaving zero or a limit ordinal.
Ordinal limit_part(const Ordinal& a) {
  if (!a.is_successor()) return a;
  Ordinal out;
  for (const auto& t : a.terms()) {
    if (t.exponent.is_zero()) break;
    out = add(out, Ordinal::omega_pow(t.exponent, t.coefficient));
  }
  return out;
}

// For lambda = a' + w (last term exponent 1), returns a'.
Ordinal minus_omega(const Ordinal& lambda) {
  Ordinal out;
  const auto& terms = lambda.terms();
  for (std::size_t i = 0; i + 1 < terms.size(); ++i)
    out = add(out, Ordinal::omega_pow(terms[i].exponent, terms[i].coefficient));
  if (terms.back().coefficient > 1)
    out = add(out, Ordinal::omega_pow(terms.back().exponent, terms.back().coefficient - 1));
  return out;
}

}  // namespace

LadderContext::LadderContext(Ordinal top) : top_(std::move(top)), lambda_(limit_part(top_)) {
  if (!lambda_.is_limit())
    throw std::domain_error("ladder top must be at least w: " + print_ordinal(top_));
  plus_omega_ = lambda_.terms().back().exponent == Ordinal::nat(1);
  if (plus_omega_) alpha_prime_ = minus_omega(lambda_);
}

const Ordinal& LadderContext::fs(std::uint64_t i) const {
  while (fs_.size() <= i)
    fs_.push_back(fs_.empty() ? Ordinal() : fundamental_sequence(lambda_, fs_.size()));
  return fs_[i];
}

const LadderContext& LadderContext::child(const Ordinal& sub_top) const {
  auto it = children_.find(sub_top);
  if (it == children_.end())
    it = children_.emplace(sub_top, std::make_unique<LadderContext>(sub_top)).first;
  return *it->second;
}

Ordinal LadderContext::rung(const Ordinal& beta, std::uint64_t n) const {
  if (!beta.is_limit())
    throw std::domain_error("ladder rung requires a limit ordinal: " + print_ordinal(beta));
  if (beta > top_)
    throw std::domain_error("ladder rung out of range: " + print_ordinal(beta) + " > " +
                            print_ordinal(top_));
  auto key = std::make_pair(beta, n);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Ordinal value;
  if (plus_omega_) {
    // Limit ordinals below a' + w lie in [w, a'].
    value = beta == lambda_ ? add(alpha_prime_, Ordinal::nat(n))
                            : child(alpha_prime_).rung(beta, n);
  } else if (beta == lambda_) {
    value = fs(n);
  } else {
    std::uint64_t i = 1;
    while (fs(i) < beta) ++i;  // terminates: sup fs = lambda > beta
    const Ordinal& below = fs(i - 1);
    Ordinal cbar = std::max(below, child(fs(i)).rung(beta, n));
    value = std::min(fs(n), cbar);
  }
  memo_.emplace(std::move(key), value);
  return value;
}

Ordinal theorem_sequence(const Ordinal& delta, const Ordinal& alpha, std::uint64_t n) {
  if (alpha > delta)
    throw std::domain_error("theorem sequence requires alpha <= delta");
  LadderContext ctx(add(delta, Ordinal::omega()));
  return ctx.rung(alpha.is_limit() ? alpha : add(alpha, Ordinal::omega()), n);
}

}  // namespace scatter
