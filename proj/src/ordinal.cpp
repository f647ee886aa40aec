#include "scatter/ordinal.hpp"

#include <cctype>
#include <limits>

namespace scatter {

Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal a;
  if (n > 0) a.terms_.push_back({Ordinal(), n});
  return a;
}

Ordinal Ordinal::omega() { return omega_pow(nat(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent, std::uint64_t coefficient) {
  Ordinal a;
  if (coefficient == 0) return a;
  if (exponent.is_zero()) return nat(coefficient);
  a.terms_.push_back({exponent, coefficient});
  return a;
}

std::uint64_t Ordinal::nat_value() const {
  if (!is_finite()) throw std::domain_error("ordinal is not finite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw std::domain_error("ordinal is not a successor");
  Ordinal a = *this;
  if (--a.terms_.back().coefficient == 0) a.terms_.pop_back();
  return a;
}

int Ordinal::compare(const Ordinal& a, const Ordinal& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(a.terms_[i].exponent, b.terms_[i].exponent);
    if (c != 0) return c;
    if (a.terms_[i].coefficient != b.terms_[i].coefficient)
      return a.terms_[i].coefficient < b.terms_[i].coefficient ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

OrdinalKind classify(const Ordinal& a) {
  if (a.is_zero()) return OrdinalKind::zero;
  return a.is_successor() ? OrdinalKind::successor : OrdinalKind::limit;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms()[0].exponent;
  Ordinal out;
  for (const auto& t : a.terms()) {
    if (t.exponent < lead) break;
    out.terms_.push_back(t);
  }
  std::size_t from = 0;
  if (!out.terms_.empty() && out.terms_.back().exponent == lead) {
    out.terms_.back().coefficient += b.terms()[0].coefficient;
    from = 1;
  }
  for (std::size_t i = from; i < b.terms().size(); ++i) out.terms_.push_back(b.terms()[i]);
  return out;
}

Ordinal fundamental_sequence(const Ordinal& a, std::uint64_t n) {
  if (!a.is_limit()) throw std::domain_error("fundamental sequence requires a limit ordinal");
  if (n == 0) return Ordinal();
  const Ordinal::Term& last = a.terms().back();
  Ordinal prefix;  // a with one copy of w^last.exponent removed
  for (std::size_t i = 0; i + 1 < a.terms().size(); ++i)
    prefix = add(prefix, Ordinal::omega_pow(a.terms()[i].exponent, a.terms()[i].coefficient));
  if (last.coefficient > 1)
    prefix = add(prefix, Ordinal::omega_pow(last.exponent, last.coefficient - 1));
  if (last.exponent.is_successor())
    return add(prefix, Ordinal::omega_pow(last.exponent.predecessor(), n));
  return add(prefix, Ordinal::omega_pow(fundamental_sequence(last.exponent, n)));
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  std::uint64_t nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ordinal_parse_error(pos, "expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::uint64_t d = static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
        throw ordinal_parse_error(pos, "number too large");
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }

  Ordinal factor() {
    skip_ws();
    if (eat('(')) {
      Ordinal inner = sum();
      if (!eat(')')) throw ordinal_parse_error(pos, "expected ')'");
      return inner;
    }
    if (eat('w')) return Ordinal::omega();
    return Ordinal::nat(nat());
  }

  Ordinal term() {
    skip_ws();
    if (eat('w')) {
      Ordinal exponent = Ordinal::nat(1);
      if (eat('^')) exponent = factor();
      std::uint64_t coefficient = 1;
      if (eat('*')) {
        coefficient = nat();
        if (coefficient == 0) throw ordinal_parse_error(pos, "coefficient must be positive");
      }
      return Ordinal::omega_pow(exponent, coefficient);
    }
    return Ordinal::nat(nat());
  }

  Ordinal sum() {
    Ordinal total = term();
    while (true) {
      skip_ws();
      if (!eat('+')) break;
      total = add(total, term());
    }
    return total;
  }
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  Parser p{text};
  Ordinal a = p.sum();
  p.skip_ws();
  if (p.pos != text.size()) throw ordinal_parse_error(p.pos, "trailing input");
  return a;
}

std::string print_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal::nat(1)) {
      out += '^';
      bool bare = t.exponent.is_finite() || t.exponent == Ordinal::omega();
      if (bare) {
        out += print_ordinal(t.exponent);
      } else {
        out += '(';
        out += print_ordinal(t.exponent);
        out += ')';
      }
    }
    if (t.coefficient != 1) {
      out += '*';
      out += std::to_string(t.coefficient);
    }
  }
  return out;
}

}  // namespace scatter
