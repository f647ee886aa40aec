#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scatter {

// Ordinals below epsilon_0 in Cantor normal form: a finite sum
// w^e1*c1 + ... + w^ek*ck with e1 > e2 > ... > ek and every ci >= 1.
// The empty sum is zero. Exponents are ordinals themselves.
class Ordinal {
 public:
  struct Term;  // completed below: exponents are ordinals themselves

  Ordinal() = default;  // zero

  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();
  static Ordinal omega_pow(const Ordinal& exponent, std::uint64_t coefficient = 1);

  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_successor() const;
  bool is_limit() const;
  bool is_finite() const;

  // Finite value of a finite ordinal; throws std::domain_error otherwise.
  std::uint64_t nat_value() const;

  // One less; throws std::domain_error unless is_successor().
  Ordinal predecessor() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

 private:
  friend Ordinal add(const Ordinal& a, const Ordinal& b);
  static int compare(const Ordinal& a, const Ordinal& b);
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

inline bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}
inline bool Ordinal::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}
inline bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

enum class OrdinalKind { zero, successor, limit };

OrdinalKind classify(const Ordinal& a);

// Ordinal addition (absorbs terms of a below the leading exponent of b).
Ordinal add(const Ordinal& a, const Ordinal& b);
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }

// Canonical fundamental sequence of a limit ordinal: a_0 = 0, and for n >= 1
//   g + w^(b+1)  |->  g + w^b * n
//   g + w^l      |->  g + w^(fundamental_sequence(l, n))   (l a limit)
// where g + w^e is `a` with one copy of its last term split off.
// Strictly increasing in n with supremum a. Throws unless a is a limit.
Ordinal fundamental_sequence(const Ordinal& a, std::uint64_t n);

struct ordinal_parse_error : std::runtime_error {
  ordinal_parse_error(std::size_t position, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

// Grammar:  sum := term ('+' term)* ; term := 'w' ('^' factor)? ('*' nat)? | nat ;
// factor := nat | 'w' | '(' sum ')'.  Non-CNF input ("1+w") is normalized via add.
Ordinal parse_ordinal(std::string_view text);

// Canonical form, e.g. "w^2*3+w+1", "w^(w+1)", "0".
std::string print_ordinal(const Ordinal& a);

}  // namespace scatter
