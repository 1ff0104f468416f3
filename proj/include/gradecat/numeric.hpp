#ifndef GRADECAT_NUMERIC_HPP
#define GRADECAT_NUMERIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gradecat/errors.hpp"

namespace gradecat {

using Int = mpz_class;
using Rat = mpq_class;

/* mpq_class(n, d) does not canonicalize; always build rationals through this. */
Rat make_rat(const Int& num, const Int& den);
Rat parse_rat(const std::string& s);      // "-3/4", "7"
std::string rat_str(const Rat& q);        // canonical "n" or "n/d"
std::string int_str(const Int& z);

/* Ground field of a presented category: the rationals or a prime field F_p.
 * Scalars are carried as canonical mpq_class values; over F_p a scalar is an
 * integer residue in [0, p) with denominator 1. */
struct Field {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  Int p = 0;

  static Field rationals() { return Field{}; }
  static Field prime(const Int& p);

  bool operator==(const Field&) const = default;

  Rat normalize(const Rat& x) const;
  Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
  Rat neg(const Rat& a) const { return normalize(-a); }
  Rat inv(const Rat& a) const;  // throws on zero
  Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }
  bool is_zero(const Rat& a) const { return normalize(a) == 0; }
  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  std::string str() const;
};

bool is_probable_prime(const Int& n);

}  // namespace gradecat

#endif
