#pragma once

// Exact scalar arithmetic.  Int/Rat are GMP-backed; Rat is always kept in
// canonical form (denominator > 0, gcd(num, den) = 1), which mpq_class
// guarantees as long as values are built through the helpers below.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace monolab {

using Int = mpz_class;
using Rat = mpq_class;

// a/b with canonicalization; b must be nonzero.
Rat make_rat(const Int& a, const Int& b);

inline const Int& num(const Rat& q) { return q.get_num(); }
inline const Int& den(const Rat& q) { return q.get_den(); }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int int_pow(const Int& a, unsigned long e);
Rat rat_pow(const Rat& a, long e);  // negative e allowed for nonzero a

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);

// All positive divisors of |n| (trial division), ascending.  n must be nonzero.
std::vector<Int> divisors(const Int& n);

// Deterministic plain strings: integers as-is, fractions as "a/b".
std::string to_string(const Int& n);
std::string to_string(const Rat& q);

// Parse "a" or "a/b" (optional leading sign); throws std::invalid_argument.
Rat parse_rat(const std::string& s);

long to_long(const Int& n);  // throws std::overflow_error if it does not fit

// Error taxonomy shared across the library.  Code names are part of the
// public contract (tests and the CLI match on them).
enum class errc {
  NotAGerm,
  NonRationalCenter,
  NonRationalInfinity,
  BudgetExceeded,
  BadPrime,
  MissingEulerData,
  ZeroLinForm,
  SharedRatio,
  NotIsolated,
  SyntaxError,
  UnknownVariable,
  Unsupported,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(name(code) + std::string(": ") + what), code_(code) {}
  errc code() const { return code_; }
  static const char* name(errc c);

 private:
  errc code_;
};

}  // namespace monolab
