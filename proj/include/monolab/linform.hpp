#pragma once

// Integer linear forms c0 + sum_i cs[i] * v_i used as denominator factors of
// zeta functions (v_i are s-variables, or T for series work).  The form does
// not store variable names; the owning RatFunc supplies them.

#include <string>
#include <vector>

#include "monolab/mpoly.hpp"
#include "monolab/rat.hpp"

namespace monolab {

struct LinForm {
  Int c0;
  std::vector<Int> cs;

  LinForm() : c0(0) {}
  LinForm(Int constant, std::vector<Int> coeffs)
      : c0(std::move(constant)), cs(std::move(coeffs)) {}

  bool is_zero() const;
  bool is_constant() const;

  // Divide by the gcd of all entries and make the first nonzero entry
  // positive; returns the rational factor r with *this_old = r * this_new.
  Rat canonicalize();

  Rat eval(const std::vector<Rat>& point) const;
  MPoly to_mpoly(const std::vector<std::string>& vnames) const;
  std::string to_string(const std::vector<std::string>& vnames) const;

  bool operator<(const LinForm& o) const;
  bool operator==(const LinForm& o) const;
};

bool proportional(const LinForm& a, const LinForm& b);

}  // namespace monolab
