#pragma once

// Sparse multivariate polynomials over Q with exact arithmetic.
//
// Variables are kept as an ordered name list per polynomial; binary
// operations align the two lists first.  The global order is fixed
// (x, y, s-variables, T, t, L, p) so printing and term iteration are
// deterministic everywhere.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monolab/rat.hpp"

namespace monolab {

// Rank in the fixed global variable order; unknown names sort last,
// alphabetically among themselves.
int var_rank(const std::string& name);

struct MPoly {
  std::vector<std::string> vars;          // ordered by var_rank
  std::map<std::vector<int>, Rat> terms;  // exponent vector -> nonzero coefficient

  static MPoly zero() { return MPoly{}; }
  static MPoly constant(const Rat& c);
  static MPoly var(const std::string& name);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  // Drop variables that no longer occur.
  void prune();

  bool operator==(const MPoly& o) const { return vars == o.vars && terms == o.terms; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(const Rat& c, const MPoly& a);
MPoly mp_pow(const MPoly& a, unsigned e);

// Sum of exponents of the given variable across terms is its degree; -1 for 0.
int total_degree(const MPoly& a);             // max total degree, -1 if zero
int low_degree(const MPoly& a);               // min total degree, -1 if zero
int degree_in(const MPoly& a, const std::string& v);
MPoly homogeneous_part(const MPoly& a, int d);
inline MPoly lowest_form(const MPoly& a) { return homogeneous_part(a, low_degree(a)); }

// Multiplicity at the origin of the affine coordinates = lowest total degree.
inline int mult_at_origin(const MPoly& a) { return low_degree(a); }

MPoly derivative(const MPoly& a, const std::string& v);

// Substitution of a polynomial (or a constant) for one variable.
MPoly subst(const MPoly& a, const std::string& v, const MPoly& value);
MPoly subst(const MPoly& a, const std::string& v, const Rat& value);

// Full evaluation; every variable of a must be present in point.
Rat eval(const MPoly& a, const std::map<std::string, Rat>& point);

// View as a dense univariate polynomial in v with MPoly coefficients.
std::vector<MPoly> coeffs_in(const MPoly& a, const std::string& v);
MPoly from_coeffs_in(const std::string& v, const std::vector<MPoly>& coeffs);

// Rational content: positive c with a/c integer-primitive; sign chosen so the
// leading coefficient in the highest-ranked variable of a/signed_content is
// positive (keeps curve factors monic-in-y: y^2-x^3, not x^3-y^2).
Rat content(const MPoly& a);           // > 0, or 0 for the zero polynomial
Rat signed_content(const MPoly& a);    // content with the leading sign
MPoly primitive_part(const MPoly& a);  // a / signed_content(a)

// Exact division; nullopt if b does not divide a.  b must be nonzero.
std::optional<MPoly> divexact(const MPoly& a, const MPoly& b);

// Primitive gcd (lex-leading coefficient positive); gcd(0,0) = 0.
MPoly gcd_poly(const MPoly& a, const MPoly& b);

// Resultant with respect to v (Sylvester determinant, fraction-free).
MPoly resultant(const MPoly& a, const MPoly& b, const std::string& v);

// f = prod_k out[k].first ^ out[k].second * c with the factors squarefree and
// pairwise coprime, c a rational constant returned as the last entry with
// exponent 0 when != 1.  Characteristic-zero Yun-style splitting.
std::vector<std::pair<MPoly, int>> squarefree_split(const MPoly& f);
MPoly squarefree_part(const MPoly& f);

// Rational roots of a nonzero univariate polynomial, with multiplicities,
// sorted ascending.  Also returns (via remainder_degree) the degree of the
// root-free cofactor, so callers can detect irrational roots.
struct RationalRoots {
  std::vector<std::pair<Rat, int>> roots;
  int remainder_degree = 0;  // degree of the cofactor with no rational roots
};
RationalRoots upoly_rational_roots(const MPoly& a);

// Deterministic text form; ascending total degree, then lex-descending
// exponents.  Output re-parses under the CLI grammar.
std::string to_string(const MPoly& a);

}  // namespace monolab
