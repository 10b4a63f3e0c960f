#pragma once

// Finite products prod_N (t^N - 1)^{e_N} with integer exponents: the shape of
// A'Campo zeta functions and characteristic polynomials.  Regrouping into
// cyclotomic factors is exact Moebius inversion over the divisor lattice.

#include <map>
#include <string>
#include <vector>

#include "monolab/mpoly.hpp"
#include "monolab/rat.hpp"

namespace monolab {

struct UnityRat {
  std::map<long, int> exps;  // N -> e_N, zero entries absent; N >= 1

  static UnityRat one() { return {}; }
  void mul_factor(long N, int e);  // multiply by (t^N - 1)^e
};

UnityRat operator*(const UnityRat& a, const UnityRat& b);

// Multiplicity of each cyclotomic polynomial Phi_l; zero entries omitted.
std::map<long, int> cyclo_multiplicities(const UnityRat& u);

// All multiplicities nonnegative, i.e. the product is a polynomial.
bool is_polynomial(const UnityRat& u);

// Degree as a rational function: sum e_N * N.
long degree(const UnityRat& u);

// Number of zeroes counted with multiplicity when polynomial: sum_{m>0} m*phi(l).
long zero_count(const UnityRat& u);

// Expanded numerator and denominator (denominator = 1 when polynomial).
std::pair<MPoly, MPoly> expand(const UnityRat& u);

// Evaluate at t0; throws std::domain_error when a denominator factor vanishes.
Rat eval(const UnityRat& u, const Rat& t0);

// "(t^15-1)/((t^3-1)(t^5-1))", factors by ascending N; "1" for the empty product.
std::string to_string(const UnityRat& u);

long euler_phi(long n);

// Phi_n as a dense polynomial in t (computed by iterated exact division).
MPoly cyclotomic_poly(long n);

// Inverse of cyclo_multiplicities: rebuild (t^N-1)-exponents from
// Phi-multiplicities; throws std::invalid_argument when no finite product exists.
UnityRat from_cyclo_multiplicities(const std::map<long, int>& m);

}  // namespace monolab
