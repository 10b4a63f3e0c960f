#pragma once

// Igusa zeta functions over Q_p through the stored resolution: the explicit
// stratified formula, reduction-quality checks for the prime, and the
// Poincare-series bridge that turns the zeta function back into solution
// counts mod p^i so it can be checked against brute-force enumeration.

#include <monolab/counting.hpp>
#include <monolab/ratfunc.hpp>
#include <monolab/resolve.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace monolab {

// Reduction quality of the stored resolution at a fixed prime.  `failures`
// make the data unusable mod p (denef_zeta refuses to run); `suspects` are
// conservative warnings: the formula is evaluated anyway, but a count
// mismatch at such a prime is expected behavior, not a bug.  The check may
// flag primes that are actually fine; it never silently accepts a prime the
// stored data cannot vouch for.
struct GoodPrimeReport {
  long p = 0;
  std::vector<std::string> failures;
  std::vector<std::string> suspects;
  bool usable() const { return failures.empty(); }
  bool clean() const { return failures.empty() && suspects.empty(); }
};

GoodPrimeReport good_prime_check(const ResolutionGraph& g, long p);

// One stratum of the formula: the components cutting it out and the number
// of its F_p-points -- a polynomial in "p" for combinatorial strata, a
// constant when the count came from enumeration.
struct DenefTerm {
  std::vector<int> comps;
  MPoly count;
};

// Z(f; s) = p^-2 sum_I #E_I^o(F_p) prod_{i in I} (p-1)/(p^{nu_i + N_i s} - 1),
// written in T = p^-s: each factor reads (p-1) T^N / (p^nu - T^N), the
// T-power unit having been absorbed into the numerator.  Germ graphs keep p
// symbolic (every stratum count is a polynomial in p); global graphs are
// evaluated at the given prime because strict-transform counts come from
// enumeration.  num/den is the expansion over the common denominator with
// common factors cancelled exactly.
struct PadicZeta {
  long p = 0;
  bool local = true;
  bool symbolic = true;
  std::vector<DenefTerm> terms;
  std::map<int, std::pair<Int, Int>> data;  // component id -> (nu, N)
  MPoly num;                                // vars {"p","T"}, or {"T"} when evaluated
  long pshift = -2;                         // overall factor p^pshift
  std::map<std::pair<Int, Int>, int> den;   // (nu, N) -> exponent of (p^nu - T^N)
};

// pre: good_prime_check(g, p).usable(); throws BadPrime otherwise.  Local
// (germ) graphs give the integral over pairs congruent to the base point,
// global graphs the integral over Z_p^2.
PadicZeta denef_zeta(const ResolutionGraph& g, long p);

// Exact coefficients of Z as a power series in T, up to and including T^imax.
std::vector<Rat> series_in_T(const PadicZeta& z, int imax);

// Solution counts mod p^i, i = 1..imax, predicted by the zeta function via
// T Z = (T - 1) P(T) + V0 where P(T) = sum_i c_i p^{-2i} T^i starts at
// V0 = 1 (global) resp. p^-2 (local).  Fractional entries mean the formula
// broke down at this prime; callers compare against brute_force_counts.
std::vector<Rat> predicted_counts(const PadicZeta& z, int imax);

// p -> 1 heuristic on a symbolic local zeta: stratum counts at p = 1 turn
// into Euler characteristics and each factor degenerates to 1/(nu + N s),
// which is the topological zeta function.
RatFunc padic_to_topological(const PadicZeta& z);

// End-to-end consistency check: resolve f, evaluate the formula, convert to
// predicted counts, compare with enumeration -- globally and, when f
// vanishes at the origin, for the germ there.  Never silent: every suspect
// flag and every mismatch lands in `notes`.
struct PadicVerify {
  long p = 0;
  int imax = 0;
  bool ok = false;
  std::vector<Rat> predicted_global, actual_global;
  std::vector<Rat> predicted_local, actual_local;
  std::vector<std::string> notes;
};

PadicVerify verify_padic(const MPoly& f, long p, int imax,
                         std::uint64_t budget = 1000000000ull);

std::string to_string(const PadicZeta& z);

}  // namespace monolab
