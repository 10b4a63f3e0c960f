#pragma once

// Solution counts of f = 0 over Z/p^i Z by direct enumeration, exact and
// budget-capped.  These are the ground truth the p-adic zeta predictions
// are checked against.

#include <monolab/mpoly.hpp>

#include <cstdint>
#include <vector>

namespace monolab {

struct CountSeries {
  long p = 2;
  bool restricted = false;            // only pairs congruent to (0,0) mod p
  std::vector<std::uint64_t> counts;  // counts[i-1] = #{(x,y) mod p^i : f = 0}
};

bool is_prime(long p);

// Counts for i = 1..imax on the integer-primitive representative of f (a
// rational constant factor has p-adic absolute value 1 at every good prime,
// so this is the canonical normalization).  `restricted` keeps only pairs
// congruent to (0,0) mod p.  Throws BadPrime for composite p and
// BudgetExceeded when p^(2*imax) exceeds the iteration budget.
CountSeries brute_force_counts(const MPoly& f, long p, int imax, bool restricted = false,
                               std::uint64_t budget = 1000000000ull);

// Single-loop reference implementation; brute_force_counts may parallelize
// the enumeration but must return bit-identical results.
CountSeries brute_force_counts_serial(const MPoly& f, long p, int imax, bool restricted = false,
                                      std::uint64_t budget = 1000000000ull);

}  // namespace monolab
