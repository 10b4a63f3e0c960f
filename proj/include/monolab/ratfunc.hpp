#pragma once

// Rational functions whose denominators are multisets of integer linear
// forms.  This is the shape every zeta function here takes; keeping the
// denominator factored (never expanded) is what makes pole bookkeeping and
// cancellation exact.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monolab/linform.hpp"
#include "monolab/mpoly.hpp"
#include "monolab/rat.hpp"

namespace monolab {

struct RatFunc {
  std::vector<std::string> vnames;  // variables the forms refer to, e.g. {"s"}
  MPoly num;                        // polynomial in vnames
  std::map<LinForm, int> den;       // canonical form -> positive exponent

  static RatFunc zero(std::vector<std::string> vnames);
  static RatFunc from_constant(std::vector<std::string> vnames, const Rat& c);
  // chi / prod factors
  static RatFunc term(std::vector<std::string> vnames, const Rat& chi,
                      const std::vector<LinForm>& factors);

  bool is_zero() const { return num.is_zero(); }
};

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const Rat& c, const RatFunc& a);

// Cancel denominator factors that divide the numerator exactly; idempotent.
RatFunc normalize(const RatFunc& r);

// Exact equality as rational functions (cross-multiplication).
bool rf_equal(const RatFunc& a, const RatFunc& b);

// nullopt when a denominator factor vanishes at the point.
std::optional<Rat> rf_eval(const RatFunc& r, const std::vector<Rat>& point);

// Deterministic display, e.g. "(8+7s)/((1+s)(8+15s))".
std::string to_string(const RatFunc& r);

// Power-series coefficients around 0 in the single variable, length n+1.
// Errors "non-expandable at origin" when a factor has zero constant term.
std::vector<Rat> series_expand(const RatFunc& r, int order);

struct PolePoint {
  Rat s0;
  int order = 0;
  Rat leading;  // residue for order 1, leading Laurent coefficient otherwise
};

// Poles of a single-variable rational function, ascending by location.
// The input is normalized internally first.
std::vector<PolePoint> pole_data(const RatFunc& r);

}  // namespace monolab
