#pragma once

// Topological zeta functions of a resolved curve system, with character,
// differential-form, and multivariate variants, pole/residue reports, and
// the germ-local naive motivic zeta function.  Everything is assembled from
// the stratified definition
//
//   Z = sum_{I subset of components} chi(E_I deg) prod_{i in I} 1/(nu_i+N_i s)
//
// with strata intersected with the fiber over the base point in local mode.
// Working from the stratification (rather than the closed dim-2 display)
// means identity resolutions of smooth or normal-crossing germs need no
// special casing.

#include <monolab/ratfunc.hpp>
#include <monolab/resolve.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monolab {

struct ZetaOptions {
  // Must agree with the mode of the resolution graph (a germ graph carries
  // fiber data, an affine graph carries Euler data; neither can stand in for
  // the other).
  bool local = true;
  // Keep only strata whose components all satisfy d | N.  d = 1 is the
  // plain zeta function.
  int character_order = 1;
  // Label of the factor g acting as the differential form g dx^dy.  The
  // label is removed from the N side and its divisor multiplicities are
  // added to nu instead: nu_j(omega) = nu_j(dx) + N_j(g).
  std::optional<std::string> form;
  // Multivariate runs only: label -> s-variable index (1-based).  Empty
  // means one variable per label in label order; labels may share an index.
  std::map<std::string, int> weights;
};

// One pole of a single-variable zeta: exact location, order, and leading
// Laurent coefficient (the residue when order == 1).  `contributors` names
// the components with -nu/N at the pole when the report was made against a
// resolution graph; it is empty otherwise.
struct PoleEntry {
  Rat pole;
  int order = 1;
  Rat leading;
  std::vector<int> contributors;
};

struct PoleReport {
  std::vector<PoleEntry> entries;  // ascending by location
};

// One stratum of the motivic zeta: component ids of I and the class of the
// open stratum E_I deg as a polynomial in L (a point count: L + 1 - valence
// for an exceptional curve, a constant for finitely many points).
struct MotivicStratum {
  std::vector<int> comps;
  MPoly cls;  // variable "L"
};

// Germ-local naive motivic zeta function
//   L^{-2} sum_I [E_I deg] prod_{i in I} (L-1) T^{N_i} / (L^{nu_i} - T^{N_i})
// kept stratified (terms) and expanded over the common denominator: the
// function equals L^lshift * num / prod (L^nu - T^N)^e with num an integer
// polynomial in L and T.  (L^nu - T^N) is the unit-cleared spelling of the
// usual factor 1 - L^{-nu} T^N.
struct MotivicRat {
  std::vector<MotivicStratum> terms;
  std::map<int, std::pair<Int, Int>> data;  // component id -> (nu, N)
  MPoly num;                                // variables {"L", "T"}
  long lshift = 0;
  std::map<std::pair<Int, Int>, int> den;   // (nu, N) -> exponent
};

// The topological zeta function of the resolved system, one variable "s".
// Errors: MissingEulerData in global mode without strict-stratum chi values;
// ZeroLinForm if a contributing component has nu = N = 0; Unsupported when
// the options contradict the graph mode or name an unknown form label.
RatFunc zeta_top(const ResolutionGraph& g, const ZetaOptions& opts = {});

struct MultiZeta {
  RatFunc zeta;                // variables s1..sk ("s" when k == 1)
  std::vector<LinForm> polar;  // denominator factors surviving normalization
};

// Multivariate zeta over one s-variable per label (or per the weights map);
// the polar locus is certified by exact normalization.
MultiZeta zeta_top_multi(const ResolutionGraph& g, const ZetaOptions& opts = {});

// Pole locations, orders, and leading Laurent coefficients of a
// single-variable rational function (normalized internally first).
PoleReport poles(const RatFunc& r);

// Same report with contributors matched against -nu/N of the components of
// g, nu and N adjusted per opts.
PoleReport poles(const RatFunc& r, const ResolutionGraph& g,
                 const ZetaOptions& opts);

// Residue contribution (1/N_j)(2 - r + sum_i 1/alpha_i) of an exceptional
// component, alpha_i = nu_i - (nu_j/N_j) N_i over the r neighbor points.
// Errors: SharedRatio when a neighbor has the same nu/N ratio.
Rat component_residue(const ResolutionGraph& g, int j);

// Naive motivic zeta of a germ resolution (germ-local only).
MotivicRat zeta_motivic_local(const ResolutionGraph& g);

// Term-wise topological specialization: [E_I deg] evaluated at L = 1 (that
// is chi), each factor mapped to 1/(nu + N s).
RatFunc motivic_to_topological(const MotivicRat& z);

std::string to_string(const MotivicRat& z);

}  // namespace monolab
