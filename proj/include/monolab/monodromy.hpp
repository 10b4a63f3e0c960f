#pragma once

// Monodromy invariants read off the resolution: the zeta function of the
// monodromy, the characteristic polynomial on H^1 of the Milnor fibre at an
// isolated singularity, root-of-unity eigenvalue orders near the base
// point, and log canonical thresholds.

#include <monolab/resolve.hpp>
#include <monolab/unityrat.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace monolab {

// Eigenvalues are kept as orders of roots of unity (every eigenvalue is one),
// never as floating-point numbers.  provenance records where each order came
// from: "zeta-zero" / "zeta-pole" for nonzero cyclotomic multiplicity in the
// monodromy zeta at the base point, "smooth-point-P0" for divisors of a
// branch multiplicity (eigenvalues at nearby smooth points).
struct EigenvalueSet {
  std::set<long> orders;
  std::map<long, std::string> provenance;
};

struct LctValue {
  Rat value;
  std::vector<int> achieved_by;  // component ids attaining the minimum
};

// zeta function of the monodromy: prod_j (t^{N_j} - 1)^{-chi(E_j deg)} with
// the strata cut to the fiber over the base point on germ graphs and taken
// whole on global graphs (Euler data required there).
UnityRat acampo_zeta(const ResolutionGraph& g);

// (t - 1) * acampo_zeta: the characteristic polynomial of the monodromy on
// H^1 at an isolated singularity.  Throws NotIsolated for non-reduced germs
// (some branch carries total multiplicity >= 2).
UnityRat char_poly_P1(const ResolutionGraph& g);

// Orders of eigenvalues appearing at the base point or at points close to
// it: nonzero cyclotomic multiplicities of the zeta function together with
// all divisors of each branch multiplicity.
EigenvalueSet eigenvalue_orders_near(const ResolutionGraph& g);

// min nu_j / N_j over the components with N > 0, with the achieving set.
LctValue lct(const ResolutionGraph& g);

}  // namespace monolab
