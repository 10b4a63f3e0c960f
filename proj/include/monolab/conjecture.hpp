#pragma once

// Mechanical verifiers for the curve-case conjectures and structure theorems:
// the monodromy conjecture (every pole of the topological zeta function
// induces a monodromy eigenvalue), the holomorphy conjecture for character
// twists, the numerical relations and inequalities at exceptional components,
// the determination of the pole set from the dual graph, and the shape and
// monotonicity of the locus where nu/N is minimal.  Verdicts apply to the
// given input only; the checks verify, they do not prove.

#include <monolab/curve.hpp>
#include <monolab/ratfunc.hpp>
#include <monolab/resolve.hpp>

#include <optional>
#include <string>
#include <vector>

namespace monolab {

struct CheckReport {
  enum class Verdict { pass, fail, inapplicable };

  std::string name;
  Verdict verdict = Verdict::pass;
  // One line per verified item (per pole, per component); on fail the lines
  // carry the full counterexample: input, numerical data, offending value.
  std::vector<std::string> witnesses;

  bool ok() const { return verdict != Verdict::fail; }
};

std::string to_string(CheckReport::Verdict v);

// The locus M where nu/N is minimal in the dual graph of a minimal germ
// resolution, its shape per the structure theorem, and the monotone growth
// of nu/N along paths leaving it.
struct MinLocusReport {
  std::vector<int> locus;  // component ids attaining the minimum, ascending
  // "single-node-star", "chain-between-nodes", "strict-edge" or
  // "strict-chain"; empty when the germ is already normal crossings (the
  // theorem excludes that case).
  std::string shape;
  bool connected = true;
  bool monotone = true;
  // The order-2 pole of the local zeta function when there is one: it must
  // be minus the log canonical threshold and of the form -1/k.
  std::optional<Rat> order2_pole;
  bool order2_ok = true;
};

// For every pole -c/d of the topological zeta function of c (local at the
// base point, or global), verify that a primitive d-th root of unity is a
// monodromy eigenvalue: near the base point via eigenvalue_orders_near, or,
// globally, at some singular point of the curve or on the smooth part of a
// piece (where the N-th roots of unity occur, N the piece multiplicity).
// Resolution errors propagate.
CheckReport check_monodromy_conjecture(const CurveSystem& c);

// Holomorphy of the character twist: when d divides no order in the
// eigenvalue set, the twisted zeta function must have an empty pole set;
// otherwise the check does not apply and the dividing order is reported.
CheckReport check_holomorphy(const CurveSystem& c, int d);

// At every exceptional E0 with kappa = -E0^2 meeting other components r
// times: kappa N0 = sum N_i, kappa nu0 = sum (nu_i - 1) + 2, and
// sum (alpha_i - 1) + 2 = 0 for alpha_i = nu_i - (nu0/N0) N_i, together
// with the minimality bounds -1 <= alpha_i < 1 (= -1 exactly when r = 1).
// Inapplicable when the graph has no exceptional components.
CheckReport check_numerical_relations(const ResolutionGraph& g);

// Compares the actual pole set of z against the predicted one: -nu/N of the
// strict-transform components and of the exceptional components meeting
// other components at least three times.  Germ resolutions only; germs that
// are already normal crossings are out of scope.
CheckReport check_pole_determination(const ResolutionGraph& g, const RatFunc& z);

// Computes the minimal locus M, classifies its shape, checks that nu/N
// strictly increases along every path away from M, and validates the order-2
// pole of the local zeta function (at most one; equal to -lct; of the form
// -1/k).  Throws std::invalid_argument on a global graph.
MinLocusReport analyze_min_locus(const ResolutionGraph& g);

}  // namespace monolab
