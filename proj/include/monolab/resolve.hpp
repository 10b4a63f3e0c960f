#pragma once

// Embedded resolution of labeled plane-curve germs and affine curves by
// iterated point blow-ups in the two standard charts, with full numerical
// data (N per piece, nu, self-intersections), the dual graph, and the Euler
// bookkeeping the zeta functions need.

#include <monolab/curve.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monolab {

struct Component {
  enum class Kind { Exceptional, Strict };

  int id = -1;
  Kind kind = Kind::Exceptional;
  std::string name;        // E1..Ek by birth order, S1..Sm for strict
  std::vector<Int> N;      // multiplicity in div(piece_k o h), indexed by piece
  Int nu = 1;              // 1 + multiplicity in the relative canonical divisor
  int self_int = 0;        // exceptional only
  int birth_index = 0;
  int piece = -1;          // strict only: index of the originating piece
  int branches = 1;        // strict only: geometric branches this vertex stands for

  bool exceptional() const { return kind == Kind::Exceptional; }
};

// One intersection locus between two components: `points` geometric points,
// all with the same pair of components through them.  points > 1 happens for
// a conjugate block of irrational crossings (rational = false) or, in global
// mode, a strict component meeting an exceptional one several times.
struct Edge {
  int a = -1, b = -1;      // component ids, a < b
  int points = 1;
  bool rational = true;
  std::string at;          // chart lineage of the locus
};

struct BlowupRecord {
  int component;                                // exceptional id created
  std::string center;                           // chart lineage of the center
  std::vector<int> through;                     // exceptional ids at the center, size <= 2
  int strict_mult = 0;                          // multiplicity of the reduced strict transform
  std::vector<std::pair<int, int>> piece_mult;  // (piece, multiplicity at center), nonzero only
};

// Euler data attached in global mode: chi of the open strict strata and of
// the curve complement in A^2.
struct GlobalEuler {
  bool have = false;
  std::map<int, long> chi_strict;  // strict component id -> chi(E_j deg)
  long chi_complement = 0;         // chi(A^2 minus the curve)
};

// Certificate snapshot of one terminal (SNC) point, kept so the final
// configuration can be re-checked after the fact.
struct SiteCert {
  std::string where;
  int entities = 0;                    // components through the point (<= 2)
  bool transverse = true;              // tangent directions pairwise distinct
  std::vector<int> piece_mults;        // local multiplicity of each piece present (all 1)
};

struct ResolutionGraph {
  bool germ_mode = true;
  std::pair<Rat, Rat> base_point{Rat(0), Rat(0)};

  std::vector<std::string> labels;
  std::vector<int> label_multiplicity;        // input exponent m_l
  std::vector<MPoly> pieces;                  // refined pieces, global coordinates
  std::vector<std::vector<int>> piece_mult;   // piece_mult[label][piece]

  std::vector<Component> components;
  std::vector<Edge> edges;
  std::vector<BlowupRecord> blowup_log;
  std::vector<SiteCert> site_certs;
  std::vector<std::string> warnings;
  GlobalEuler euler;

  // Arithmetic provenance for reduction mod p: the affine special points the
  // germ runs were seeded at (global mode only), and per blow-up the chart
  // values of the distinct points kept apart on the new component.
  std::vector<std::pair<Rat, Rat>> special_points;
  std::vector<std::vector<Rat>> separation_sets;

  // -- derived numerical data ---------------------------------------------
  // Multiplicity of the component in div(f_l o h) (label multiplicity not
  // applied) and in div(f o h) for the full product f = prod f_l^{m_l}.
  Int N_label(const Component& c, int label) const;
  Int N_total(const Component& c) const;

  long valence_points(int id) const;  // total geometric edge points on the component

  // chi of the open stratum: germ mode chi(E_j deg intersected with the fiber
  // over the base point), global mode chi(E_j deg).  Throws MissingEulerData
  // for global strict components without Euler data.
  long chi_open(int id) const;

  const Component& by_name(const std::string& name) const;
  int edge_between(int a, int b) const;  // index into edges, -1 if absent

  // Components contracted to the base point (all exceptional ids in germ
  // mode; empty in global mode).
  std::vector<int> fiber() const;
};

struct ResolveOptions {
  int budget = 200;                          // maximum number of blow-ups
  std::map<std::string, long> chi_override;  // component name (or "complement") -> chi
};

// Order of vanishing of f at the point.
int multiplicity_at(const MPoly& f, const Rat& x0, const Rat& y0);

// Minimal embedded resolution of the germ at c.base_point.  Strict components
// are split into analytic branches (one vertex per branch over the base
// point); a transverse crossing of two rational-tangent branches counts as
// already resolved.
ResolutionGraph resolve_germ(const CurveSystem& c, const ResolveOptions& opts = {});

// Embedded resolution over all of A^2: germ resolutions at every affine
// special point (algebraic components are required to be smooth here, so
// one-piece nodes get blown up), plus Euler-characteristic data for the open
// strict strata computed through the degree-genus formula with delta
// invariants accumulated at affine and infinity centers.
ResolutionGraph resolve_affine(const CurveSystem& c, const ResolveOptions& opts = {});

// Combinatorial surgeries extending a resolution by one non-minimal blow-up;
// used to test that the zeta functions do not depend on the chosen resolution.
ResolutionGraph blowup_free_point(const ResolutionGraph& g, int component_id);
ResolutionGraph blowup_corner(const ResolutionGraph& g, int edge_index);

// Re-checks the SNC certificate and the graph invariants (exceptional tree in
// germ mode, no triple points, numerical recursions).  Returns human-readable
// problems; empty means certified.
std::vector<std::string> verify_snc(const ResolutionGraph& g);

}  // namespace monolab
