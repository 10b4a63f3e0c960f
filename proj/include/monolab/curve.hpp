#pragma once
#include <monolab/mpoly.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monolab {

// One labeled input factor f_l^m of the curve under study.
struct CurveFactor {
  std::string label;
  MPoly poly;           // nonconstant polynomial in x, y
  int multiplicity = 1; // exponent the label carries in the product
};

// A labeled plane curve Prod_l f_l^{m_l} together with the locality of
// interest: a base point (germ mode) or the whole affine plane.
struct CurveSystem {
  std::vector<CurveFactor> factors;
  std::optional<std::pair<Rat, Rat>> base_point; // nullopt = global mode

  bool is_germ() const { return base_point.has_value(); }
  MPoly product() const; // Prod_l f_l^{m_l}
};

CurveSystem make_germ(std::vector<CurveFactor> factors, Rat x0 = Rat(0),
                      Rat y0 = Rat(0));
CurveSystem make_global(std::vector<CurveFactor> factors);

// Convenience for the common single-polynomial case.
CurveSystem germ_of(const MPoly& f, Rat x0 = Rat(0), Rat y0 = Rat(0));
CurveSystem global_of(const MPoly& f);

// Refinement of the input into squarefree pairwise-coprime "pieces", the
// divisors the resolution engine actually follows.  Every factor satisfies
//   f_l = c_l * Prod_k pieces[k]^{mult[l][k]}
// with a nonzero rational c_l, pieces primitive with the monic-in-y sign
// convention.  Pure-x and pure-y contents are split off so that e.g. the
// single factor x*y yields the two pieces x and y.
struct PieceDecomposition {
  std::vector<MPoly> pieces;
  std::vector<std::vector<int>> mult; // mult[label][piece]
};

PieceDecomposition decompose(const CurveSystem& c);

} // namespace monolab
