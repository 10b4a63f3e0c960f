#include <monolab/curve.hpp>

#include <algorithm>
#include <tuple>

namespace monolab {

MPoly CurveSystem::product() const {
  MPoly p = MPoly::constant(Rat(1));
  for (const auto& f : factors) p = p * mp_pow(f.poly, unsigned(f.multiplicity));
  return p;
}

static void validate(const std::vector<CurveFactor>& factors) {
  if (factors.empty()) throw error(errc::Unsupported, "empty curve system");
  for (const auto& f : factors) {
    if (f.poly.is_zero() || f.poly.is_constant())
      throw error(errc::Unsupported, "factor '" + f.label + "' is constant");
    if (f.multiplicity < 1)
      throw error(errc::Unsupported, "factor '" + f.label + "' has multiplicity < 1");
    for (const auto& v : f.poly.vars)
      if (v != "x" && v != "y")
        throw error(errc::UnknownVariable, "factor '" + f.label + "' uses variable " + v);
  }
}

CurveSystem make_germ(std::vector<CurveFactor> factors, Rat x0, Rat y0) {
  validate(factors);
  CurveSystem c;
  c.factors = std::move(factors);
  c.base_point = std::make_pair(x0, y0);
  return c;
}

CurveSystem make_global(std::vector<CurveFactor> factors) {
  validate(factors);
  CurveSystem c;
  c.factors = std::move(factors);
  return c;
}

CurveSystem germ_of(const MPoly& f, Rat x0, Rat y0) {
  return make_germ({CurveFactor{"f", f, 1}}, x0, y0);
}

CurveSystem global_of(const MPoly& f) { return make_global({CurveFactor{"f", f, 1}}); }

// ---- piece refinement ------------------------------------------------------

namespace {

struct Work {
  MPoly p;
  std::vector<int> mult;  // per label
};

// Split off the content that is pure in the other variable, so a squarefree
// factor like x*y refines into the axes x and y.
void split_contents(MPoly q, int label, int e, size_t nlabels, std::vector<Work>& out) {
  auto push = [&](const MPoly& p) {
    if (p.is_constant()) return;
    Work w{primitive_part(p), std::vector<int>(nlabels, 0)};
    w.mult[label] = e;
    out.push_back(std::move(w));
  };
  for (const char* v : {"y", "x"}) {
    if (degree_in(q, v) <= 0) continue;
    MPoly cont = MPoly::zero();
    for (const auto& cf : coeffs_in(q, v)) cont = gcd_poly(cont, cf);
    if (!cont.is_constant()) {
      push(cont);
      q = *divexact(q, cont);
    }
  }
  if (total_degree(q) >= 2 && low_degree(q) == total_degree(q)) {
    // a homogeneous factor splits into rational lines wherever its slice
    // q(x,1) has rational roots; any rootless remainder stays whole
    auto rr = upoly_rational_roots(subst(q, "y", Rat(1)));
    for (const auto& [r, e] : rr.roots) {
      MPoly line = MPoly::var("x") - MPoly::constant(r) * MPoly::var("y");
      push(line);
      q = *divexact(q, line);
    }
  }
  push(q);
}

}  // namespace

PieceDecomposition decompose(const CurveSystem& c) {
  const size_t L = c.factors.size();
  std::vector<Work> work;
  for (size_t l = 0; l < L; ++l)
    for (const auto& [q, e] : squarefree_split(c.factors[l].poly)) {
      if (e == 0) continue;  // rational-content entry
      split_contents(q, int(l), e, L, work);
    }

  // Refine until pairwise coprime; shared parts collect both multiplicity rows.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < work.size() && !changed; ++i)
      for (size_t j = i + 1; j < work.size() && !changed; ++j) {
        MPoly g = gcd_poly(work[i].p, work[j].p);
        if (g.is_constant()) continue;
        Work shared{g, work[i].mult};
        for (size_t l = 0; l < L; ++l) shared.mult[l] += work[j].mult[l];
        work[i].p = primitive_part(*divexact(work[i].p, g));
        work[j].p = primitive_part(*divexact(work[j].p, g));
        work.push_back(std::move(shared));
        std::erase_if(work, [](const Work& w) { return w.p.is_constant(); });
        changed = true;
      }
  }

  std::sort(work.begin(), work.end(), [](const Work& a, const Work& b) {
    return std::make_tuple(total_degree(a.p), to_string(a.p)) <
           std::make_tuple(total_degree(b.p), to_string(b.p));
  });

  PieceDecomposition d;
  d.mult.assign(L, std::vector<int>(work.size(), 0));
  for (size_t k = 0; k < work.size(); ++k) {
    d.pieces.push_back(work[k].p);
    for (size_t l = 0; l < L; ++l) d.mult[l][k] = work[k].mult[l];
  }
  return d;
}

}  // namespace monolab
