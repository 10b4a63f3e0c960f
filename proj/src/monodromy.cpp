#include "monolab/monodromy.hpp"

#include <stdexcept>

namespace monolab {

UnityRat acampo_zeta(const ResolutionGraph& g) {
  UnityRat z = UnityRat::one();
  for (const auto& c : g.components) {
    long chi = g.chi_open(c.id);
    if (chi == 0) continue;
    z.mul_factor(to_long(g.N_total(c)), int(-chi));
  }
  return z;
}

UnityRat char_poly_P1(const ResolutionGraph& g) {
  if (!g.germ_mode) throw std::invalid_argument("characteristic polynomial needs a germ graph");
  for (const auto& c : g.components)
    if (!c.exceptional() && g.N_total(c) > 1)
      throw error(errc::NotIsolated,
                  "branch of " + c.name + " has multiplicity " + g.N_total(c).get_str() +
                      ": the singular locus is not the base point alone");
  UnityRat p1 = acampo_zeta(g);
  p1.mul_factor(1, 1);
  if (!is_polynomial(p1))
    throw error(errc::NotIsolated, "monodromy zeta does not complete to a polynomial");
  return p1;
}

EigenvalueSet eigenvalue_orders_near(const ResolutionGraph& g) {
  if (!g.germ_mode) throw std::invalid_argument("eigenvalue orders need a germ graph");
  EigenvalueSet out;
  for (const auto& [l, m] : cyclo_multiplicities(acampo_zeta(g))) {
    out.orders.insert(l);
    out.provenance[l] = m > 0 ? "zeta-zero" : "zeta-pole";
  }
  for (const auto& c : g.components) {
    if (c.exceptional()) continue;
    long N = to_long(g.N_total(c));
    for (long d = 1; d <= N; ++d)
      if (N % d == 0 && out.orders.insert(d).second) out.provenance[d] = "smooth-point-P0";
  }
  return out;
}

LctValue lct(const ResolutionGraph& g) {
  LctValue out;
  bool first = true;
  for (const auto& c : g.components) {
    Int N = g.N_total(c);
    if (N == 0) continue;
    Rat q = Rat(c.nu) / Rat(N);
    if (first || q < out.value) {
      out.value = q;
      out.achieved_by = {c.id};
      first = false;
    } else if (q == out.value) {
      out.achieved_by.push_back(c.id);
    }
  }
  if (first) throw std::invalid_argument("no component with N > 0");
  return out;
}

}  // namespace monolab
