#include "monolab/zeta.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace monolab {

namespace {

// Per-component linear form nu_eff + sum_v N_eff[v] s_v together with the
// f-side total N used by the character filter.  The form label, when
// present, moves its divisor multiplicities from the N side into nu.
struct EffData {
  std::vector<std::string> vnames;
  std::vector<LinForm> lf;  // indexed by component id
  std::vector<Int> n_eff;
};

EffData effective_data(const ResolutionGraph& g, const ZetaOptions& opts,
                       bool multivariate) {
  int form_idx = -1;
  if (opts.form) {
    for (size_t l = 0; l < g.labels.size(); ++l)
      if (g.labels[l] == *opts.form) form_idx = int(l);
    if (form_idx < 0)
      throw error(errc::Unsupported,
                  "form label '" + *opts.form + "' is not a factor");
  }

  // s-variable of each non-form label (-1 for the form label)
  std::vector<int> var_of(g.labels.size(), -1);
  int nvars = 0;
  if (multivariate && !opts.weights.empty()) {
    for (size_t l = 0; l < g.labels.size(); ++l) {
      if (int(l) == form_idx) continue;
      auto it = opts.weights.find(g.labels[l]);
      if (it == opts.weights.end() || it->second < 1)
        throw error(errc::Unsupported, "weights must give factor '" +
                                           g.labels[l] +
                                           "' a variable index >= 1");
      var_of[l] = it->second - 1;
      nvars = std::max(nvars, it->second);
    }
  } else {
    // default: one variable per label in label order, or the single s
    for (size_t l = 0; l < g.labels.size(); ++l)
      if (int(l) != form_idx) var_of[l] = multivariate ? nvars++ : 0;
  }
  int side = 0;
  for (size_t l = 0; l < g.labels.size(); ++l) side += var_of[l] >= 0;
  if (side == 0)
    throw error(errc::Unsupported, "no factor left on the f side");

  EffData ed;
  if (multivariate && nvars > 1)
    for (int v = 1; v <= nvars; ++v) ed.vnames.push_back("s" + std::to_string(v));
  else
    ed.vnames = {"s"};

  for (const auto& c : g.components) {
    Int nu_eff = c.nu;
    std::vector<Int> cs(ed.vnames.size(), Int(0));
    Int total(0);
    for (size_t l = 0; l < g.labels.size(); ++l) {
      Int nl = g.N_label(c, int(l)) * g.label_multiplicity[l];
      if (int(l) == form_idx) {
        nu_eff += nl;
      } else {
        cs[size_t(var_of[l])] += nl;
        total += nl;
      }
    }
    ed.lf.emplace_back(nu_eff, cs);
    ed.n_eff.push_back(total);
  }
  return ed;
}

RatFunc stratified_sum(const ResolutionGraph& g, const ZetaOptions& opts,
                       bool multivariate) {
  if (opts.character_order < 1)
    throw error(errc::Unsupported, "character order must be >= 1");
  if (opts.local != g.germ_mode)
    throw error(errc::Unsupported,
                opts.local ? "local zeta needs a germ resolution"
                           : "global zeta needs an affine resolution");
  EffData ed = effective_data(g, opts, multivariate);
  const int d = opts.character_order;
  auto in_play = [&](int id) {
    return d == 1 || ed.n_eff[size_t(id)] % d == 0;
  };
  auto factor = [&](int id) {
    const LinForm& f = ed.lf[size_t(id)];
    if (f.is_zero())
      throw error(errc::ZeroLinForm, "component " +
                                         g.components[size_t(id)].name +
                                         " has nu = N = 0");
    return f;
  };

  // singletons, crossing points, and (globally) the curve complement; in
  // germ mode chi_open already means chi of the stratum inside the fiber
  RatFunc acc = RatFunc::zero(ed.vnames);
  for (const auto& c : g.components) {
    if (!in_play(c.id)) continue;
    long chi = g.chi_open(c.id);
    if (chi != 0)
      acc = acc + RatFunc::term(ed.vnames, Rat(chi), {factor(c.id)});
  }
  for (const auto& e : g.edges) {
    if (!in_play(e.a) || !in_play(e.b)) continue;
    acc = acc + RatFunc::term(ed.vnames, Rat(e.points),
                              {factor(e.a), factor(e.b)});
  }
  if (!g.germ_mode)
    acc = acc + RatFunc::from_constant(ed.vnames, Rat(g.euler.chi_complement));
  return normalize(acc);
}

}  // namespace

RatFunc zeta_top(const ResolutionGraph& g, const ZetaOptions& opts) {
  return stratified_sum(g, opts, false);
}

MultiZeta zeta_top_multi(const ResolutionGraph& g, const ZetaOptions& opts) {
  MultiZeta out;
  out.zeta = stratified_sum(g, opts, true);
  for (const auto& [f, e] : out.zeta.den) out.polar.push_back(f);
  return out;
}

PoleReport poles(const RatFunc& r) {
  PoleReport rep;
  for (const PolePoint& p : pole_data(r))
    rep.entries.push_back({p.s0, p.order, p.leading, {}});
  return rep;
}

PoleReport poles(const RatFunc& r, const ResolutionGraph& g,
                 const ZetaOptions& opts) {
  PoleReport rep = poles(r);
  EffData ed = effective_data(g, opts, false);
  const int d = opts.character_order;
  for (auto& ent : rep.entries) {
    for (const auto& c : g.components) {
      const LinForm& f = ed.lf[size_t(c.id)];
      if (f.cs.empty() || f.cs[0] == 0) continue;
      if (d > 1 && ed.n_eff[size_t(c.id)] % d != 0) continue;
      if (make_rat(-f.c0, f.cs[0]) == ent.pole)
        ent.contributors.push_back(c.id);
    }
  }
  return rep;
}

Rat component_residue(const ResolutionGraph& g, int j) {
  if (j < 0 || size_t(j) >= g.components.size())
    throw std::invalid_argument("component_residue: no component with id " +
                                std::to_string(j));
  const Component& c0 = g.components[size_t(j)];
  if (!c0.exceptional())
    throw std::invalid_argument(
        "component_residue expects an exceptional component");
  Rat ratio = Rat(c0.nu) / Rat(g.N_total(c0));
  long r = 0;
  Rat sum(0);
  for (const auto& e : g.edges) {
    if (e.a != j && e.b != j) continue;
    const Component& ci = g.components[size_t(e.a == j ? e.b : e.a)];
    Rat alpha = Rat(ci.nu) - ratio * Rat(g.N_total(ci));
    if (alpha == 0)
      throw error(errc::SharedRatio,
                  "neighbor " + ci.name + " has the same nu/N as " + c0.name);
    r += e.points;
    sum += Rat(e.points) / alpha;
  }
  return (Rat(2 - r) + sum) / Rat(g.N_total(c0));
}

}  // namespace monolab
