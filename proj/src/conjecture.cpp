#include "monolab/conjecture.hpp"

#include "monolab/monodromy.hpp"
#include "monolab/zeta.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace monolab {

namespace {

// The germ divisor is already normal crossings exactly when no blow-up was
// needed, or when a single blow-up only separated the two transverse smooth
// branches of a one-piece node (the engine keeps algebraic pieces whole, so
// it blows such a node up even though the germ itself is fine).
bool germ_is_snc(const ResolutionGraph& g) {
  long exc = 0, branches = 0;
  for (const auto& c : g.components) {
    if (c.exceptional())
      ++exc;
    else
      branches += c.branches;
  }
  return exc == 0 || (exc == 1 && branches == 2);
}

// Eigenvalue orders available somewhere on a global curve: the orders near
// each singular point, plus, on the smooth part of each piece, all divisors
// of the piece multiplicity.  The value records where the order was found.
std::map<long, std::string> eigenvalue_sources_global(const CurveSystem& c,
                                                      const ResolutionGraph& g) {
  std::map<long, std::string> src;
  for (const auto& pt : g.special_points) {
    auto gg = resolve_germ(make_germ(c.factors, pt.first, pt.second));
    auto ev = eigenvalue_orders_near(gg);
    std::string at =
        " at (" + to_string(pt.first) + ", " + to_string(pt.second) + ")";
    for (long o : ev.orders) src.emplace(o, ev.provenance.at(o) + at);
  }
  for (size_t k = 0; k < g.pieces.size(); ++k) {
    Int m(0);
    for (size_t l = 0; l < g.labels.size(); ++l)
      m += Int(g.label_multiplicity[l]) * Int(g.piece_mult[l][k]);
    for (const Int& dv : divisors(m))
      src.emplace(to_long(dv), "smooth points of " + to_string(g.pieces[k]));
  }
  return src;
}

std::string join_rats(const std::set<Rat>& s) {
  std::string out;
  for (const Rat& q : s) {
    if (!out.empty()) out += ", ";
    out += to_string(q);
  }
  return out.empty() ? "(none)" : out;
}

}  // namespace

std::string to_string(CheckReport::Verdict v) {
  switch (v) {
    case CheckReport::Verdict::pass: return "pass";
    case CheckReport::Verdict::fail: return "fail";
    default: return "inapplicable";
  }
}

CheckReport check_monodromy_conjecture(const CurveSystem& c) {
  CheckReport rep;
  rep.name = "monodromy-conjecture";
  ZetaOptions opt;
  opt.local = c.is_germ();

  std::map<long, std::string> source;
  PoleReport pr;
  if (c.is_germ()) {
    auto g = resolve_germ(c);
    auto ev = eigenvalue_orders_near(g);
    for (long o : ev.orders) source.emplace(o, ev.provenance.at(o));
    pr = poles(zeta_top(g, opt));
  } else {
    auto g = resolve_affine(c);
    source = eigenvalue_sources_global(c, g);
    pr = poles(zeta_top(g, opt));
  }

  if (pr.entries.empty()) rep.witnesses.push_back("no poles: nothing to verify");
  for (const auto& e : pr.entries) {
    long d = to_long(den(e.pole));
    auto it = source.find(d);
    if (it != source.end()) {
      rep.witnesses.push_back("pole " + to_string(e.pole) + ": eigenvalue order " +
                              std::to_string(d) + " (" + it->second + ")");
    } else {
      rep.verdict = CheckReport::Verdict::fail;
      std::ostringstream os;
      os << "pole " << to_string(e.pole) << " of " << to_string(c.product())
         << ": no eigenvalue of order " << d << "; available orders:";
      for (const auto& [o, where] : source) os << " " << o;
      rep.witnesses.push_back(os.str());
    }
  }
  return rep;
}

CheckReport check_holomorphy(const CurveSystem& c, int d) {
  if (d < 1) throw std::invalid_argument("character order must be positive");
  CheckReport rep;
  rep.name = "holomorphy";

  std::set<long> orders;
  ResolutionGraph g;
  if (c.is_germ()) {
    g = resolve_germ(c);
    orders = eigenvalue_orders_near(g).orders;
  } else {
    g = resolve_affine(c);
    for (const auto& [o, where] : eigenvalue_sources_global(c, g))
      orders.insert(o);
  }
  for (long o : orders) {
    if (o % d == 0) {
      rep.verdict = CheckReport::Verdict::inapplicable;
      rep.witnesses.push_back(std::to_string(d) + " divides eigenvalue order " +
                              std::to_string(o) + ": conjecture says nothing");
      return rep;
    }
  }

  ZetaOptions opt;
  opt.local = c.is_germ();
  opt.character_order = d;
  auto z = zeta_top(g, opt);
  auto pr = poles(z);
  if (pr.entries.empty()) {
    rep.witnesses.push_back("twist by order " + std::to_string(d) +
                            (z.is_zero() ? " is the zero function"
                                         : " has empty pole set"));
  } else {
    rep.verdict = CheckReport::Verdict::fail;
    std::set<Rat> got;
    for (const auto& e : pr.entries) got.insert(e.pole);
    rep.witnesses.push_back("twist of " + to_string(c.product()) + " by order " +
                            std::to_string(d) + " has poles " + join_rats(got) +
                            " although " + std::to_string(d) +
                            " divides no eigenvalue order");
  }
  return rep;
}

CheckReport check_numerical_relations(const ResolutionGraph& g) {
  CheckReport rep;
  rep.name = "numerical-relations";
  bool any = false;
  for (const auto& c : g.components) {
    if (!c.exceptional()) continue;
    any = true;
    long kappa = -c.self_int;
    Int N0 = g.N_total(c);
    Rat ratio = Rat(c.nu) / Rat(N0);

    long r = 0;
    Int sumN(0), sumNuM1(0);
    Rat sumAlphaM1(0);
    std::vector<Rat> alphas;
    for (const auto& e : g.edges) {
      if (e.a != c.id && e.b != c.id) continue;
      const Component& o = g.components[size_t(e.a == c.id ? e.b : e.a)];
      Int No = g.N_total(o);
      Rat alpha = Rat(Rat(o.nu) - ratio * Rat(No));
      for (int t = 0; t < e.points; ++t) {
        ++r;
        sumN += No;
        sumNuM1 += o.nu - 1;
        sumAlphaM1 += alpha - 1;
        alphas.push_back(alpha);
      }
    }

    bool rel1 = Int(kappa * N0) == sumN;
    bool rel2 = Int(kappa * c.nu) == Int(sumNuM1 + 2);
    bool rel3 = Rat(sumAlphaM1 + 2) == 0;
    bool bounds = true;
    for (const Rat& a : alphas) {
      if (a < Rat(-1) || a >= Rat(1)) bounds = false;
      if (a == Rat(-1) && r != 1) bounds = false;
    }
    if (r == 1 && !(alphas.size() == 1 && alphas[0] == Rat(-1))) bounds = false;

    std::ostringstream w;
    w << c.name << ": kappa=" << kappa << " r=" << r << "; kappa*N0=" << kappa * N0
      << " sum(N_i)=" << sumN << "; kappa*nu0=" << kappa * c.nu
      << " sum(nu_i-1)+2=" << sumNuM1 + 2
      << "; sum(alpha_i-1)+2=" << to_string(Rat(sumAlphaM1 + 2)) << "; alphas:";
    for (const Rat& a : alphas) w << " " << to_string(a);
    if (rel1 && rel2 && rel3 && bounds) {
      rep.witnesses.push_back(w.str());
    } else {
      rep.verdict = CheckReport::Verdict::fail;
      rep.witnesses.push_back("FAIL " + w.str());
    }
  }
  if (!any) {
    rep.verdict = CheckReport::Verdict::inapplicable;
    rep.witnesses.push_back("no exceptional components");
  }
  return rep;
}

CheckReport check_pole_determination(const ResolutionGraph& g, const RatFunc& z) {
  CheckReport rep;
  rep.name = "pole-determination";
  if (!g.germ_mode) {
    rep.verdict = CheckReport::Verdict::inapplicable;
    rep.witnesses.push_back("stated for germ resolutions only");
    return rep;
  }
  if (germ_is_snc(g)) {
    rep.verdict = CheckReport::Verdict::inapplicable;
    rep.witnesses.push_back("germ already has normal crossings");
    return rep;
  }

  std::set<Rat> want;
  for (const auto& c : g.components) {
    if (c.exceptional() && g.valence_points(c.id) < 3) continue;
    want.insert(make_rat(Int(-c.nu), g.N_total(c)));
  }
  std::set<Rat> got;
  for (const auto& e : poles(z).entries) got.insert(e.pole);

  rep.witnesses.push_back("predicted: " + join_rats(want));
  rep.witnesses.push_back("actual:    " + join_rats(got));
  if (want != got) {
    rep.verdict = CheckReport::Verdict::fail;
    std::set<Rat> offending;
    std::set_symmetric_difference(want.begin(), want.end(), got.begin(),
                                  got.end(),
                                  std::inserter(offending, offending.begin()));
    rep.witnesses.push_back("mismatch at: " + join_rats(offending));
  }
  return rep;
}

MinLocusReport analyze_min_locus(const ResolutionGraph& g) {
  if (!g.germ_mode)
    throw std::invalid_argument("min locus analysis needs a germ graph");

  const size_t n = g.components.size();
  std::vector<Rat> ratio(n);
  for (const auto& c : g.components)
    ratio[size_t(c.id)] = Rat(Rat(c.nu) / Rat(g.N_total(c)));
  Rat m = *std::min_element(ratio.begin(), ratio.end());

  MinLocusReport rep;
  std::vector<char> in_locus(n, 0);
  for (const auto& c : g.components) {
    if (ratio[size_t(c.id)] == m) {
      rep.locus.push_back(c.id);
      in_locus[size_t(c.id)] = 1;
    }
  }

  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges) {
    adj[size_t(e.a)].push_back(e.b);
    adj[size_t(e.b)].push_back(e.a);
  }

  // connectivity of the locus as an induced subgraph
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{rep.locus.front()};
    seen[size_t(rep.locus.front())] = 1;
    size_t reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int w : adj[size_t(v)])
        if (in_locus[size_t(w)] && !seen[size_t(w)]) {
          seen[size_t(w)] = 1;
          stack.push_back(w);
        }
    }
    rep.connected = reached == rep.locus.size();
  }

  if (!germ_is_snc(g)) {
    bool strict_in = false;
    for (int id : rep.locus)
      if (!g.components[size_t(id)].exceptional()) strict_in = true;
    if (strict_in)
      rep.shape = rep.locus.size() == 1 ? "strict-edge" : "strict-chain";
    else
      rep.shape = rep.locus.size() == 1 ? "single-node-star" : "chain-between-nodes";
  }

  // nu/N must grow strictly with the distance from the locus
  {
    std::vector<long> dist(n, -1);
    std::vector<int> queue = rep.locus;
    for (int id : rep.locus) dist[size_t(id)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : adj[size_t(v)])
        if (dist[size_t(w)] < 0) {
          dist[size_t(w)] = dist[size_t(v)] + 1;
          queue.push_back(w);
        }
    }
    for (const auto& e : g.edges) {
      long da = dist[size_t(e.a)], db = dist[size_t(e.b)];
      int lo = e.a, hi = e.b;
      if (da > db) std::swap(lo, hi);
      if (da != db && !(ratio[size_t(hi)] > ratio[size_t(lo)])) rep.monotone = false;
      if (da == db && !(in_locus[size_t(e.a)] && in_locus[size_t(e.b)]))
        rep.monotone = false;
    }
  }

  // at most one order-2 pole, sitting at -lct, of the shape -1/k
  auto pr = poles(zeta_top(g));
  int found = 0;
  for (const auto& e : pr.entries) {
    if (e.order < 2) continue;
    ++found;
    rep.order2_pole = e.pole;
    Rat l = Rat(-e.pole);
    if (!(l == lct(g).value && num(l) == 1)) rep.order2_ok = false;
  }
  if (found > 1) rep.order2_ok = false;
  return rep;
}

}  // namespace monolab
