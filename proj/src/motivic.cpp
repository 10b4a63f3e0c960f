#include "monolab/zeta.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace monolab {

MotivicRat zeta_motivic_local(const ResolutionGraph& g) {
  if (!g.germ_mode)
    throw error(errc::Unsupported, "motivic zeta is germ-local only");
  MotivicRat z;
  const MPoly L = MPoly::var("L");
  const MPoly T = MPoly::var("T");
  for (const auto& c : g.components) z.data[c.id] = {c.nu, g.N_total(c)};

  // fiber strata: each exceptional curve is a projective line with its
  // crossing points removed, each crossing point is its own stratum, and a
  // strict branch only meets the fiber at its attachment point (except for
  // an identity resolution, where the base point lies on the branch itself)
  for (const auto& c : g.components) {
    long val = g.valence_points(c.id);
    if (c.exceptional())
      z.terms.push_back({{c.id}, L + MPoly::constant(Rat(1 - val))});
    else if (val == 0)
      z.terms.push_back({{c.id}, MPoly::constant(Rat(1))});
  }
  for (const auto& e : g.edges)
    z.terms.push_back({{e.a, e.b}, MPoly::constant(Rat(e.points))});

  // expand over the common denominator prod_used (L^nu - T^N)
  std::set<int> used;
  for (const auto& t : z.terms) used.insert(t.comps.begin(), t.comps.end());
  auto fpoly = [&](int id) {
    const auto& [nu, N] = z.data[id];
    return mp_pow(L, unsigned(to_long(nu))) - mp_pow(T, unsigned(to_long(N)));
  };
  z.lshift = -2;
  z.num = MPoly::zero();
  for (const auto& t : z.terms) {
    MPoly m = t.cls * mp_pow(L - MPoly::constant(Rat(1)),
                             unsigned(t.comps.size()));
    Int sumN(0);
    for (int id : t.comps) sumN += z.data[id].second;
    m = m * mp_pow(T, unsigned(to_long(sumN)));
    for (int id : used)
      if (std::find(t.comps.begin(), t.comps.end(), id) == t.comps.end())
        m = m * fpoly(id);
    z.num = z.num + m;
  }
  for (int id : used) z.den[z.data[id]] += 1;
  return z;
}

RatFunc motivic_to_topological(const MotivicRat& z) {
  const std::vector<std::string> vn{"s"};
  std::map<std::string, Rat> at_one{{"L", Rat(1)}};
  RatFunc acc = RatFunc::zero(vn);
  for (const auto& t : z.terms) {
    Rat chi = eval(t.cls, at_one);
    if (chi == 0) continue;
    std::vector<LinForm> fs;
    for (int id : t.comps) {
      const auto& [nu, N] = z.data.at(id);
      fs.emplace_back(nu, std::vector<Int>{N});
    }
    acc = acc + RatFunc::term(vn, chi, fs);
  }
  return normalize(acc);
}

std::string to_string(const MotivicRat& z) {
  std::ostringstream os;
  if (z.lshift != 0) os << "L^" << z.lshift << " * ";
  os << "(" << to_string(z.num) << ") / (";
  auto power = [&](const char* v, const Int& e) {
    os << v;
    if (e != 1) os << "^" << e.get_str();
  };
  for (const auto& [key, e] : z.den) {
    os << "(";
    power("L", key.first);
    os << " - ";
    power("T", key.second);
    os << ")";
    if (e > 1) os << "^" << e;
  }
  os << ")";
  return os.str();
}

}  // namespace monolab
