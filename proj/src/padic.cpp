#include "monolab/padic.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace monolab {

namespace {

bool divides_den(const Rat& r, long p) { return mpz_divisible_ui_p(r.get_den().get_mpz_t(), unsigned(p)); }
bool divides_num(const Rat& r, long p) { return mpz_divisible_ui_p(r.get_num().get_mpz_t(), unsigned(p)); }

// residue of r mod p; requires p not dividing the denominator
long residue(const Rat& r, long p) {
  Int P{p};
  Int num = r.get_num() % P;
  if (num < 0) num += P;
  Int den = r.get_den() % P;
  long d = den.get_si(), inv = 1, base = d, e = p - 2;  // Fermat
  while (e > 0) {
    if (e & 1) inv = (inv * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return (num.get_si() * inv) % p;
}

// the coefficient vector of a mod p on the common (ex, ey) monomial frame;
// empty if every coefficient vanishes mod p
std::map<std::pair<int, int>, long> reduce_coeffs(const MPoly& a, long p) {
  std::map<std::pair<int, int>, long> out;
  for (const auto& [es, c] : a.terms) {
    long r = residue(c, p);
    if (r == 0) continue;
    int ex = 0, ey = 0;
    for (size_t v = 0; v < a.vars.size(); ++v)
      (a.vars[v] == "x" ? ex : ey) = es[v];
    out[{ex, ey}] = r;
  }
  return out;
}

MPoly key_poly(const std::pair<Int, Int>& key, bool symbolic, long p) {
  MPoly head = symbolic ? mp_pow(MPoly::var("p"), unsigned(to_long(key.first)))
                        : MPoly::constant(rat_pow(Rat(p), to_long(key.first)));
  return head - mp_pow(MPoly::var("T"), unsigned(to_long(key.second)));
}

}  // namespace

GoodPrimeReport good_prime_check(const ResolutionGraph& g, long p) {
  GoodPrimeReport rep;
  rep.p = p;
  if (!is_prime(p)) {
    rep.failures.push_back(std::to_string(p) + " is not prime");
    return rep;
  }

  // every rational the reduction of the stored data touches
  std::vector<Rat> pool{g.base_point.first, g.base_point.second};
  for (const auto& q : g.pieces)
    for (const auto& [es, c] : q.terms) pool.push_back(c);
  for (const auto& pt : g.special_points) {
    pool.push_back(pt.first);
    pool.push_back(pt.second);
  }
  for (const auto& set : g.separation_sets) pool.insert(pool.end(), set.begin(), set.end());
  for (const auto& r : pool)
    if (divides_den(r, p)) {
      rep.failures.push_back("p divides a coefficient denominator");
      break;
    }
  if (!rep.failures.empty()) return rep;

  // pieces keep their degree and stay pairwise distinct mod p
  std::vector<std::map<std::pair<int, int>, long>> red;
  for (size_t k = 0; k < g.pieces.size(); ++k) {
    const MPoly& q = g.pieces[k];
    int d = total_degree(q);
    bool top = false;
    for (const auto& [es, c] : homogeneous_part(q, d).terms)
      if (!divides_num(c, p)) top = true;
    if (!top)
      rep.failures.push_back("piece " + std::to_string(k + 1) + " drops degree mod p");
    red.push_back(reduce_coeffs(q, p));
  }
  for (size_t i = 0; i < red.size(); ++i)
    for (size_t j = i + 1; j < red.size(); ++j) {
      if (red[i].size() != red[j].size() || red[i].empty()) continue;
      // proportional coefficient vectors over F_p?
      auto a = red[i].begin(), b = red[j].begin();
      bool same = true;
      long lam = -1;
      for (; same && a != red[i].end(); ++a, ++b) {
        if (a->first != b->first) same = false;
        else {
          long l = (a->second * residue(Rat(1) / Rat(b->second), p)) % p;
          if (lam < 0) lam = l;
          same = l == lam;
        }
      }
      if (same)
        rep.failures.push_back("pieces " + std::to_string(i + 1) + " and " +
                               std::to_string(j + 1) + " coincide mod p");
    }

  // special points stay pairwise distinct and on their own pieces
  for (size_t i = 0; i < g.special_points.size(); ++i) {
    const auto& a = g.special_points[i];
    for (size_t j = i + 1; j < g.special_points.size(); ++j) {
      const auto& b = g.special_points[j];
      if (residue(a.first, p) == residue(b.first, p) &&
          residue(a.second, p) == residue(b.second, p))
        rep.failures.push_back("special points collide mod p");
    }
    for (size_t k = 0; k < g.pieces.size(); ++k) {
      Rat v = eval(g.pieces[k], {{"x", a.first}, {"y", a.second}});
      if (v != 0 && divides_num(v, p))
        rep.failures.push_back("a special point migrates onto piece " +
                               std::to_string(k + 1) + " mod p");
    }
  }

  // points separated by a blow-up stay separated
  for (const auto& set : g.separation_sets)
    for (size_t i = 0; i < set.size(); ++i)
      for (size_t j = i + 1; j < set.size(); ++j)
        if (divides_num(Rat(set[i] - set[j]), p))
          rep.failures.push_back("blown-up points collide mod p");

  // conjugate crossings: the stored data does not determine their counts
  for (const auto& e : g.edges)
    if (!e.rational)
      rep.failures.push_back("conjugate intersection points between " +
                             g.components[size_t(e.a)].name + " and " +
                             g.components[size_t(e.b)].name);

  // soft flags: wild multiplicities and degenerating discriminants
  for (const auto& c : g.components)
    if (c.exceptional() && mpz_divisible_ui_p(g.N_total(c).get_mpz_t(), unsigned(p)))
      rep.suspects.push_back("p divides N(" + c.name + ")");
  for (size_t k = 0; k < g.pieces.size(); ++k) {
    const MPoly& q = g.pieces[k];
    for (const char* v : {"x", "y"}) {
      if (degree_in(q, v) == 0) continue;
      MPoly dq = derivative(q, v);
      if (divides_num(content(dq), p))
        rep.suspects.push_back("d/d" + std::string(v) + " of piece " +
                               std::to_string(k + 1) + " vanishes mod p");
      else if (divides_num(content(resultant(q, dq, v)), p))
        rep.suspects.push_back("the " + std::string(v) + "-discriminant of piece " +
                               std::to_string(k + 1) + " degenerates mod p");
    }
  }
  return rep;
}

PadicZeta denef_zeta(const ResolutionGraph& g, long p) {
  GoodPrimeReport rep = good_prime_check(g, p);
  if (!rep.usable()) throw error(errc::BadPrime, "p = " + std::to_string(p) + ": " + rep.failures.front());

  PadicZeta z;
  z.p = p;
  z.local = g.germ_mode;
  z.symbolic = g.germ_mode;
  for (const auto& c : g.components) z.data[c.id] = {c.nu, g.N_total(c)};
  const MPoly pvar = MPoly::var("p");
  const MPoly T = MPoly::var("T");

  if (z.local) {
    // strata of the fiber over the base point; counts are polynomials in p
    // (every crossing point is rational once good_prime_check passed)
    for (const auto& c : g.components) {
      long val = g.valence_points(c.id);
      if (c.exceptional())
        z.terms.push_back({{c.id}, pvar + MPoly::constant(Rat(1 - val))});
      else if (val == 0)
        z.terms.push_back({{c.id}, MPoly::constant(Rat(1))});
    }
    for (const auto& e : g.edges)
      z.terms.push_back({{e.a, e.b}, MPoly::constant(Rat(e.points))});
  } else {
    // strata of the whole affine model; strict-transform and complement
    // counts come from enumeration over F_p^2
    for (const auto& c : g.components) {
      long val = g.valence_points(c.id);
      if (c.exceptional()) {
        z.terms.push_back({{c.id}, MPoly::constant(Rat(p + 1 - val))});
      } else {
        const MPoly& q = g.pieces[size_t(c.piece)];
        long n = long(brute_force_counts(q, p, 1).counts[0]);
        for (const auto& pt : g.special_points)
          if (eval(q, {{"x", pt.first}, {"y", pt.second}}) == 0) --n;
        z.terms.push_back({{c.id}, MPoly::constant(Rat(n))});
      }
    }
    for (const auto& e : g.edges)
      z.terms.push_back({{e.a, e.b}, MPoly::constant(Rat(e.points))});
    MPoly prod = MPoly::constant(Rat(1));
    for (const auto& q : g.pieces) prod = prod * q;
    long curve = long(brute_force_counts(prod, p, 1).counts[0]);
    z.terms.push_back({{}, MPoly::constant(Rat(p) * Rat(p) - Rat(curve))});
  }

  // expansion over the common denominator, then exact cancellation
  std::set<int> used;
  for (const auto& t : z.terms) used.insert(t.comps.begin(), t.comps.end());
  const MPoly pm1 = z.symbolic ? pvar - MPoly::constant(Rat(1)) : MPoly::constant(Rat(p - 1));
  z.num = MPoly::zero();
  for (const auto& t : z.terms) {
    MPoly m = t.count * mp_pow(pm1, unsigned(t.comps.size()));
    Int sumN(0);
    for (int id : t.comps) sumN += z.data[id].second;
    m = m * mp_pow(T, unsigned(to_long(sumN)));
    for (int id : used)
      if (std::find(t.comps.begin(), t.comps.end(), id) == t.comps.end())
        m = m * key_poly(z.data[id], z.symbolic, p);
    z.num = z.num + m;
  }
  for (int id : used) z.den[z.data[id]] += 1;
  for (auto it = z.den.begin(); it != z.den.end();) {
    MPoly f = key_poly(it->first, z.symbolic, p);
    while (it->second > 0) {
      auto q = divexact(z.num, f);
      if (!q) break;
      z.num = *q;
      --it->second;
    }
    it = it->second == 0 ? z.den.erase(it) : ++it;
  }
  return z;
}

std::vector<Rat> series_in_T(const PadicZeta& z, int imax) {
  const Rat pr(z.p);
  std::vector<Rat> acc(size_t(imax) + 1, Rat(0));
  for (const auto& t : z.terms) {
    Rat c = t.count.is_constant() ? t.count.constant_value() : eval(t.count, {{"p", pr}});
    std::vector<Rat> cur(size_t(imax) + 1, Rat(0));
    cur[0] = c * rat_pow(pr, z.pshift);
    for (int id : t.comps) {
      const auto& [nu, N] = z.data.at(id);
      long n = to_long(nu), bigN = to_long(N);
      std::vector<Rat> nxt(size_t(imax) + 1, Rat(0));
      for (int j = 0; j <= imax; ++j) {
        if (cur[size_t(j)] == 0) continue;
        for (long k = 1; j + bigN * k <= imax; ++k)
          nxt[size_t(j + bigN * k)] += cur[size_t(j)] * (pr - 1) * rat_pow(pr, -n * k);
      }
      cur = nxt;
    }
    for (int j = 0; j <= imax; ++j) acc[size_t(j)] += cur[size_t(j)];
  }
  return acc;
}

std::vector<Rat> predicted_counts(const PadicZeta& z, int imax) {
  std::vector<Rat> zs = series_in_T(z, imax);
  const Rat pr(z.p);
  Rat V = z.local ? Rat(1) / (pr * pr) : Rat(1);
  std::vector<Rat> out;
  for (int i = 1; i <= imax; ++i) {
    V = V - zs[size_t(i - 1)];
    out.push_back(V * rat_pow(pr, 2 * i));
  }
  return out;
}

RatFunc padic_to_topological(const PadicZeta& z) {
  if (!z.symbolic)
    throw error(errc::Unsupported, "p -> 1 limit needs the symbolic local form");
  const std::vector<std::string> vn{"s"};
  RatFunc acc = RatFunc::zero(vn);
  for (const auto& t : z.terms) {
    Rat chi = eval(t.count, {{"p", Rat(1)}});
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

PadicVerify verify_padic(const MPoly& f, long p, int imax, std::uint64_t budget) {
  PadicVerify v;
  v.p = p;
  v.imax = imax;
  v.ok = true;

  auto compare = [&](const char* side, const std::vector<Rat>& pred,
                     const std::vector<Rat>& act) {
    for (int i = 0; i < imax; ++i)
      if (pred[size_t(i)] != act[size_t(i)]) {
        v.ok = false;
        v.notes.push_back(std::string(side) + ": mod p^" + std::to_string(i + 1) +
                          " predicted " + to_string(pred[size_t(i)]) + ", counted " +
                          to_string(act[size_t(i)]));
      }
  };
  auto run = [&](const ResolutionGraph& g, bool restricted, std::vector<Rat>& pred,
                 std::vector<Rat>& act, const char* side) {
    GoodPrimeReport rep = good_prime_check(g, p);
    for (const auto& s : rep.suspects) v.notes.push_back(std::string(side) + " suspect: " + s);
    if (!rep.usable()) {
      for (const auto& s : rep.failures) v.notes.push_back(std::string(side) + " failure: " + s);
      v.ok = false;
      return;
    }
    PadicZeta z = denef_zeta(g, p);
    pred = predicted_counts(z, imax);
    CountSeries bc = brute_force_counts(f, p, imax, restricted, budget);
    for (std::uint64_t n : bc.counts) act.push_back(Rat(long(n)));
    compare(side, pred, act);
  };

  run(resolve_affine(global_of(f)), false, v.predicted_global, v.actual_global, "global");
  if (eval(f, {{"x", Rat(0)}, {"y", Rat(0)}}) == 0)
    run(resolve_germ(germ_of(f)), true, v.predicted_local, v.actual_local, "local");
  else
    v.notes.push_back("f(0,0) != 0: no local check");
  return v;
}

std::string to_string(const PadicZeta& z) {
  std::ostringstream os;
  os << "p^" << z.pshift << " * (" << to_string(z.num) << ") / (";
  for (const auto& [key, e] : z.den) {
    os << "(p";
    if (key.first != 1) os << "^" << key.first.get_str();
    os << " - T";
    if (key.second != 1) os << "^" << key.second.get_str();
    os << ")";
    if (e > 1) os << "^" << e;
  }
  os << ")";
  if (!z.symbolic) os << " at p = " << z.p;
  return os.str();
}

}  // namespace monolab
