#include "monolab/ratfunc.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace monolab {

RatFunc RatFunc::zero(std::vector<std::string> vnames) {
  RatFunc r;
  r.vnames = std::move(vnames);
  return r;
}

RatFunc RatFunc::from_constant(std::vector<std::string> vnames, const Rat& c) {
  RatFunc r;
  r.vnames = std::move(vnames);
  r.num = MPoly::constant(c);
  return r;
}

RatFunc RatFunc::term(std::vector<std::string> vnames, const Rat& chi,
                      const std::vector<LinForm>& factors) {
  RatFunc r;
  r.vnames = std::move(vnames);
  Rat scale = chi;
  for (LinForm f : factors) {
    if (f.is_zero()) throw error(errc::ZeroLinForm, "zero linear form in denominator");
    Rat c = f.canonicalize();
    scale /= c;
    r.den[f] += 1;
  }
  r.num = MPoly::constant(scale);
  if (scale == 0) r.den.clear();
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  assert(a.vnames == b.vnames);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFunc r;
  r.vnames = a.vnames;
  // common denominator: max exponent per factor
  r.den = a.den;
  for (auto& [f, e] : b.den) {
    auto it = r.den.find(f);
    if (it == r.den.end()) r.den[f] = e;
    else it->second = std::max(it->second, e);
  }
  MPoly na = a.num, nb = b.num;
  for (auto& [f, e] : r.den) {
    auto ia = a.den.find(f);
    auto ib = b.den.find(f);
    int ea = e - (ia == a.den.end() ? 0 : ia->second);
    int eb = e - (ib == b.den.end() ? 0 : ib->second);
    if (ea) na = na * mp_pow(f.to_mpoly(r.vnames), unsigned(ea));
    if (eb) nb = nb * mp_pow(f.to_mpoly(r.vnames), unsigned(eb));
  }
  r.num = na + nb;
  if (r.num.is_zero()) r.den.clear();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (Rat(-1) * b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  assert(a.vnames == b.vnames);
  RatFunc r;
  r.vnames = a.vnames;
  if (a.is_zero() || b.is_zero()) return r;
  r.num = a.num * b.num;
  r.den = a.den;
  for (auto& [f, e] : b.den) r.den[f] += e;
  return r;
}

RatFunc operator*(const Rat& c, const RatFunc& a) {
  RatFunc r = a;
  r.num = c * r.num;
  if (r.num.is_zero()) r.den.clear();
  return r;
}

RatFunc normalize(const RatFunc& r) {
  RatFunc out = r;
  if (out.num.is_zero()) {
    out.den.clear();
    return out;
  }
  // fold constant factors into the numerator
  for (auto it = out.den.begin(); it != out.den.end();) {
    if (it->first.is_constant()) {
      out.num = rat_pow(Rat(1) / Rat(it->first.c0), it->second) * out.num;
      it = out.den.erase(it);
    } else {
      ++it;
    }
  }
  // cancel factors dividing the numerator
  for (auto it = out.den.begin(); it != out.den.end();) {
    MPoly f = it->first.to_mpoly(out.vnames);
    while (it->second > 0) {
      auto q = divexact(out.num, f);
      if (!q) break;
      out.num = *q;
      it->second -= 1;
    }
    if (it->second == 0) it = out.den.erase(it);
    else ++it;
  }
  return out;
}

static MPoly den_poly(const RatFunc& r) {
  MPoly d = MPoly::constant(1);
  for (auto& [f, e] : r.den) d = d * mp_pow(f.to_mpoly(r.vnames), unsigned(e));
  return d;
}

bool rf_equal(const RatFunc& a, const RatFunc& b) {
  return a.num * den_poly(b) == b.num * den_poly(a);
}

std::optional<Rat> rf_eval(const RatFunc& r, const std::vector<Rat>& point) {
  std::map<std::string, Rat> pt;
  for (size_t i = 0; i < r.vnames.size(); ++i)
    pt[r.vnames[i]] = i < point.size() ? point[i] : Rat(0);
  Rat d(1);
  for (auto& [f, e] : r.den) {
    Rat v = f.eval(point);
    if (v == 0) return std::nullopt;
    d *= rat_pow(v, e);
  }
  return eval(r.num, pt) / d;
}

std::string to_string(const RatFunc& r) {
  if (r.num.is_zero()) return "0";
  // pull the coefficient denominators out as an integer prefix of the
  // denominator so the display stays integral, matching (8+7s)/((1+s)(8+15s))
  Int pref(1);
  for (auto& [e, c] : r.num.terms) pref = int_lcm(pref, den(c));
  MPoly shown = Rat(pref) * r.num;
  std::ostringstream os;
  // implicit multiplication in the display: 8+7s, not 8+7*s
  std::string ns = to_string(shown);
  ns.erase(std::remove(ns.begin(), ns.end(), '*'), ns.end());
  if (r.den.empty() && pref == 1) return ns;
  if (shown.terms.size() > 1) os << "(" << ns << ")";
  else os << ns;
  os << "/";
  std::ostringstream ds;
  int pieces = (pref != 1 ? 1 : 0) + int(r.den.size());
  if (pref != 1) ds << pref.get_str();
  bool exponents = false;
  for (auto& [f, e] : r.den) {
    ds << "(" << f.to_string(r.vnames) << ")";
    if (e > 1) {
      ds << "^" << e;
      exponents = true;
    }
  }
  if (pieces > 1 || (pieces == 1 && pref != 1) || exponents) {
    // multiple pieces (or a bare integer) get wrapped
    if (r.den.size() == 1 && pref == 1) os << ds.str();
    else os << "(" << ds.str() << ")";
  } else {
    os << ds.str();
  }
  return os.str();
}

std::vector<Rat> series_expand(const RatFunc& r, int order) {
  if (r.vnames.size() != 1)
    throw std::invalid_argument("series_expand: single-variable functions only");
  if (order < 0) throw std::invalid_argument("series_expand: negative order");
  size_t n = size_t(order) + 1;
  std::vector<Rat> acc(n, Rat(0));
  // numerator coefficients
  auto nc = coeffs_in(r.num, r.vnames[0]);
  for (size_t i = 0; i < nc.size() && i < n; ++i) acc[i] = nc[i].constant_value();
  for (auto& [f, e] : r.den) {
    Rat c0(f.c0);
    Rat c1 = f.cs.empty() ? Rat(0) : Rat(f.cs[0]);
    if (c0 == 0) throw error(errc::Unsupported, "non-expandable at origin");
    for (int rep = 0; rep < e; ++rep) {
      // multiply acc by 1/(c0 + c1 v) = (1/c0) * sum (-c1/c0)^k v^k
      Rat ratio = -c1 / c0;
      std::vector<Rat> next(n, Rat(0));
      // next[k] = (1/c0) * sum_{j<=k} acc[j] * ratio^(k-j)
      for (size_t k = 0; k < n; ++k) {
        Rat sum(0);
        Rat pw(1);
        for (size_t j = k + 1; j-- > 0;) {
          sum += acc[j] * pw;
          pw *= ratio;
        }
        next[k] = sum / c0;
      }
      acc = next;
    }
  }
  return acc;
}

std::vector<PolePoint> pole_data(const RatFunc& r) {
  if (r.vnames.size() != 1)
    throw std::invalid_argument("pole_data: single-variable functions only");
  RatFunc f = normalize(r);
  std::vector<PolePoint> out;
  std::map<std::string, Rat> pt;
  for (auto& [fac, e] : f.den) {
    if (fac.is_constant() || fac.cs.empty() || fac.cs[0] == 0) continue;
    PolePoint p;
    p.s0 = make_rat(-fac.c0, fac.cs[0]);
    p.order = e;
    // leading Laurent coefficient: num(s0) / (c1^e * prod_others L_j(s0)^{e_j})
    pt[f.vnames[0]] = p.s0;
    Rat lead = eval(f.num, pt);
    lead /= rat_pow(Rat(fac.cs[0]), e);
    for (auto& [other, eo] : f.den) {
      if (other == fac) continue;
      lead /= rat_pow(other.eval({p.s0}), eo);
    }
    p.leading = lead;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.s0 < b.s0; });
  return out;
}

}  // namespace monolab
