#include "monolab/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace monolab {

int var_rank(const std::string& name) {
  if (name == "x") return 0;
  if (name == "y") return 1;
  if (name == "s") return 10;
  if (name.size() >= 2 && name[0] == 's') {
    bool digits = true;
    for (size_t i = 1; i < name.size(); ++i) digits = digits && isdigit((unsigned char)name[i]);
    if (digits) return 10 + atoi(name.c_str() + 1);
  }
  if (name == "T") return 100;
  if (name == "t") return 101;
  if (name == "L") return 102;
  if (name == "p") return 103;
  return 1000;  // unknown: after everything, ties broken by name below
}

static bool var_less(const std::string& a, const std::string& b) {
  int ra = var_rank(a), rb = var_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

MPoly MPoly::constant(const Rat& c) {
  MPoly p;
  if (c != 0) p.terms[{}] = c;
  return p;
}

MPoly MPoly::var(const std::string& name) {
  MPoly p;
  p.vars = {name};
  p.terms[{1}] = 1;
  return p;
}

bool MPoly::is_constant() const {
  if (terms.empty()) return true;
  if (terms.size() > 1) return false;
  for (int e : terms.begin()->first)
    if (e) return false;
  return true;
}

Rat MPoly::constant_value() const {
  if (terms.empty()) return Rat(0);
  assert(is_constant());
  return terms.begin()->second;
}

void MPoly::prune() {
  if (vars.empty()) return;
  std::vector<bool> used(vars.size(), false);
  for (auto& [e, c] : terms)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  bool all = true;
  for (bool u : used) all = all && u;
  if (all) return;
  std::vector<std::string> nv;
  std::vector<size_t> keep;
  for (size_t i = 0; i < vars.size(); ++i)
    if (used[i]) {
      nv.push_back(vars[i]);
      keep.push_back(i);
    }
  std::map<std::vector<int>, Rat> nt;
  for (auto& [e, c] : terms) {
    std::vector<int> ne(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
    nt[ne] = c;
  }
  vars = nv;
  terms = nt;
}

// Re-express p on the variable list nv (which must contain all of p's vars).
static MPoly remap(const MPoly& p, const std::vector<std::string>& nv) {
  if (p.vars == nv) return p;
  std::vector<int> pos(p.vars.size());
  for (size_t i = 0; i < p.vars.size(); ++i) {
    auto it = std::find(nv.begin(), nv.end(), p.vars[i]);
    assert(it != nv.end());
    pos[i] = int(it - nv.begin());
  }
  MPoly q;
  q.vars = nv;
  for (auto& [e, c] : p.terms) {
    std::vector<int> ne(nv.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    q.terms[ne] = c;
  }
  return q;
}

static std::vector<std::string> merged_vars(const MPoly& a, const MPoly& b) {
  std::vector<std::string> v = a.vars;
  for (auto& s : b.vars)
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
  std::sort(v.begin(), v.end(), var_less);
  return v;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  auto nv = merged_vars(a, b);
  MPoly x = remap(a, nv), y = remap(b, nv);
  for (auto& [e, c] : y.terms) {
    auto it = x.terms.find(e);
    if (it == x.terms.end()) {
      x.terms[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) x.terms.erase(it);
    }
  }
  x.prune();
  return x;
}

MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly::zero();
  auto nv = merged_vars(a, b);
  MPoly x = remap(a, nv), y = remap(b, nv);
  MPoly r;
  r.vars = nv;
  for (auto& [ea, ca] : x.terms)
    for (auto& [eb, cb] : y.terms) {
      std::vector<int> e(nv.size());
      for (size_t i = 0; i < nv.size(); ++i) e[i] = ea[i] + eb[i];
      Rat& slot = r.terms[e];
      slot += ca * cb;
      if (slot == 0) r.terms.erase(e);
    }
  r.prune();
  return r;
}

MPoly operator*(const Rat& c, const MPoly& a) {
  if (c == 0) return MPoly::zero();
  MPoly r = a;
  for (auto& [e, v] : r.terms) v *= c;
  return r;
}

MPoly mp_pow(const MPoly& a, unsigned e) {
  MPoly r = MPoly::constant(1);
  MPoly base = a;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

static int tdeg(const std::vector<int>& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

int total_degree(const MPoly& a) {
  int d = -1;
  for (auto& [e, c] : a.terms) d = std::max(d, tdeg(e));
  return d;
}

int low_degree(const MPoly& a) {
  int d = -1;
  for (auto& [e, c] : a.terms) {
    int t = tdeg(e);
    if (d < 0 || t < d) d = t;
  }
  return d;
}

int degree_in(const MPoly& a, const std::string& v) {
  auto it = std::find(a.vars.begin(), a.vars.end(), v);
  if (it == a.vars.end()) return a.is_zero() ? -1 : 0;
  size_t idx = it - a.vars.begin();
  int d = a.is_zero() ? -1 : 0;
  for (auto& [e, c] : a.terms) d = std::max(d, e[idx]);
  return d;
}

MPoly homogeneous_part(const MPoly& a, int d) {
  MPoly r;
  r.vars = a.vars;
  for (auto& [e, c] : a.terms)
    if (tdeg(e) == d) r.terms[e] = c;
  r.prune();
  return r;
}

MPoly derivative(const MPoly& a, const std::string& v) {
  auto it = std::find(a.vars.begin(), a.vars.end(), v);
  if (it == a.vars.end()) return MPoly::zero();
  size_t idx = it - a.vars.begin();
  MPoly r;
  r.vars = a.vars;
  for (auto& [e, c] : a.terms) {
    if (e[idx] == 0) continue;
    std::vector<int> ne = e;
    ne[idx] -= 1;
    r.terms[ne] = c * Rat(e[idx]);
  }
  r.prune();
  return r;
}

MPoly subst(const MPoly& a, const std::string& v, const MPoly& value) {
  auto it = std::find(a.vars.begin(), a.vars.end(), v);
  if (it == a.vars.end()) return a;
  size_t idx = it - a.vars.begin();
  // Collect by exponent of v, then Horner over the powers.
  std::map<int, MPoly> layers;
  for (auto& [e, c] : a.terms) {
    std::vector<int> ne = e;
    ne[idx] = 0;
    MPoly& layer = layers[e[idx]];
    if (layer.vars.empty() && layer.terms.empty()) layer.vars = a.vars;
    Rat& slot = layer.terms[ne];
    slot += c;
    if (slot == 0) layer.terms.erase(ne);
  }
  for (auto& [k, layer] : layers) layer.prune();
  MPoly r;
  int prev = -1;
  for (auto lit = layers.rbegin(); lit != layers.rend(); ++lit) {
    if (prev >= 0) r = r * mp_pow(value, unsigned(prev - lit->first));
    r = r + lit->second;
    prev = lit->first;
  }
  if (prev > 0) r = r * mp_pow(value, unsigned(prev));
  return r;
}

MPoly subst(const MPoly& a, const std::string& v, const Rat& value) {
  return subst(a, v, MPoly::constant(value));
}

Rat eval(const MPoly& a, const std::map<std::string, Rat>& point) {
  Rat acc(0);
  for (auto& [e, c] : a.terms) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      auto it = point.find(a.vars[i]);
      if (it == point.end())
        throw std::invalid_argument("eval: missing value for " + a.vars[i]);
      t *= rat_pow(it->second, e[i]);
    }
    acc += t;
  }
  return acc;
}

std::vector<MPoly> coeffs_in(const MPoly& a, const std::string& v) {
  int d = degree_in(a, v);
  if (d < 0) return {};
  std::vector<MPoly> out(size_t(d) + 1);
  auto it = std::find(a.vars.begin(), a.vars.end(), v);
  if (it == a.vars.end()) {
    out[0] = a;
    return out;
  }
  size_t idx = it - a.vars.begin();
  for (auto& [e, c] : a.terms) {
    std::vector<int> ne = e;
    ne[idx] = 0;
    MPoly& slot = out[e[idx]];
    if (slot.vars.empty()) slot.vars = a.vars;
    slot.terms[ne] = c;
  }
  for (auto& p : out) p.prune();
  return out;
}

MPoly from_coeffs_in(const std::string& v, const std::vector<MPoly>& coeffs) {
  MPoly r;
  MPoly xv = MPoly::var(v);
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) r = r + coeffs[i] * mp_pow(xv, unsigned(i));
  return r;
}

Rat content(const MPoly& a) {
  if (a.is_zero()) return Rat(0);
  Int g(0), l(1);
  for (auto& [e, c] : a.terms) {
    g = int_gcd(g, num(c));
    l = int_lcm(l, den(c));
  }
  return make_rat(g, l);
}

Rat signed_content(const MPoly& a) {
  Rat c = content(a);
  if (c == 0) return c;
  // sign reference: leading term with the highest-ranked variable dominant,
  // so primitive parts of germs keep their monic-in-y shape (y^2-x^3, not
  // x^3-y^2)
  auto lead = std::max_element(
      a.terms.begin(), a.terms.end(), [](const auto& s, const auto& t) {
        return std::lexicographical_compare(s.first.rbegin(), s.first.rend(),
                                            t.first.rbegin(), t.first.rend());
      });
  if (lead->second < 0) c = -c;
  return c;
}

MPoly primitive_part(const MPoly& a) {
  Rat c = signed_content(a);
  if (c == 0) return a;
  return (Rat(1) / c) * a;
}

// ---- exact multivariate division ----------------------------------------

static bool exp_divides(const std::vector<int>& den, const std::vector<int>& num) {
  for (size_t i = 0; i < den.size(); ++i)
    if (den[i] > num[i]) return false;
  return true;
}

std::optional<MPoly> divexact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divexact: zero divisor");
  if (a.is_zero()) return MPoly::zero();
  auto nv = merged_vars(a, b);
  MPoly r = remap(a, nv), d = remap(b, nv);
  auto lead = d.terms.rbegin();
  MPoly q;
  q.vars = nv;
  while (!r.terms.empty()) {
    auto rl = r.terms.rbegin();
    if (!exp_divides(lead->first, rl->first)) return std::nullopt;
    std::vector<int> e(nv.size());
    for (size_t i = 0; i < nv.size(); ++i) e[i] = rl->first[i] - lead->first[i];
    Rat c = rl->second / lead->second;
    q.terms[e] = c;
    // r -= c * x^e * d
    for (auto& [ed, cd] : d.terms) {
      std::vector<int> ne(nv.size());
      for (size_t i = 0; i < nv.size(); ++i) ne[i] = ed[i] + e[i];
      Rat& slot = r.terms[ne];
      slot -= c * cd;
      if (slot == 0) r.terms.erase(ne);
    }
  }
  q.prune();
  return q;
}

// ---- gcd ------------------------------------------------------------------

static MPoly normalize_gcd(const MPoly& g) {
  if (g.is_zero()) return g;
  return primitive_part(g);
}

// pseudo-remainder of a by b in variable v (deg_v a >= deg_v b >= 1)
static MPoly prem(const MPoly& a, const MPoly& b, const std::string& v) {
  auto ca = coeffs_in(a, v);
  auto cb = coeffs_in(b, v);
  int da = int(ca.size()) - 1, db = int(cb.size()) - 1;
  MPoly lead = cb[db];
  MPoly r = a;
  MPoly xv = MPoly::var(v);
  while (true) {
    auto cr = coeffs_in(r, v);
    int dr = int(cr.size()) - 1;
    if (r.is_zero() || dr < db) break;
    // r = lead * r - cr[dr] * x^(dr-db) * b
    r = lead * r - cr[dr] * mp_pow(xv, unsigned(dr - db)) * b;
  }
  (void)da;
  return r;
}

MPoly gcd_poly(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return normalize_gcd(b);
  if (b.is_zero()) return normalize_gcd(a);
  if (a.is_constant() || b.is_constant()) return MPoly::constant(1);
  // main variable: highest-ranked variable present in either
  std::vector<std::string> nv = merged_vars(a, b);
  std::string v = nv.back();
  int da = degree_in(a, v), db = degree_in(b, v);
  if (da == 0) {
    // a does not involve v: gcd(a, content_v(b))
    auto cb = coeffs_in(b, v);
    MPoly g = a;
    for (auto& c : cb) {
      g = gcd_poly(g, c);
      if (g.is_constant()) return MPoly::constant(1);
    }
    return normalize_gcd(g);
  }
  if (db == 0) return gcd_poly(b, a);

  auto content_v = [&](const MPoly& p) {
    auto cs = coeffs_in(p, v);
    MPoly g = MPoly::zero();
    for (auto& c : cs) g = gcd_poly(g, c);
    return g;
  };
  MPoly ca = content_v(a), cb = content_v(b);
  MPoly pa = *divexact(a, ca), pb = *divexact(b, cb);
  if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    MPoly r = prem(pa, pb, v);
    pa = pb;
    if (r.is_zero()) {
      pb = MPoly::zero();
    } else {
      MPoly cr = content_v(r);
      pb = *divexact(r, cr);
    }
  }
  MPoly g = gcd_poly(ca, cb) * pa;
  return normalize_gcd(g);
}

// ---- resultant (Bareiss on the Sylvester matrix) ---------------------------

MPoly resultant(const MPoly& a, const MPoly& b, const std::string& v) {
  auto ca = coeffs_in(a, v);
  auto cb = coeffs_in(b, v);
  int m = int(ca.size()) - 1, n = int(cb.size()) - 1;
  if (m < 0 || n < 0) return MPoly::zero();  // resultant with the zero polynomial
  if (m == 0 && n == 0) return MPoly::constant(1);
  if (m == 0) return mp_pow(ca[0], unsigned(n));
  if (n == 0) return mp_pow(cb[0], unsigned(m));
  int N = m + n;
  std::vector<std::vector<MPoly>> M(N, std::vector<MPoly>(N, MPoly::zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = ca[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = cb[n - j];
  // fraction-free elimination
  MPoly divisor = MPoly::constant(1);
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (M[k][k].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < N; ++i)
        if (!M[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return MPoly::zero();
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        MPoly t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        auto q = divexact(t, divisor);
        assert(q.has_value());
        M[i][j] = *q;
      }
      M[i][k] = MPoly::zero();
    }
    divisor = M[k][k];
  }
  MPoly r = M[N - 1][N - 1];
  if (sign < 0) r = -r;
  return r;
}

// ---- squarefree splitting ---------------------------------------------------

static MPoly gcd_with_partials(const MPoly& f) {
  MPoly g = f;
  for (auto& v : f.vars) g = gcd_poly(g, derivative(f, v));
  return g;
}

std::vector<std::pair<MPoly, int>> squarefree_split(const MPoly& f) {
  std::vector<std::pair<MPoly, int>> out;
  if (f.is_zero() || f.is_constant()) {
    if (!(f.constant_value() == 1)) out.push_back({f, 0});
    return out;
  }
  Rat c = signed_content(f);
  MPoly cur = primitive_part(f);
  // w_k = product of distinct factors of multiplicity >= k
  std::vector<MPoly> w;
  while (!cur.is_constant()) {
    MPoly g = gcd_with_partials(cur);  // = prod p_i^{e_i - 1}
    w.push_back(*divexact(cur, g));
    cur = g;
  }
  c = c * cur.constant_value();
  for (size_t k = 0; k < w.size(); ++k) {
    MPoly exact = (k + 1 < w.size()) ? *divexact(w[k], w[k + 1]) : w[k];
    if (!exact.is_constant()) out.push_back({exact, int(k) + 1});
    else c = c * rat_pow(exact.constant_value(), long(k) + 1);
  }
  if (!(c == 1)) out.push_back({MPoly::constant(c), 0});
  return out;
}

MPoly squarefree_part(const MPoly& f) {
  if (f.is_zero() || f.is_constant()) return f;
  MPoly g = gcd_with_partials(primitive_part(f));
  return *divexact(primitive_part(f), g);
}

// ---- rational roots ---------------------------------------------------------

RationalRoots upoly_rational_roots(const MPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("upoly_rational_roots: zero polynomial");
  if (a.vars.size() > 1) throw std::invalid_argument("upoly_rational_roots: not univariate");
  RationalRoots rr;
  if (a.is_constant()) return rr;
  std::string v = a.vars[0];
  MPoly p = primitive_part(a);
  // strip root 0
  auto cs = coeffs_in(p, v);
  int z = 0;
  while (cs[z].is_zero()) ++z;
  if (z > 0) {
    rr.roots.push_back({Rat(0), z});
    cs.erase(cs.begin(), cs.begin() + z);
  }
  int d = int(cs.size()) - 1;
  if (d == 0) return rr;
  Int a0 = num(cs[0].constant_value());
  Int ad = num(cs[d].constant_value());
  std::vector<Rat> candidates;
  for (const Int& pnum : divisors(a0))
    for (const Int& qden : divisors(ad)) {
      Rat r = make_rat(pnum, qden);
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  auto eval_at = [&](const std::vector<MPoly>& c, const Rat& x) {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->constant_value();
    return acc;
  };
  auto deflate = [&](std::vector<MPoly>& c, const Rat& x) {
    // synthetic division by (v - x); caller guarantees x is a root
    std::vector<MPoly> q(c.size() - 1);
    Rat carry = c.back().constant_value();
    for (int i = int(c.size()) - 2; i >= 0; --i) {
      q[i] = MPoly::constant(carry);
      carry = c[i].constant_value() + carry * x;
    }
    assert(carry == 0);
    c = q;
  };
  for (const Rat& cand : candidates) {
    if (cs.size() <= 1) break;
    int mult = 0;
    while (cs.size() > 1 && eval_at(cs, cand) == 0) {
      deflate(cs, cand);
      ++mult;
    }
    if (mult) rr.roots.push_back({cand, mult});
  }
  std::sort(rr.roots.begin(), rr.roots.end(),
            [](auto& l, auto& r) { return l.first < r.first; });
  rr.remainder_degree = int(cs.size()) - 1;
  return rr;
}

// ---- printing ---------------------------------------------------------------

static std::string mono_string(const std::vector<std::string>& vars,
                               const std::vector<int>& e) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!first) os << "*";
    os << vars[i];
    if (e[i] > 1) os << "^" << e[i];
    first = false;
  }
  return os.str();
}

std::string to_string(const MPoly& a) {
  if (a.terms.empty()) return "0";
  // ascending total degree, then lex-descending exponents
  std::vector<const std::pair<const std::vector<int>, Rat>*> ts;
  for (auto& t : a.terms) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* l, auto* r) {
    int dl = tdeg(l->first), dr = tdeg(r->first);
    if (dl != dr) return dl < dr;
    return l->first > r->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    const Rat& c = t->second;
    std::string mono = mono_string(a.vars, t->first);
    Rat ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      if (mono.empty()) os << to_string(ac);
      else if (ac == 1 && c > 0) os << mono;          // "x"
      else os << to_string(ac) << "*" << mono;        // "-1*x", "2*x"
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
      if (mono.empty()) os << to_string(ac);
      else if (ac == 1) os << mono;
      else os << to_string(ac) << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace monolab
