#include <monolab/resolve.hpp>

#include <algorithm>
#include <cassert>
#include <set>
#include <tuple>

namespace monolab {

namespace {

// ---- rational square roots and tangent lines -------------------------------

bool rat_sqrt(const Rat& d, Rat& out) {
  if (d < 0) return false;
  mpz_class num = d.get_num(), den = d.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  out = make_rat(rn, rd);
  return true;
}

// A direction a*x + b*y through the origin, normalized to coprime integers
// with the first nonzero coefficient positive.
struct Line {
  Int a, b;
  bool operator==(const Line& o) const { return a == o.a && b == o.b; }
};

Line normalize_line(const Rat& a, const Rat& b) {
  Rat scale = a != 0 ? a : b;  // first nonzero coefficient becomes +1
  Rat na = a / scale, nb = b / scale;
  Int m = int_lcm(na.get_den(), nb.get_den());
  Rat va = na * m, vb = nb * m;  // integral now
  Int ia = va.get_num(), ib = vb.get_num();
  Int g = int_gcd(ia, ib);
  return Line{ia / g, ib / g};
}

Line line_of(const MPoly& linear) {
  Rat a = eval(linear, {{"x", Rat(1)}, {"y", Rat(0)}});
  Rat b = eval(linear, {{"x", Rat(0)}, {"y", Rat(1)}});
  return normalize_line(a, b);
}

// Factorization of a nonzero homogeneous quadratic A x^2 + B xy + C y^2 over Q.
struct Quad {
  enum class Kind { Distinct, Double, Irrational } kind;
  Line l1, l2;
};

Quad factor_quadratic(const MPoly& q) {
  Rat A = eval(q, {{"x", Rat(1)}, {"y", Rat(0)}});
  Rat C = eval(q, {{"x", Rat(0)}, {"y", Rat(1)}});
  Rat B = eval(q, {{"x", Rat(1)}, {"y", Rat(1)}}) - A - C;
  if (A == 0) {
    Line ly = normalize_line(Rat(0), Rat(1));        // the factor y
    if (B == 0) return {Quad::Kind::Double, ly, ly}; // C y^2
    return {Quad::Kind::Distinct, ly, normalize_line(B, C)};
  }
  Rat D = B * B - 4 * A * C, s;
  if (D == 0) {
    Line l = normalize_line(2 * A, B);
    return {Quad::Kind::Double, l, l};
  }
  if (!rat_sqrt(D, s)) return {Quad::Kind::Irrational, {}, {}};
  // A(x - r1 y)(x - r2 y) with the r's roots of A r^2 + B r + C
  Rat r1 = (-B + s) / (2 * A), r2 = (-B - s) / (2 * A);
  return {Quad::Kind::Distinct, normalize_line(Rat(1), -r1), normalize_line(Rat(1), -r2)};
}

// ---- univariate root bookkeeping --------------------------------------------

struct RootSplit {
  std::vector<std::pair<Rat, int>> roots;  // ascending
  MPoly cofactor;                          // rational-root-free part
};

RootSplit root_split(const MPoly& u, const std::string& var) {
  RootSplit out;
  out.cofactor = u;
  if (u.is_constant()) return out;
  auto rr = upoly_rational_roots(u);
  out.roots = rr.roots;
  for (const auto& [t, e] : rr.roots) {
    MPoly lin = MPoly::var(var) - MPoly::constant(t);
    out.cofactor = *divexact(out.cofactor, mp_pow(lin, unsigned(e)));
  }
  return out;
}

MPoly shift_xy(const MPoly& p, const Rat& a, const Rat& b) {
  MPoly q = subst(p, "x", MPoly::var("x") + MPoly::constant(a));
  return subst(q, "y", MPoly::var("y") + MPoly::constant(b));
}

// Blow-up chart maps with the exceptional power divided out.
MPoly chart_x(const MPoly& g, int m) {
  MPoly t = subst(g, "y", MPoly::var("x") * MPoly::var("y"));
  return *divexact(t, mp_pow(MPoly::var("x"), unsigned(m)));
}
MPoly chart_y(const MPoly& g, int m) {
  MPoly t = subst(g, "x", MPoly::var("x") * MPoly::var("y"));
  return *divexact(t, mp_pow(MPoly::var("y"), unsigned(m)));
}

// ---- the blow-up engine ------------------------------------------------------

struct LocalPiece {
  int k;     // piece index
  MPoly g;   // local equation, vanishing at the site origin
};

struct Site {
  std::optional<int> exc_u, exc_v;  // exceptional components along {x=0}, {y=0}
  std::vector<LocalPiece> pieces;
  std::string where;
};

// How a strict branch sits in the final configuration.
struct BranchEvent {
  int piece = -1;
  int exc = -1;        // exceptional component it crosses, -1 if none
  int partner = -1;    // other piece at an exceptional-free crossing
  bool pair = false;   // two branches crossing each other
  bool solitary = false;
  int points = 1;      // geometric branches represented
  bool rational = true;
  std::string at;
};

class Engine {
 public:
  Engine(ResolutionGraph& g, int& budget_left, bool branch_convention)
      : g_(g), budget_(budget_left), branch_convention_(branch_convention) {}

  std::vector<BranchEvent> events;
  std::map<int, Int> delta;  // piece -> accumulated m(m-1)/2 over centers

  void run(Site s) { resolve_site(std::move(s)); }

 private:
  ResolutionGraph& g_;
  int& budget_;
  bool branch_convention_;  // germ mode: a rational two-branch crossing is final

  void add_edge(int a, int b, int points, bool rational, const std::string& at) {
    Edge e;
    e.a = std::min(a, b);
    e.b = std::max(a, b);
    e.points = points;
    e.rational = rational;
    e.at = at;
    g_.edges.push_back(std::move(e));
  }

  void cert(const Site& s, int entities, const std::vector<int>& mults) {
    g_.site_certs.push_back(SiteCert{s.where, entities, true, mults});
  }

  void resolve_site(Site s) {
    int axes = (s.exc_u ? 1 : 0) + (s.exc_v ? 1 : 0);
    int mtot = 0;
    for (const auto& lp : s.pieces) mtot += mult_at_origin(lp.g);
    int M = axes + mtot;

    if (M <= 1) {
      // only reachable for the base point of a smooth germ
      if (mtot == 1 && axes == 0) {
        BranchEvent ev;
        ev.piece = s.pieces[0].k;
        ev.solitary = true;
        ev.at = s.where;
        events.push_back(std::move(ev));
        cert(s, 1, {1});
      }
      return;
    }

    if (M == 2) {
      // Tangent directions of everything through the point; SNC iff the two
      // directions are distinct rational lines.
      struct Ent {
        Line l;
        int exc = -1, piece = -1;
      };
      std::vector<Ent> ents;
      if (s.exc_u) ents.push_back({Line{1, 0}, *s.exc_u, -1});
      if (s.exc_v) ents.push_back({Line{0, 1}, *s.exc_v, -1});
      for (const auto& lp : s.pieces) {
        int m = mult_at_origin(lp.g);
        MPoly lf = lowest_form(lp.g);
        if (m == 1) {
          ents.push_back({line_of(lf), -1, lp.k});
        } else {
          // a single piece of multiplicity two and no axes
          Quad fq = factor_quadratic(lf);
          if (fq.kind == Quad::Kind::Irrational) {
            if (branch_convention_)
              throw error(errc::NonRationalCenter,
                          "two conjugate tangent directions at " + s.where);
            blow_up(s);  // branches separate over extensions of Q on their own
            return;
          }
          if (fq.kind == Quad::Kind::Double || !branch_convention_) {
            blow_up(s);
            return;
          }
          ents.push_back({fq.l1, -1, lp.k});
          ents.push_back({fq.l2, -1, lp.k});
        }
      }
      assert(ents.size() == 2);
      if (ents[0].l == ents[1].l) {  // tangential contact
        blow_up(s);
        return;
      }
      std::vector<int> mults;
      for (const auto& lp : s.pieces) mults.push_back(mult_at_origin(lp.g));
      cert(s, 2, mults);
      if (ents[0].exc >= 0 && ents[1].exc >= 0) {
        add_edge(ents[0].exc, ents[1].exc, 1, true, s.where);
      } else if (ents[0].exc >= 0 || ents[1].exc >= 0) {
        const Ent& e = ents[0].exc >= 0 ? ents[0] : ents[1];
        const Ent& p = ents[0].exc >= 0 ? ents[1] : ents[0];
        BranchEvent ev;
        ev.piece = p.piece;
        ev.exc = e.exc;
        ev.at = s.where;
        events.push_back(std::move(ev));
      } else {
        BranchEvent ev;
        ev.piece = ents[0].piece;
        ev.partner = ents[1].piece;
        ev.pair = true;
        ev.at = s.where;
        events.push_back(std::move(ev));
      }
      return;
    }

    blow_up(s);
  }

  void blow_up(const Site& s) {
    if (--budget_ < 0) throw error(errc::BudgetExceeded, "blow-up budget exhausted");

    std::vector<int> through;
    if (s.exc_u) through.push_back(*s.exc_u);
    if (s.exc_v) through.push_back(*s.exc_v);

    Component e;
    e.id = int(g_.components.size());
    e.kind = Component::Kind::Exceptional;
    e.N.assign(g_.pieces.size(), Int(0));
    Int nu(2);
    for (int i : through) {
      for (size_t k = 0; k < e.N.size(); ++k) e.N[k] += g_.components[i].N[k];
      nu += g_.components[i].nu - 1;
      g_.components[i].self_int -= 1;
    }
    BlowupRecord rec;
    rec.center = s.where;
    rec.through = through;
    for (const auto& lp : s.pieces) {
      int m = mult_at_origin(lp.g);
      e.N[lp.k] += m;
      rec.strict_mult += m;
      rec.piece_mult.push_back({lp.k, m});
      delta[lp.k] += Int(m) * (m - 1) / 2;
    }
    e.nu = nu;
    e.self_int = -1;
    e.birth_index = int(g_.blowup_log.size());
    e.name = "E" + std::to_string(e.birth_index + 1);
    rec.component = e.id;
    int new_id = e.id;
    g_.components.push_back(std::move(e));
    g_.blowup_log.push_back(std::move(rec));

    // chart X: (x,y) -> (x, xy); the new component is {x=0}, the old {x=0}
    // axis is only visible in chart Y
    struct Strict {
      int k;
      MPoly s;      // strict transform in chart X
      MPoly restr;  // restriction to the new component
    };
    std::vector<Strict> sx;
    for (const auto& lp : s.pieces) {
      int m = mult_at_origin(lp.g);
      MPoly t = chart_x(lp.g, m);
      sx.push_back({lp.k, t, subst(t, "x", Rat(0))});
    }

    std::set<Rat> pts;
    if (s.exc_v) pts.insert(Rat(0));  // corner with the old {y=0} axis
    for (auto& st : sx) {
      RootSplit rs = root_split(st.restr, "y");
      for (const auto& [t, mult] : rs.roots) pts.insert(t);
      if (!rs.cofactor.is_constant()) {
        // conjugate irrational crossings: certify they are simple and private
        if (!gcd_poly(rs.cofactor, derivative(rs.cofactor, "y")).is_constant())
          throw error(errc::NonRationalCenter,
                      "irrational tangential contact with " +
                          g_.components[new_id].name + " after " + s.where);
        for (auto& other : sx)
          if (other.k != st.k && !gcd_poly(rs.cofactor, other.restr).is_constant())
            throw error(errc::NonRationalCenter,
                        "two pieces meet at an irrational point of " +
                            g_.components[new_id].name + " after " + s.where);
        BranchEvent ev;
        ev.piece = st.k;
        ev.exc = new_id;
        ev.points = total_degree(rs.cofactor);
        ev.rational = false;
        ev.at = s.where + ":X(irr)";
        events.push_back(std::move(ev));
        cert(s, 2, {1});  // each conjugate point: one smooth transverse branch
      }
    }
    if (pts.size() > 1)
      g_.separation_sets.emplace_back(pts.begin(), pts.end());

    for (const Rat& t : pts) {
      Site child;
      child.exc_u = new_id;
      if (t == 0) child.exc_v = s.exc_v;
      child.where = s.where + ":X(v=" + to_string(t) + ")";
      for (auto& st : sx) {
        if (eval(st.restr, {{"x", Rat(0)}, {"y", t}}) != 0) continue;
        MPoly loc = t == 0 ? st.s : subst(st.s, "y", MPoly::var("y") + MPoly::constant(t));
        child.pieces.push_back({st.k, loc});
      }
      resolve_site(std::move(child));
    }

    // chart Y: (x,y) -> (xy, y); the new component is {y=0}; the old {x=0}
    // axis reappears as {x=0}
    Site cy;
    cy.exc_u = s.exc_u;
    cy.exc_v = new_id;
    cy.where = s.where + ":Y";
    for (const auto& lp : s.pieces) {
      int m = mult_at_origin(lp.g);
      MPoly t = chart_y(lp.g, m);
      if (eval(t, {{"x", Rat(0)}, {"y", Rat(0)}}) == 0) cy.pieces.push_back({lp.k, t});
    }
    if (cy.exc_u || !cy.pieces.empty()) resolve_site(std::move(cy));
  }
};

// Materialize branch events as per-branch strict vertices (germ mode).
void materialize_branches(ResolutionGraph& g, const std::vector<BranchEvent>& events) {
  int serial = 0;
  auto add_vertex = [&](int piece, int points, bool rational) {
    Component c;
    c.id = int(g.components.size());
    c.kind = Component::Kind::Strict;
    c.name = "S" + std::to_string(++serial);
    c.N.assign(g.pieces.size(), Int(0));
    c.N[piece] = 1;
    c.nu = 1;
    c.birth_index = c.id;
    c.piece = piece;
    c.branches = points;
    (void)rational;
    g.components.push_back(std::move(c));
    return int(g.components.size()) - 1;
  };
  for (const auto& ev : events) {
    if (ev.solitary) {
      add_vertex(ev.piece, 1, true);
    } else if (ev.pair) {
      int a = add_vertex(ev.piece, 1, true);
      int b = add_vertex(ev.partner, 1, true);
      Edge e;
      e.a = std::min(a, b);
      e.b = std::max(a, b);
      e.at = ev.at;
      g.edges.push_back(std::move(e));
    } else {
      int v = add_vertex(ev.piece, ev.points, ev.rational);
      Edge e;
      e.a = std::min(ev.exc, v);
      e.b = std::max(ev.exc, v);
      e.points = ev.points;
      e.rational = ev.rational;
      e.at = ev.at;
      g.edges.push_back(std::move(e));
    }
  }
}

void init_graph(ResolutionGraph& g, const CurveSystem& c) {
  PieceDecomposition d = decompose(c);
  for (const auto& f : c.factors) {
    g.labels.push_back(f.label);
    g.label_multiplicity.push_back(f.multiplicity);
  }
  g.pieces = d.pieces;
  g.piece_mult = d.mult;
}

}  // namespace

// ---- graph queries -----------------------------------------------------------

Int ResolutionGraph::N_label(const Component& c, int label) const {
  Int n(0);
  for (size_t k = 0; k < pieces.size(); ++k)
    n += Int(piece_mult[label][k]) * c.N[k];
  return n;
}

Int ResolutionGraph::N_total(const Component& c) const {
  Int n(0);
  for (size_t l = 0; l < labels.size(); ++l)
    n += Int(label_multiplicity[l]) * N_label(c, int(l));
  return n;
}

long ResolutionGraph::valence_points(int id) const {
  long v = 0;
  for (const auto& e : edges)
    if (e.a == id || e.b == id) v += e.points;
  return v;
}

long ResolutionGraph::chi_open(int id) const {
  const Component& c = components.at(size_t(id));
  if (c.exceptional()) return 2 - valence_points(id);
  if (germ_mode) return valence_points(id) == 0 ? 1 : 0;
  auto it = euler.chi_strict.find(id);
  if (!euler.have || it == euler.chi_strict.end())
    throw error(errc::MissingEulerData, "no Euler data for component " + c.name);
  return it->second;
}

std::vector<int> ResolutionGraph::fiber() const {
  std::vector<int> out;
  if (!germ_mode) return out;
  for (const auto& c : components)
    if (c.exceptional()) out.push_back(c.id);
  return out;
}

const Component& ResolutionGraph::by_name(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return c;
  throw std::invalid_argument("no component named " + name);
}

int ResolutionGraph::edge_between(int a, int b) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if ((edges[i].a == std::min(a, b)) && (edges[i].b == std::max(a, b)))
      return int(i);
  return -1;
}

int multiplicity_at(const MPoly& f, const Rat& x0, const Rat& y0) {
  if (f.is_zero()) throw std::invalid_argument("multiplicity_at: zero polynomial");
  return std::max(0, mult_at_origin(shift_xy(f, x0, y0)));
}

// ---- germ resolution -----------------------------------------------------------

ResolutionGraph resolve_germ(const CurveSystem& c, const ResolveOptions& opts) {
  if (!c.is_germ()) throw std::invalid_argument("resolve_germ needs a base point");
  ResolutionGraph g;
  g.germ_mode = true;
  g.base_point = *c.base_point;
  init_graph(g, c);

  const auto& [x0, y0] = g.base_point;
  bool vanishes = false;
  for (const auto& f : c.factors) {
    if (eval(f.poly, {{"x", x0}, {"y", y0}}) == 0)
      vanishes = true;
    else
      g.warnings.push_back("factor '" + f.label + "' is a unit at the base point; ignored");
  }
  if (!vanishes)
    throw error(errc::NotAGerm, "no factor vanishes at (" + to_string(x0) + "," +
                                    to_string(y0) + ")");

  Site root;
  root.where = "(" + to_string(x0) + "," + to_string(y0) + ")";
  for (size_t k = 0; k < g.pieces.size(); ++k) {
    MPoly loc = shift_xy(g.pieces[k], x0, y0);
    if (eval(loc, {{"x", Rat(0)}, {"y", Rat(0)}}) == 0)
      root.pieces.push_back({int(k), loc});
  }

  int budget = opts.budget;
  Engine eng(g, budget, /*branch_convention=*/true);
  eng.run(std::move(root));
  materialize_branches(g, eng.events);
  return g;
}

// ---- affine resolution -----------------------------------------------------------

namespace {

using Point = std::pair<Rat, Rat>;

// Common rational zeros of the univariate restrictions; throws when a
// nonconstant rational-root-free part remains (irrational special point).
void y_side(const MPoly& gy, const Rat& x0, std::set<Point>& out, const char* what) {
  if (gy.is_constant()) return;
  RootSplit rs = root_split(gy, "y");
  for (const auto& [t, e] : rs.roots) out.insert({x0, t});
  if (!rs.cofactor.is_constant())
    throw error(errc::NonRationalCenter,
                std::string(what) + " with irrational y-coordinate over x=" + to_string(x0));
}

MPoly restrict_x(const MPoly& p, const Rat& x0) { return subst(p, "x", x0); }

// Singular points of one piece that involves both variables.
void singular_points(const MPoly& p, std::set<Point>& out) {
  MPoly px = derivative(p, "x"), py = derivative(p, "y");
  MPoly r1 = resultant(p, px, "y");
  MPoly r2 = resultant(p, py, "y");
  MPoly h = gcd_poly(r1, r2);
  MPoly r3 = resultant(px, py, "y");
  if (!r3.is_zero()) h = gcd_poly(h, r3);
  if (h.is_zero())
    throw error(errc::NonRationalCenter, "degenerate singular locus of " + to_string(p));
  RootSplit rs = root_split(h, "x");
  for (const auto& [x0, e] : rs.roots) {
    MPoly gy = gcd_poly(gcd_poly(restrict_x(p, x0), restrict_x(px, x0)), restrict_x(py, x0));
    std::set<Point> cand;
    y_side(gy, x0, cand, "singular point");
    for (const auto& pt : cand)
      if (eval(px, {{"x", pt.first}, {"y", pt.second}}) == 0 &&
          eval(py, {{"x", pt.first}, {"y", pt.second}}) == 0)
        out.insert(pt);
  }
  if (!rs.cofactor.is_constant())
    throw error(errc::NonRationalCenter,
                "possibly irrational singular points of " + to_string(p) +
                    " (unresolved locus " + to_string(rs.cofactor) + ")");
}

// Pairwise intersections of two coprime pieces.
void crossing_points(const MPoly& a, const MPoly& b, std::set<Point>& out) {
  int day = degree_in(a, "y"), dby = degree_in(b, "y");
  if (day == 0 && dby == 0) return;  // coprime verticals never meet
  if (day == 0 || dby == 0) {
    const MPoly& vert = day == 0 ? a : b;  // pure in x
    const MPoly& other = day == 0 ? b : a;
    RootSplit rs = root_split(vert, "x");
    for (const auto& [x0, e] : rs.roots)
      y_side(restrict_x(other, x0), x0, out, "crossing");
    if (!rs.cofactor.is_constant())
      throw error(errc::NonRationalCenter,
                  "pieces cross over the irrational locus " + to_string(rs.cofactor));
    return;
  }
  MPoly r = resultant(a, b, "y");
  if (r.is_zero()) throw error(errc::NonRationalCenter, "pieces share a component");
  RootSplit rs = root_split(r, "x");
  for (const auto& [x0, e] : rs.roots) {
    MPoly gy = gcd_poly(restrict_x(a, x0), restrict_x(b, x0));
    y_side(gy, x0, out, "crossing");
  }
  if (!rs.cofactor.is_constant()) {
    // discard factors explained by both leading coefficients dropping degree
    MPoly lc = gcd_poly(coeffs_in(a, "y").back(), coeffs_in(b, "y").back());
    MPoly cof = rs.cofactor;
    for (MPoly d = gcd_poly(cof, lc); !d.is_constant(); d = gcd_poly(cof, lc))
      cof = *divexact(cof, d);
    if (!cof.is_constant())
      throw error(errc::NonRationalCenter,
                  "pieces cross over the irrational locus " + to_string(cof));
  }
}

// Dehomogenized chart polynomials at infinity.  Chart "x=1": coordinates
// (x,y) = (Y/X, Z/X); chart "y=1": (x,y) = (X/Y, Z/Y).
MPoly infinity_chart(const MPoly& p, bool chart_x1) {
  int d = total_degree(p);
  MPoly out = MPoly::zero();
  MPoly X = MPoly::var("x"), Y = MPoly::var("y");
  for (const auto& [ev, cf] : p.terms) {
    int i = 0, j = 0;
    for (size_t v = 0; v < p.vars.size(); ++v) {
      if (p.vars[v] == "x") i = ev[v];
      if (p.vars[v] == "y") j = ev[v];
    }
    int zdeg = d - i - j;
    MPoly term = chart_x1 ? mp_pow(X, unsigned(j)) * mp_pow(Y, unsigned(zdeg))
                          : mp_pow(X, unsigned(i)) * mp_pow(Y, unsigned(zdeg));
    out = out + cf * term;
  }
  return out;
}

}  // namespace

ResolutionGraph resolve_affine(const CurveSystem& c, const ResolveOptions& opts) {
  if (c.is_germ()) throw std::invalid_argument("resolve_affine needs global mode");
  ResolutionGraph g;
  g.germ_mode = false;
  init_graph(g, c);
  const size_t np = g.pieces.size();

  // Locate every special affine point: piece singularities and crossings.
  std::set<Point> special;
  for (const auto& p : g.pieces)
    if (degree_in(p, "x") > 0 && degree_in(p, "y") > 0) singular_points(p, special);
  for (size_t i = 0; i < np; ++i)
    for (size_t j = i + 1; j < np; ++j) crossing_points(g.pieces[i], g.pieces[j], special);
  g.special_points.assign(special.begin(), special.end());

  int budget = opts.budget;

  // Resolve each special point; harvest delta and branch data per piece.
  std::vector<Int> delta(np, Int(0));
  std::vector<long> punctures(np, 0);   // branch punctures on the strict model
  std::vector<long> br_affine(np, 0);   // branches at special points (for chi of C_k)
  long crossing_excess = 0;             // sum over points of (#pieces through - 1)
  std::vector<std::vector<BranchEvent>> runs;
  for (const Point& pt : special) {
    Site root;
    root.where = "(" + to_string(pt.first) + "," + to_string(pt.second) + ")";
    for (size_t k = 0; k < np; ++k) {
      MPoly loc = shift_xy(g.pieces[k], pt.first, pt.second);
      if (eval(loc, {{"x", Rat(0)}, {"y", Rat(0)}}) == 0) root.pieces.push_back({int(k), loc});
    }
    Engine eng(g, budget, /*branch_convention=*/false);
    eng.run(std::move(root));
    for (const auto& [k, d] : eng.delta) delta[size_t(k)] += d;
    std::set<int> here;
    for (const auto& ev : eng.events) {
      here.insert(ev.piece);
      br_affine[size_t(ev.piece)] += ev.points;
      punctures[size_t(ev.piece)] += ev.points;
      if (ev.pair) {
        here.insert(ev.partner);
        br_affine[size_t(ev.partner)] += 1;
        punctures[size_t(ev.partner)] += 1;
      }
    }
    crossing_excess += long(here.size()) - 1;
    runs.push_back(std::move(eng.events));
  }

  // Strict components, one per piece.
  std::vector<int> strict_id(np);
  for (size_t k = 0; k < np; ++k) {
    Component s;
    s.id = int(g.components.size());
    s.kind = Component::Kind::Strict;
    s.name = "S" + std::to_string(k + 1);
    s.N.assign(np, Int(0));
    s.N[k] = 1;
    s.nu = 1;
    s.birth_index = s.id;
    s.piece = int(k);
    strict_id[k] = s.id;
    g.components.push_back(std::move(s));
  }
  for (const auto& events : runs)
    for (const auto& ev : events) {
      Edge e;
      if (ev.pair) {
        e.a = std::min(strict_id[size_t(ev.piece)], strict_id[size_t(ev.partner)]);
        e.b = std::max(strict_id[size_t(ev.piece)], strict_id[size_t(ev.partner)]);
      } else {
        e.a = std::min(ev.exc, strict_id[size_t(ev.piece)]);
        e.b = std::max(ev.exc, strict_id[size_t(ev.piece)]);
        e.points = ev.points;
        e.rational = ev.rational;
      }
      e.at = ev.at;
      g.edges.push_back(std::move(e));
    }

  // Euler data.  Can be skipped entirely when the caller overrides everything.
  bool all_overridden = opts.chi_override.count("complement") > 0;
  for (size_t k = 0; k < np && all_overridden; ++k)
    all_overridden = opts.chi_override.count("S" + std::to_string(k + 1)) > 0;

  std::vector<long> br_inf(np, 0);
  if (!all_overridden) {
    // Points at infinity of the projective closures, per direction.
    MPoly top = MPoly::constant(Rat(1));
    for (const auto& p : g.pieces) top = top * homogeneous_part(p, total_degree(p));
    MPoly tslice = subst(top, "x", Rat(1));  // directions (1 : t)
    RootSplit rs = root_split(tslice, "y");
    if (!rs.cofactor.is_constant())
      throw error(errc::NonRationalInfinity,
                  "irrational points at infinity (" + to_string(rs.cofactor) + ")");
    std::vector<std::pair<bool, Rat>> inf_points;  // (vertical direction?, t)
    for (const auto& [t, e] : rs.roots) inf_points.push_back({false, t});
    if (eval(subst(top, "x", Rat(0)), {{"y", Rat(1)}}) == 0) inf_points.push_back({true, Rat(0)});

    for (const auto& [vertical, t] : inf_points) {
      Site root;
      root.where = vertical ? "(inf:0:1:0)" : "(inf:1:" + to_string(t) + ":0)";
      for (size_t k = 0; k < np; ++k) {
        MPoly q = infinity_chart(g.pieces[k], /*chart_x1=*/!vertical);
        MPoly loc = vertical ? q : subst(q, "x", MPoly::var("x") + MPoly::constant(t));
        if (eval(loc, {{"x", Rat(0)}, {"y", Rat(0)}}) == 0) root.pieces.push_back({int(k), loc});
      }
      ResolutionGraph scratch;
      scratch.germ_mode = true;
      scratch.pieces = g.pieces;
      scratch.piece_mult = g.piece_mult;
      scratch.labels = g.labels;
      scratch.label_multiplicity = g.label_multiplicity;
      Engine eng(scratch, budget, /*branch_convention=*/false);
      try {
        eng.run(std::move(root));
      } catch (const error& e) {
        if (e.code() == errc::NonRationalCenter)
          throw error(errc::NonRationalInfinity,
                      std::string("resolving at infinity: ") + e.what());
        throw;
      }
      for (const auto& [k, d] : eng.delta) delta[size_t(k)] += d;
      for (const auto& ev : eng.events) {
        br_inf[size_t(ev.piece)] += ev.points;
        if (ev.pair) br_inf[size_t(ev.partner)] += 1;
      }
    }

    // Degree-genus with delta corrections; valid for reducible pieces too
    // (then 2-2g is the Euler characteristic of the disjoint smooth models).
    g.euler.have = true;
    long chi_curve = 0;
    for (size_t k = 0; k < np; ++k) {
      long d = total_degree(g.pieces[k]);
      Int gk = Int((d - 1) * (d - 2) / 2) - delta[k];
      long chi_model = 2 - 2 * to_long(gk);
      g.euler.chi_strict[strict_id[k]] = chi_model - br_inf[k] - punctures[k];
      // chi of the affine plane curve piece itself
      long through = 0;
      for (const auto& events : runs) {
        bool hit = false;
        for (const auto& ev : events)
          if (ev.piece == int(k) || (ev.pair && ev.partner == int(k))) hit = true;
        if (hit) ++through;
      }
      chi_curve += chi_model - br_inf[k] - (br_affine[k] - through);
    }
    chi_curve -= crossing_excess;
    g.euler.chi_complement = 1 - chi_curve;
  }

  for (const auto& [name, chi] : opts.chi_override) {
    g.euler.have = true;
    if (name == "complement")
      g.euler.chi_complement = chi;
    else
      g.euler.chi_strict[g.by_name(name).id] = chi;
  }
  return g;
}

// ---- surgeries -----------------------------------------------------------------

ResolutionGraph blowup_free_point(const ResolutionGraph& g, int component_id) {
  const Component& c = g.components.at(size_t(component_id));
  if (!c.exceptional())
    throw std::invalid_argument("free-point surgery expects an exceptional component");
  ResolutionGraph h = g;
  Component e;
  e.id = int(h.components.size());
  e.kind = Component::Kind::Exceptional;
  e.N = c.N;
  e.nu = c.nu + 1;
  e.self_int = -1;
  e.birth_index = int(h.blowup_log.size());
  e.name = "E" + std::to_string(e.birth_index + 1);
  h.components[size_t(component_id)].self_int -= 1;
  BlowupRecord rec;
  rec.component = e.id;
  rec.center = "surgery:free point of " + c.name;
  rec.through = {component_id};
  h.blowup_log.push_back(rec);
  Edge ed;
  ed.a = std::min(component_id, e.id);
  ed.b = std::max(component_id, e.id);
  ed.at = rec.center;
  h.components.push_back(std::move(e));
  h.edges.push_back(std::move(ed));
  return h;
}

ResolutionGraph blowup_corner(const ResolutionGraph& g, int edge_index) {
  const Edge& ed = g.edges.at(size_t(edge_index));
  if (ed.points != 1 || !ed.rational)
    throw std::invalid_argument("corner surgery expects a single rational point");
  ResolutionGraph h = g;
  const Component& a = g.components[size_t(ed.a)];
  const Component& b = g.components[size_t(ed.b)];
  Component e;
  e.id = int(h.components.size());
  e.kind = Component::Kind::Exceptional;
  e.N.assign(g.pieces.size(), Int(0));
  for (size_t k = 0; k < e.N.size(); ++k) e.N[k] = a.N[k] + b.N[k];
  e.nu = a.nu + b.nu;
  e.self_int = -1;
  e.birth_index = int(h.blowup_log.size());
  e.name = "E" + std::to_string(e.birth_index + 1);
  if (a.exceptional()) h.components[size_t(ed.a)].self_int -= 1;
  if (b.exceptional()) h.components[size_t(ed.b)].self_int -= 1;
  BlowupRecord rec;
  rec.component = e.id;
  rec.center = "surgery:corner " + a.name + "*" + b.name;
  for (int id : {ed.a, ed.b})
    if (g.components[size_t(id)].exceptional()) rec.through.push_back(id);
  for (int id : {ed.a, ed.b})
    if (!g.components[size_t(id)].exceptional()) {
      rec.strict_mult += 1;
      rec.piece_mult.push_back({g.components[size_t(id)].piece, 1});
    }
  h.blowup_log.push_back(rec);
  h.edges.erase(h.edges.begin() + edge_index);
  Edge e1, e2;
  e1.a = std::min(ed.a, e.id);
  e1.b = std::max(ed.a, e.id);
  e1.at = rec.center;
  e2.a = std::min(ed.b, e.id);
  e2.b = std::max(ed.b, e.id);
  e2.at = rec.center;
  h.components.push_back(std::move(e));
  h.edges.push_back(std::move(e1));
  h.edges.push_back(std::move(e2));
  return h;
}

// ---- certificate re-check --------------------------------------------------------

std::vector<std::string> verify_snc(const ResolutionGraph& g) {
  std::vector<std::string> bad;

  for (const auto& cert : g.site_certs) {
    if (cert.entities > 2) bad.push_back("more than two components at " + cert.where);
    if (!cert.transverse) bad.push_back("non-transverse intersection at " + cert.where);
    for (int m : cert.piece_mults)
      if (m > 2 || (m == 2 && cert.entities != 2))
        bad.push_back("singular strict transform at " + cert.where);
  }

  // replay the numerical recursion from the log
  for (const auto& rec : g.blowup_log) {
    const Component& e = g.components[size_t(rec.component)];
    std::vector<Int> N(g.pieces.size(), Int(0));
    Int nu(2);
    for (int i : rec.through) {
      const Component& t = g.components[size_t(i)];
      for (size_t k = 0; k < N.size(); ++k) N[k] += t.N[k];
      nu += t.nu - 1;
    }
    for (const auto& [k, m] : rec.piece_mult) N[size_t(k)] += m;
    if (N != e.N) bad.push_back("N recursion fails at " + e.name);
    if (nu != e.nu) bad.push_back("nu recursion fails at " + e.name);
    if (rec.through.size() > 2) bad.push_back("center on >2 components at " + rec.center);
  }

  // self-intersections: -1 minus the number of later centers on the component
  for (const auto& c : g.components) {
    if (!c.exceptional()) continue;
    int drops = 0;
    for (const auto& rec : g.blowup_log)
      for (int i : rec.through)
        if (i == c.id) ++drops;
    if (c.self_int != -1 - drops) bad.push_back("self-intersection drift at " + c.name);
  }

  if (g.germ_mode) {
    // exceptional dual graph is a tree; strict vertices attach to it
    std::vector<int> exc;
    for (const auto& c : g.components)
      if (c.exceptional()) exc.push_back(c.id);
    if (!exc.empty()) {
      std::map<int, int> parent;
      for (int id : exc) parent[id] = id;
      auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      long ee_edges = 0;
      for (const auto& e : g.edges) {
        if (!g.components[size_t(e.a)].exceptional() ||
            !g.components[size_t(e.b)].exceptional())
          continue;
        ++ee_edges;
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb)
          bad.push_back("cycle among exceptional components");
        else
          parent[ra] = rb;
      }
      if (ee_edges != long(exc.size()) - 1)
        bad.push_back("exceptional graph is not a tree");
      for (const auto& c : g.components)
        if (!c.exceptional()) {
          bool attached = false;
          for (const auto& e : g.edges)
            if ((e.a == c.id && g.components[size_t(e.b)].exceptional()) ||
                (e.b == c.id && g.components[size_t(e.a)].exceptional()))
              attached = true;
          if (!attached) bad.push_back(c.name + " does not meet the exceptional locus");
        }
    }
  }
  return bad;
}

}  // namespace monolab
