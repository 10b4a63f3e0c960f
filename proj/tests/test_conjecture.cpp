#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monolab/conjecture.hpp"
#include "monolab/corpus.hpp"
#include "monolab/monodromy.hpp"
#include "monolab/parse.hpp"
#include "monolab/resolve.hpp"
#include "monolab/zeta.hpp"

#include <string>
#include <vector>

using namespace monolab;

using V = CheckReport::Verdict;

static MPoly P(const std::string& s) { return parse_poly(s); }

static ResolutionGraph germ(const std::string& s) { return resolve_germ(germ_of(P(s))); }

static bool has(const std::vector<std::string>& ws, const std::string& needle) {
  for (const auto& w : ws)
    if (w.find(needle) != std::string::npos) return true;
  return false;
}

TEST_CASE("monodromy conjecture holds pole by pole on the key germs") {
  auto r5 = check_monodromy_conjecture(germ_of(P("y^3-x^5")));
  CHECK(r5.verdict == V::pass);
  REQUIRE(r5.witnesses.size() == 2);
  CHECK(has(r5.witnesses, "pole -1: eigenvalue order 1"));
  CHECK(has(r5.witnesses, "pole -8/15: eigenvalue order 15"));

  auto rs = check_monodromy_conjecture(germ_of(P("(y^2-x^3)^2-x^6*y")));
  CHECK(rs.verdict == V::pass);
  REQUIRE(rs.witnesses.size() == 3);
  CHECK(has(rs.witnesses, "pole -13/30: eigenvalue order 30"));
  CHECK(has(rs.witnesses, "pole -5/12: eigenvalue order 12"));

  auto rx = check_monodromy_conjecture(germ_of(P("x*y")));
  CHECK(rx.verdict == V::pass);
  CHECK(has(rx.witnesses, "pole -1: eigenvalue order 1"));

  // resolution failures surface instead of producing a verdict
  CHECK_THROWS_WITH_AS(check_monodromy_conjecture(germ_of(P("x^2+y^2"))),
                       doctest::Contains("NonRationalCenter"), error);
}

TEST_CASE("monodromy conjecture globally, witnessed point by point") {
  auto r = check_monodromy_conjecture(global_of(P("y*(y-x^2)*(x-3)")));
  CHECK(r.verdict == V::pass);
  CHECK(has(r.witnesses, "pole -3/4: eigenvalue order 4"));
  CHECK(has(r.witnesses, "at (0, 0)"));

  // global quintic cusp: same poles as the germ, witnessed at the origin
  auto rq = check_monodromy_conjecture(global_of(P("y^3-x^5")));
  CHECK(rq.verdict == V::pass);
  CHECK(has(rq.witnesses, "pole -8/15: eigenvalue order 15"));

  // a smooth global curve only has the pole -1, carried by its smooth points
  auto rl = check_monodromy_conjecture(global_of(P("x")));
  CHECK(rl.verdict == V::pass);
  CHECK(has(rl.witnesses, "smooth points"));
}

TEST_CASE("holomorphy of character twists of y^3-x^5") {
  auto c = germ_of(P("y^3-x^5"));
  auto r2 = check_holomorphy(c, 2);
  CHECK(r2.verdict == V::pass);
  CHECK(has(r2.witnesses, "zero function"));
  CHECK(check_holomorphy(c, 9).verdict == V::pass);

  auto r3 = check_holomorphy(c, 3);
  CHECK(r3.verdict == V::inapplicable);
  CHECK(has(r3.witnesses, "divides eigenvalue order 15"));
  CHECK(check_holomorphy(c, 5).verdict == V::inapplicable);
  CHECK(check_holomorphy(c, 15).verdict == V::inapplicable);
  // d = 1 is the untwisted zeta function: always inapplicable
  CHECK(check_holomorphy(c, 1).verdict == V::inapplicable);

  CHECK_THROWS_AS(check_holomorphy(c, 0), std::invalid_argument);

  // the global twist carries the same eigenvalue sources here
  CHECK(check_holomorphy(global_of(P("y^3-x^5")), 2).verdict == V::pass);
}

TEST_CASE("numerical relations at every exceptional component") {
  auto r5 = check_numerical_relations(germ("y^3-x^5"));
  CHECK(r5.verdict == V::pass);
  REQUIRE(r5.witnesses.size() == 4);  // E1..E4
  CHECK(has(r5.witnesses, "E4: kappa=1 r=3; kappa*N0=15 sum(N_i)=15"));

  auto rs = check_numerical_relations(germ("(y^2-x^3)^2-x^6*y"));
  CHECK(rs.verdict == V::pass);
  CHECK(rs.witnesses.size() == 6);

  auto rx = check_numerical_relations(germ("x*y"));
  CHECK(rx.verdict == V::inapplicable);
  CHECK(has(rx.witnesses, "no exceptional components"));

  // tampering with a self-intersection number breaks relation (1) loudly
  auto g = germ("y^2-x^3");
  g.components[size_t(g.by_name("E3").id)].self_int -= 1;
  auto bad = check_numerical_relations(g);
  CHECK(bad.verdict == V::fail);
  CHECK(has(bad.witnesses, "FAIL"));
}

TEST_CASE("the dual graph predicts the pole set exactly") {
  auto gc = germ("y^2-x^3");
  auto rc = check_pole_determination(gc, zeta_top(gc));
  CHECK(rc.verdict == V::pass);
  CHECK(has(rc.witnesses, "predicted: -1, -5/6"));
  CHECK(has(rc.witnesses, "actual:    -1, -5/6"));

  auto g5 = germ("y^3-x^5");
  CHECK(check_pole_determination(g5, zeta_top(g5)).verdict == V::pass);
  auto gs = germ("(y^2-x^3)^2-x^6*y");
  CHECK(check_pole_determination(gs, zeta_top(gs)).verdict == V::pass);

  // out of scope: normal crossings and global graphs
  auto gx = germ("x*y");
  CHECK(check_pole_determination(gx, zeta_top(gx)).verdict == V::inapplicable);
  auto gg = resolve_affine(global_of(P("y^3-x^5")));
  ZetaOptions glob;
  glob.local = false;
  CHECK(check_pole_determination(gg, zeta_top(gg, glob)).verdict ==
        V::inapplicable);

  // a zeta function that does not belong to the graph is caught
  auto mismatch = check_pole_determination(gc, zeta_top(g5));
  CHECK(mismatch.verdict == V::fail);
  CHECK(has(mismatch.witnesses, "mismatch at:"));
}

TEST_CASE("minimal locus: shapes, monotonicity, order-2 pole") {
  auto g5 = germ("y^3-x^5");
  auto m5 = analyze_min_locus(g5);
  CHECK(m5.locus == std::vector<int>{g5.by_name("E4").id});
  CHECK(m5.shape == "single-node-star");
  CHECK(m5.connected);
  CHECK(m5.monotone);
  CHECK(!m5.order2_pole.has_value());
  CHECK(m5.order2_ok);

  auto gs = germ("(y^2-x^3)^2-x^6*y");
  auto ms = analyze_min_locus(gs);
  CHECK(ms.locus == std::vector<int>{gs.by_name("E3").id});
  CHECK(ms.shape == "single-node-star");

  // a triple line along a cusp drags the minimum onto the strict transform
  auto ge = germ("x^3*(y^2-x^3)");
  auto me = analyze_min_locus(ge);
  CHECK(me.shape == "strict-edge");
  REQUIRE(me.locus.size() == 1);
  const Component& lone = ge.components[size_t(me.locus.front())];
  CHECK(!lone.exceptional());
  CHECK(ge.N_total(lone) == 3);

  // the double line instead ties strict and exceptional ratios at 1/2
  auto gd = germ("x^2*(y^2-x^3)");
  auto md = analyze_min_locus(gd);
  CHECK(md.shape == "strict-chain");
  CHECK(md.locus.size() == 3);
  CHECK(md.monotone);
  REQUIRE(md.order2_pole.has_value());
  CHECK(*md.order2_pole == Rat(-1, 2));
  CHECK(md.order2_ok);

  // two cusps in opposite directions: a chain between two rupture nodes
  auto gb = germ("(y^2-x^3)*(x^2-y^3)");
  auto mb = analyze_min_locus(gb);
  CHECK(mb.shape == "chain-between-nodes");
  CHECK(mb.locus == std::vector<int>{gb.by_name("E1").id, gb.by_name("E3").id,
                                     gb.by_name("E5").id});
  REQUIRE(mb.order2_pole.has_value());
  CHECK(*mb.order2_pole == Rat(-1, 2));
  CHECK(mb.order2_ok);

  // normal-crossing germs carry no shape but still report the locus
  auto ml = analyze_min_locus(germ("x*y"));
  CHECK(ml.shape.empty());
  CHECK(ml.locus.size() == 2);
  REQUIRE(ml.order2_pole.has_value());
  CHECK(*ml.order2_pole == Rat(-1));
  CHECK(ml.order2_ok);
  CHECK(analyze_min_locus(germ("y^2-x^2")).shape.empty());

  CHECK_THROWS_AS(analyze_min_locus(resolve_affine(global_of(P("x*y")))),
                  std::invalid_argument);
}

TEST_CASE("every corpus germ passes the whole conjecture lab") {
  REQUIRE(corpus().size() >= 20);
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    auto g = resolve_germ(entry.curve);

    CHECK(check_monodromy_conjecture(entry.curve).verdict == V::pass);
    CHECK(check_numerical_relations(g).ok());
    CHECK(check_pole_determination(g, zeta_top(g)).ok());

    auto ml = analyze_min_locus(g);
    CHECK(!ml.locus.empty());
    CHECK(ml.connected);
    CHECK(ml.monotone);
    CHECK(ml.order2_ok);

    bool reduced = true;
    for (const auto& c : g.components)
      if (!c.exceptional() && g.N_total(c) > 1) reduced = false;
    if (reduced && !ml.shape.empty()) {
      CAPTURE(ml.shape);
      CHECK((ml.shape == "single-node-star" || ml.shape == "chain-between-nodes"));
    }

    for (int d = 2; d <= 10; ++d) {
      CAPTURE(d);
      CHECK(check_holomorphy(entry.curve, d).ok());
    }

    // exceptional components meeting others at most twice never carry a
    // pole: their residue vanishes (unless a neighbor shares the ratio)
    for (const auto& c : g.components) {
      if (!c.exceptional() || g.valence_points(c.id) > 2) continue;
      try {
        Rat res = component_residue(g, c.id);
        CHECK(res == 0);
      } catch (const error& err) {
        if (err.code() != errc::SharedRatio) throw;
      }
    }
  }
}
