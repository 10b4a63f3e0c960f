// Acceptance gate: every release criterion evaluated end to end, one
// PASS/FAIL line each, exact arithmetic throughout (zero tolerance).
// Exit code 0 iff all criteria pass.

#include "monolab/conjecture.hpp"
#include "monolab/corpus.hpp"
#include "monolab/counting.hpp"
#include "monolab/curve.hpp"
#include "monolab/monodromy.hpp"
#include "monolab/padic.hpp"
#include "monolab/parse.hpp"
#include "monolab/resolve.hpp"
#include "monolab/zeta.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace monolab;

namespace {

using clk = std::chrono::steady_clock;

double secs_since(clk::time_point t0) {
  return std::chrono::duration<double>(clk::now() - t0).count();
}

MPoly P(const std::string& s) { return parse_poly(s); }

// numerical data of a component as the (N, nu) pair
using NN = std::pair<long, long>;

NN nn(const ResolutionGraph& g, const Component& c) {
  return {to_long(g.N_total(c)), to_long(c.nu)};
}

std::multiset<NN> graph_data(const ResolutionGraph& g) {
  std::multiset<NN> out;
  for (const auto& c : g.components) out.insert(nn(g, c));
  return out;
}

// edges as unordered pairs of numerical data, so names never matter
std::multiset<std::pair<NN, NN>> graph_edges(const ResolutionGraph& g) {
  std::multiset<std::pair<NN, NN>> out;
  for (const auto& e : g.edges) {
    NN a = nn(g, g.components[size_t(e.a)]);
    NN b = nn(g, g.components[size_t(e.b)]);
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

MPoly den_poly(const std::map<std::pair<Int, Int>, int>& den) {
  MPoly prod = MPoly::constant(Rat(1));
  for (const auto& [key, e] : den) {
    MPoly factor = mp_pow(MPoly::var("p"), unsigned(to_long(key.first))) -
                   mp_pow(MPoly::var("T"), unsigned(to_long(key.second)));
    prod = prod * mp_pow(factor, unsigned(e));
  }
  return prod;
}

// ---- criteria --------------------------------------------------------------

bool c1_resolution_goldens() {
  auto t0 = clk::now();
  auto g5 = resolve_germ(germ_of(P("y^3-x^5")));
  double s5 = secs_since(t0);

  std::multiset<NN> want5{{3, 2}, {5, 3}, {9, 5}, {15, 8}, {1, 1}};
  std::multiset<std::pair<NN, NN>> adj5{{{3, 2}, {9, 5}},
                                        {{9, 5}, {15, 8}},
                                        {{5, 3}, {15, 8}},
                                        {{1, 1}, {15, 8}}};
  bool ok = graph_data(g5) == want5 && graph_edges(g5) == adj5 && s5 < 1.0;

  t0 = clk::now();
  auto gs = resolve_germ(germ_of(P("(y^2-x^3)^2-x^6*y")));
  double ss = secs_since(t0);

  std::multiset<NN> wants{{4, 2}, {6, 3}, {12, 5}, {14, 6}, {15, 7}, {30, 13}, {1, 1}};
  std::multiset<std::pair<NN, NN>> adjs{{{4, 2}, {12, 5}},   {{6, 3}, {12, 5}},
                                        {{12, 5}, {14, 6}},  {{14, 6}, {30, 13}},
                                        {{15, 7}, {30, 13}}, {{1, 1}, {30, 13}}};
  return ok && graph_data(gs) == wants && graph_edges(gs) == adjs && ss < 1.0;
}

bool c2_zeta_goldens() {
  auto g5 = resolve_germ(germ_of(P("y^3-x^5")));
  RatFunc local = zeta_top(g5);
  bool ok = to_string(local) == "(8+7s)/((1+s)(8+15s))";

  ZetaOptions glob;
  glob.local = false;
  RatFunc global = zeta_top(resolve_affine(global_of(P("y^3-x^5"))), glob);
  ok = ok && rf_equal(global, local);

  auto gs = resolve_germ(germ_of(P("(y^2-x^3)^2-x^6*y")));
  std::set<Rat> ps;
  for (const auto& e : poles(zeta_top(gs)).entries) ps.insert(e.pole);
  std::set<Rat> want{Rat(-1), make_rat(Int(-5), Int(12)), make_rat(Int(-13), Int(30))};
  return ok && ps == want;
}

bool c3_monodromy_goldens() {
  auto g5 = resolve_germ(germ_of(P("y^3-x^5")));
  bool ok = to_string(acampo_zeta(g5)) == "(t^15-1)/((t^3-1)(t^5-1))";

  auto gs = resolve_germ(germ_of(P("(y^2-x^3)^2-x^6*y")));
  UnityRat p1 = char_poly_P1(gs);
  std::map<long, int> want{{6, 1}, {10, 1}, {12, 1}, {30, 1}};
  ok = ok && cyclo_multiplicities(p1) == want && zero_count(p1) == 18;

  return ok && lct(g5).value == make_rat(Int(8), Int(15)) &&
         lct(gs).value == make_rat(Int(5), Int(12));
}

bool c4_denef_vs_enumeration() {
  bool ok = true;
  for (const char* f : {"x", "x*y", "y^2-x^3", "y^3-x^5", "(y^2-x^3)^2-x^6*y"})
    for (long p : {5L, 7L}) {
      auto t0 = clk::now();
      PadicVerify v = verify_padic(P(f), p, 4);
      double s = secs_since(t0);
      if (!v.ok || s >= 60.0) {
        std::printf("    f=%s p=%ld ok=%d (%.1fs)\n", f, p, int(v.ok), s);
        ok = false;
      }
    }
  return ok;
}

bool c5_global_denominator_cancellation() {
  PadicZeta z = denef_zeta(resolve_affine(global_of(P("y^3-x^5"))), 7);
  std::map<std::pair<Int, Int>, int> want{{{Int(1), Int(1)}, 1}, {{Int(8), Int(15)}, 1}};
  return z.den == want;
}

bool c6_form_family() {
  bool ok = true;
  std::set<long> residues;
  for (long j = 1; j <= 4; ++j)
    for (long k = 1; k <= 2; ++k) {
      std::vector<CurveFactor> fs{{"f", P("y^3-x^5"), 1}};
      ZetaOptions zo;
      if (j > 1 || k > 1) {
        fs.push_back({"w", mp_pow(P("x"), unsigned(j - 1)) * mp_pow(P("y"), unsigned(k - 1)), 1});
        zo.form = "w";
      }
      RatFunc Z = zeta_top(resolve_germ(make_germ(fs)), zo);

      long a = 3 * j + 5 * k;
      MPoly num = MPoly::constant(Rat(a)) + MPoly::constant(Rat(a - j * k)) * MPoly::var("s");
      RatFunc want{{"s"},
                   num,
                   {{LinForm(Int(1), {Int(1)}), 1}, {LinForm(Int(a), {Int(15)}), 1}}};
      want = make_rat(Int(1), Int(j * k)) * want;
      ok = ok && rf_equal(Z, want);
      residues.insert(a % 15);
    }
  // the candidate eigenvalues exp(2 pi i (3j+5k)/15) sweep the primitive
  // 15th roots of unity exactly
  return ok && residues == std::set<long>{1, 2, 4, 7, 8, 11, 13, 14};
}

bool c7_corpus_properties() {
  auto t0 = clk::now();
  bool ok = corpus().size() >= 20;
  for (const auto& entry : corpus()) {
    bool entry_ok = true;
    auto g = resolve_germ(entry.curve);
    RatFunc Z = zeta_top(g);

    // multiplicity relations + minimal-resolution inequalities, every E_j
    entry_ok = entry_ok && check_numerical_relations(g).ok();

    // vanishing residues away from rupture components
    for (const auto& c : g.components) {
      if (!c.exceptional() || g.valence_points(c.id) > 2) continue;
      try {
        entry_ok = entry_ok && component_residue(g, c.id) == 0;
      } catch (const error& e) {
        if (e.code() != errc::SharedRatio) throw;
      }
    }

    // the dual graph predicts the pole set exactly
    entry_ok = entry_ok && check_pole_determination(g, Z).ok();

    // minimal locus: connected, classified, strictly monotone outward,
    // order-2 pole (if any) unique and equal to -lct = -1/k
    MinLocusReport ml = analyze_min_locus(g);
    entry_ok = entry_ok && ml.connected && ml.monotone && ml.order2_ok;
    entry_ok = entry_ok &&
               (ml.shape.empty() || ml.shape == "single-node-star" ||
                ml.shape == "chain-between-nodes" || ml.shape == "strict-edge" ||
                ml.shape == "strict-chain");

    // zeta does not depend on the chosen resolution
    int host = -1;
    for (const auto& c : g.components)
      if (c.exceptional()) host = c.id;
    if (host >= 0) entry_ok = entry_ok && rf_equal(zeta_top(blowup_free_point(g, host)), Z);
    if (!g.edges.empty()) entry_ok = entry_ok && rf_equal(zeta_top(blowup_corner(g, 0)), Z);

    // multivariate zeta with every label on one variable collapses back
    ZetaOptions shared;
    for (const auto& l : g.labels) shared.weights[l] = 1;
    entry_ok = entry_ok && rf_equal(zeta_top_multi(g, shared).zeta, Z);

    // motivic class specializes to the topological zeta and, at L = p, to
    // the Denef formula at a prime of good reduction
    MotivicRat m = zeta_motivic_local(g);
    entry_ok = entry_ok && rf_equal(motivic_to_topological(m), Z);
    long good = 0;
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L})
      if (good_prime_check(g, p).usable()) {
        good = p;
        break;
      }
    if (good == 0) {
      entry_ok = false;
    } else {
      PadicZeta pz = denef_zeta(g, good);
      entry_ok = entry_ok && m.lshift == pz.pshift &&
                 subst(m.num, "L", MPoly::var("p")) * den_poly(pz.den) ==
                     pz.num * den_poly(m.den);
    }

    entry_ok = entry_ok &&
               check_monodromy_conjecture(entry.curve).verdict == CheckReport::Verdict::pass;

    if (!entry_ok) {
      std::printf("    corpus germ failed: %s\n", entry.name.c_str());
      ok = false;
    }
  }
  double s = secs_since(t0);
  if (s >= 300.0) {
    std::printf("    corpus suite took %.1fs (budget 300s)\n", s);
    ok = false;
  }
  return ok;
}

bool c8_negative_paths() {
  bool irr = false;
  try {
    resolve_germ(germ_of(P("y^2-2*x^2")));
  } catch (const error& e) {
    irr = e.code() == errc::NonRationalCenter;
  }

  bool starved = false;
  try {
    ResolveOptions ro;
    ro.budget = 1;
    resolve_germ(germ_of(P("y^3-x^5")), ro);
  } catch (const error& e) {
    starved = e.code() == errc::BudgetExceeded;
  }

  bool capped = false;
  try {
    brute_force_counts(P("x*y"), 5, 8, false, 1000);
  } catch (const error& e) {
    capped = e.code() == errc::BudgetExceeded;
  }

  return irr && starved && capped;
}

}  // namespace

int main() {
  struct Criterion {
    int n;
    const char* what;
    bool (*fn)();
  };
  const Criterion table[] = {
      {1, "germ resolutions: numerical data and adjacency, < 1 s each", c1_resolution_goldens},
      {2, "topological zeta: closed form, local = global, exact pole set", c2_zeta_goldens},
      {3, "monodromy: zeta_0, cyclotomic P_1 with 18 zeroes, lct values", c3_monodromy_goldens},
      {4, "p-adic: formula matches enumeration, 5 curves x 2 primes, i <= 4", c4_denef_vs_enumeration},
      {5, "global p-adic denominator cancels to (nu,N) = (1,1),(8,15)", c5_global_denominator_cancellation},
      {6, "form-twisted zeta family sweeps the primitive 15th roots", c6_form_family},
      {7, "corpus property suite: relations, poles, min locus, bridges", c7_corpus_properties},
      {8, "negative paths: NonRationalCenter and BudgetExceeded raised", c8_negative_paths},
  };

  int failed = 0;
  for (const auto& c : table) {
    auto t0 = clk::now();
    bool ok = false;
    std::string err;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      err = e.what();
    }
    std::printf("[%d] %-62s %s  (%.2fs)\n", c.n, c.what, ok ? "PASS" : "FAIL", secs_since(t0));
    if (!ok) {
      ++failed;
      if (!err.empty()) std::printf("    unexpected error: %s\n", err.c_str());
    }
  }
  std::printf("acceptance: %d/8 criteria pass\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
