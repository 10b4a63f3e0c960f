#include "monolab/cli.hpp"

#include "monolab/conjecture.hpp"
#include "monolab/corpus.hpp"
#include "monolab/counting.hpp"
#include "monolab/curve.hpp"
#include "monolab/graphout.hpp"
#include "monolab/monodromy.hpp"
#include "monolab/padic.hpp"
#include "monolab/parse.hpp"
#include "monolab/resolve.hpp"
#include "monolab/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace monolab {

namespace {

using json = nlohmann::ordered_json;

struct Opts {
  std::string poly;
  bool global = false;
  std::string at = "0,0";
  int budget = 200;
  std::string chi_file;
  std::string format = "text";
  std::string out;
  int char_d = 1;
  std::string form;
  long p = 0;
  int max_i = 0;
  std::vector<std::string> weights;  // "label=index"
};

// ---- option plumbing -------------------------------------------------------

void add_curve_arg(CLI::App* cmd, Opts& o) {
  cmd->add_option("poly", o.poly, "curve polynomial in x and y, e.g. \"y^3-x^5\"")
      ->required();
}

void add_locality(CLI::App* cmd, Opts& o) {
  auto* loc = cmd->add_flag("--local", "study the germ at the base point (default)");
  auto* glob = cmd->add_flag("--global", o.global, "study the affine curve over Q");
  glob->excludes(loc);
  cmd->add_option("--at", o.at, "base point \"x0,y0\" for germ mode (default 0,0)")
      ->excludes(glob);
}

void add_resolve_opts(CLI::App* cmd, Opts& o) {
  cmd->add_option("--budget", o.budget, "maximum number of blow-ups");
  cmd->add_option("--chi-override", o.chi_file,
                  "JSON file: component name (or \"complement\") -> Euler characteristic");
}

void add_output_opts(CLI::App* cmd, Opts& o, std::vector<std::string> formats) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember(formats));
  cmd->add_option("--out", o.out, "also write the output to FILE");
}

// ---- shared builders -------------------------------------------------------

std::pair<Rat, Rat> parse_at(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw error(errc::SyntaxError, "--at expects \"x0,y0\", got \"" + s + "\"");
  return {parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1))};
}

// The optional form factor rides along as one more divisor component so the
// resolution makes f AND the form normal crossings; zeta_top then shifts its
// multiplicities from the N side to nu.  A constant form is the standard
// dx^dy and adds nothing.
CurveSystem build_curve(const Opts& o, bool* use_form = nullptr) {
  if (use_form) *use_form = false;
  MPoly f = parse_poly(o.poly);
  CurveSystem c;
  if (o.global) {
    c = global_of(f);
  } else {
    auto [x0, y0] = parse_at(o.at);
    c = germ_of(f, x0, y0);
  }
  if (!o.form.empty()) {
    MPoly w = parse_poly(o.form);
    if (w.is_zero()) throw error(errc::SyntaxError, "--form polynomial is zero");
    if (!w.is_constant()) {
      c.factors.push_back(CurveFactor{"w", w, 1});
      if (use_form) *use_form = true;
    }
  }
  return c;
}

ResolveOptions build_ropts(const Opts& o) {
  ResolveOptions r;
  r.budget = o.budget;
  if (!o.chi_file.empty()) {
    std::ifstream in(o.chi_file);
    if (!in) throw error(errc::Unsupported, "cannot open " + o.chi_file);
    json j = json::parse(in);
    for (const auto& [k, v] : j.items()) r.chi_override[k] = v.get<long>();
  }
  return r;
}

ResolutionGraph build_graph(const CurveSystem& c, const Opts& o) {
  ResolveOptions r = build_ropts(o);
  return c.is_germ() ? resolve_germ(c, r) : resolve_affine(c, r);
}

int emit(const Opts& o, const std::string& text) {
  std::cout << text;
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw error(errc::Unsupported, "cannot write " + o.out);
    f << text;
  }
  return 0;
}

std::string comp_names(const ResolutionGraph& g, const std::vector<int>& ids) {
  std::string s;
  for (int id : ids) {
    if (!s.empty()) s += " ";
    s += g.components[size_t(id)].name;
  }
  return s;
}

void pole_lines(std::ostringstream& t, const ResolutionGraph& g, const PoleReport& pr) {
  t << "poles:\n";
  if (pr.entries.empty()) {
    t << "  (none)\n";
    return;
  }
  for (const auto& e : pr.entries) {
    t << "  s = " << to_string(e.pole) << "  order " << e.order << "  leading "
      << to_string(e.leading);
    if (!e.contributors.empty()) t << "  [" << comp_names(g, e.contributors) << "]";
    t << "\n";
  }
}

json pole_json(const ResolutionGraph& g, const PoleReport& pr) {
  json a = json::array();
  for (const auto& e : pr.entries) {
    json je;
    je["s0"] = to_string(e.pole);
    je["order"] = e.order;
    je["leading"] = to_string(e.leading);
    je["contributors"] = json::array();
    for (int id : e.contributors) je["contributors"].push_back(g.components[size_t(id)].name);
    a.push_back(std::move(je));
  }
  return a;
}

json report_json(const CheckReport& r) {
  json j;
  j["name"] = r.name;
  j["verdict"] = to_string(r.verdict);
  j["witnesses"] = r.witnesses;
  return j;
}

// ---- resolve ---------------------------------------------------------------

std::string graph_text(const ResolutionGraph& g) {
  std::ostringstream t;
  size_t exc = 0;
  for (const auto& c : g.components)
    if (c.exceptional()) ++exc;
  if (g.germ_mode)
    t << "germ resolution at (" << to_string(g.base_point.first) << ", "
      << to_string(g.base_point.second) << "): ";
  else
    t << "global resolution: ";
  t << g.blowup_log.size() << " blow-ups, " << exc << " exceptional + "
    << g.components.size() - exc << " strict components\n";
  for (const auto& c : g.components) {
    Int n = g.N_total(c);
    t << "  " << c.name << (c.exceptional() ? "  exceptional" : "  strict     ")
      << "  N=" << n.get_str() << "  nu=" << c.nu.get_str();
    if (n != 0) t << "  nu/N=" << to_string(make_rat(c.nu, n));
    if (c.exceptional())
      t << "  self=" << c.self_int;
    else
      t << "  piece=" << to_string(g.pieces[size_t(c.piece)])
        << (c.branches > 1 ? "  branches=" + std::to_string(c.branches) : "");
    t << "\n";
  }
  t << "edges:\n";
  if (g.edges.empty()) t << "  (none)\n";
  for (const auto& e : g.edges) {
    t << "  " << g.components[size_t(e.a)].name << " -- " << g.components[size_t(e.b)].name;
    if (e.points != 1) t << "  [" << e.points << " points]";
    if (!e.rational) t << "  [conjugate]";
    t << "\n";
  }
  for (const auto& w : g.warnings) t << "warning: " << w << "\n";
  return t.str();
}

int cmd_resolve(const Opts& o) {
  ResolutionGraph g = build_graph(build_curve(o), o);
  if (o.format == "dot") return emit(o, to_dot(g));
  if (o.format == "json") return emit(o, to_json_text(g));
  return emit(o, graph_text(g));
}

// ---- zeta ------------------------------------------------------------------

int cmd_zeta_top(const Opts& o) {
  bool use_form = false;
  CurveSystem c = build_curve(o, &use_form);
  ResolutionGraph g = build_graph(c, o);
  ZetaOptions z;
  z.local = !o.global;
  z.character_order = o.char_d;
  if (use_form) z.form = "w";
  RatFunc Z = zeta_top(g, z);
  PoleReport pr = poles(Z, g, z);
  if (o.format == "json") {
    json j;
    j["command"] = "zeta-top";
    j["f"] = o.poly;
    j["local"] = !o.global;
    j["character_order"] = o.char_d;
    if (use_form) j["form"] = o.form;
    j["zeta"] = to_string(Z);
    j["poles"] = pole_json(g, pr);
    return emit(o, j.dump(2) + "\n");
  }
  std::ostringstream t;
  t << to_string(Z) << "\n";
  pole_lines(t, g, pr);
  return emit(o, t.str());
}

int cmd_zeta_top_multi(const Opts& o) {
  CurveSystem c = build_curve(o);
  // one label (hence one s-variable) per squarefree piece of the input:
  // f = prod pieces[k]^{m_k} becomes factors f1^{m_1}, f2^{m_2}, ...
  PieceDecomposition pd = decompose(c);
  std::vector<CurveFactor> split;
  for (size_t k = 0; k < pd.pieces.size(); ++k) {
    int m = 0;
    for (size_t l = 0; l < c.factors.size(); ++l)
      m += c.factors[l].multiplicity * pd.mult[l][k];
    split.push_back(CurveFactor{"f" + std::to_string(k + 1), pd.pieces[k], m});
  }
  c.factors = std::move(split);
  ResolutionGraph g = build_graph(c, o);
  ZetaOptions z;
  z.local = !o.global;
  for (const auto& w : o.weights) {
    auto eq = w.find('=');
    if (eq == std::string::npos)
      throw error(errc::SyntaxError, "--weight expects LABEL=INDEX, got \"" + w + "\"");
    z.weights[w.substr(0, eq)] = std::stoi(w.substr(eq + 1));
  }
  MultiZeta m = zeta_top_multi(g, z);
  if (o.format == "json") {
    json j;
    j["command"] = "zeta-top-multi";
    j["f"] = o.poly;
    j["local"] = !o.global;
    j["variables"] = m.zeta.vnames;
    j["zeta"] = to_string(m.zeta);
    j["polar"] = json::array();
    for (const auto& lf : m.polar) j["polar"].push_back(lf.to_string(m.zeta.vnames));
    return emit(o, j.dump(2) + "\n");
  }
  std::ostringstream t;
  t << to_string(m.zeta) << "\n";
  t << "polar locus:\n";
  if (m.polar.empty()) t << "  (empty)\n";
  for (const auto& lf : m.polar) t << "  " << lf.to_string(m.zeta.vnames) << "\n";
  return emit(o, t.str());
}

int cmd_zeta_padic(const Opts& o) {
  CurveSystem c = build_curve(o);
  ResolutionGraph g = build_graph(c, o);
  GoodPrimeReport gp = good_prime_check(g, o.p);
  if (!gp.usable()) {
    std::string msg = "p=" + std::to_string(o.p) + " unusable for this resolution";
    for (const auto& f : gp.failures) msg += "; " + f;
    throw error(errc::BadPrime, msg);
  }
  PadicZeta z = denef_zeta(g, o.p);

  std::vector<Rat> predicted;
  CountSeries actual;
  bool checked = o.max_i > 0;
  bool verified = false;
  if (checked) {
    predicted = predicted_counts(z, o.max_i);
    MPoly f = parse_poly(o.poly);
    if (!o.global) {
      auto [x0, y0] = parse_at(o.at);
      // enumeration counts pairs congruent to (0,0); move the germ there
      f = subst(f, "x", MPoly::var("x") + MPoly::constant(x0));
      f = subst(f, "y", MPoly::var("y") + MPoly::constant(y0));
    }
    actual = brute_force_counts(f, o.p, o.max_i, !o.global);
    verified = true;
    for (int i = 0; i < o.max_i; ++i)
      if (predicted[size_t(i)] != Rat(long(actual.counts[size_t(i)]))) verified = false;
  }

  if (o.format == "json") {
    json j;
    j["command"] = "zeta-padic";
    j["f"] = o.poly;
    j["local"] = !o.global;
    j["p"] = z.p;
    j["symbolic"] = z.symbolic;
    j["terms"] = json::array();
    for (const auto& term : z.terms) {
      json jt;
      jt["components"] = json::array();
      for (int id : term.comps) jt["components"].push_back(g.components[size_t(id)].name);
      jt["count"] = to_string(term.count);
      j["terms"].push_back(std::move(jt));
    }
    json nf = json::array();
    for (const auto& [key, e] : z.den)
      nf.push_back({{"nu", key.first.get_str()}, {"N", key.second.get_str()}, {"exponent", e}});
    j["normalized"] = {{"numerator", to_string(z.num)},
                       {"p_shift", z.pshift},
                       {"factors", std::move(nf)}};
    j["suspects"] = gp.suspects;
    j["counts"] = json::array();
    for (int i = 0; i < o.max_i; ++i)
      j["counts"].push_back({{"i", i + 1},
                             {"predicted", to_string(predicted[size_t(i)])},
                             {"actual", actual.counts[size_t(i)]}});
    j["verified"] = checked ? json(verified) : json(nullptr);
    return emit(o, j.dump(2) + "\n");
  }

  std::ostringstream t;
  t << to_string(z) << "\n";
  for (const auto& s : gp.suspects) t << "note: suspect prime: " << s << "\n";
  if (checked) {
    for (int i = 0; i < o.max_i; ++i)
      t << "i=" << i + 1 << ": predicted " << to_string(predicted[size_t(i)]) << ", counted "
        << actual.counts[size_t(i)] << "\n";
    t << "verified: " << (verified ? "yes" : "NO") << "\n";
  } else {
    t << "counts not checked (use --max-i N)\n";
  }
  return emit(o, t.str());
}

int cmd_zeta_motivic(const Opts& o) {
  if (o.global)
    throw error(errc::Unsupported, "the motivic zeta function is implemented for germs only");
  CurveSystem c = build_curve(o);
  ResolutionGraph g = build_graph(c, o);
  MotivicRat m = zeta_motivic_local(g);
  RatFunc top = normalize(motivic_to_topological(m));
  if (o.format == "json") {
    json j;
    j["command"] = "zeta-motivic";
    j["f"] = o.poly;
    j["zeta"] = to_string(m);
    j["topological_specialization"] = to_string(top);
    return emit(o, j.dump(2) + "\n");
  }
  std::ostringstream t;
  t << to_string(m) << "\n";
  t << "topological specialization: " << to_string(top) << "\n";
  return emit(o, t.str());
}

// ---- count -----------------------------------------------------------------

int cmd_count(const Opts& o) {
  if (o.max_i < 1) throw error(errc::Unsupported, "count needs --max-i >= 1");
  MPoly f = parse_poly(o.poly);
  if (!o.global) {
    auto [x0, y0] = parse_at(o.at);
    f = subst(f, "x", MPoly::var("x") + MPoly::constant(x0));
    f = subst(f, "y", MPoly::var("y") + MPoly::constant(y0));
  }
  CountSeries cs = brute_force_counts(f, o.p, o.max_i, !o.global);
  if (o.format == "json") {
    json j;
    j["command"] = "count";
    j["f"] = o.poly;
    j["p"] = cs.p;
    j["restricted"] = cs.restricted;
    j["counts"] = cs.counts;
    return emit(o, j.dump(2) + "\n");
  }
  std::ostringstream t;
  t << "solutions of f = 0 mod p^i, p=" << cs.p
    << (cs.restricted ? ", pairs congruent to the base point mod p" : "") << "\n";
  for (size_t i = 0; i < cs.counts.size(); ++i) t << "i=" << i + 1 << ": " << cs.counts[i] << "\n";
  return emit(o, t.str());
}

// ---- monodromy and lct -----------------------------------------------------

int cmd_monodromy(const Opts& o) {
  if (o.global)
    throw error(errc::Unsupported,
                "monodromy invariants are germ data; use --local (with --at for other points)");
  ResolutionGraph g = build_graph(build_curve(o), o);
  UnityRat z0 = acampo_zeta(g);
  std::string p1;
  std::string p1_note;
  long p1_degree = 0;
  try {
    UnityRat cp = char_poly_P1(g);
    auto [n, d] = expand(cp);
    auto q = divexact(n, d);
    p1 = q ? to_string(*q) : to_string(cp);
    p1_degree = degree(cp);
  } catch (const error& e) {
    if (e.code() != errc::NotIsolated) throw;
    p1_note = e.what();
  }
  EigenvalueSet ev = eigenvalue_orders_near(g);

  if (o.format == "json") {
    json j;
    j["command"] = "monodromy";
    j["f"] = o.poly;
    j["zeta0"] = to_string(z0);
    j["zeta0_factors"] = json::array();
    for (const auto& [n, e] : z0.exps)
      j["zeta0_factors"].push_back({{"n", n}, {"exponent", e}});
    j["p1"] = p1.empty() ? json(nullptr) : json(p1);
    if (!p1.empty()) j["p1_degree"] = p1_degree;
    if (!p1_note.empty()) j["p1_note"] = p1_note;
    j["orders"] = json::array();
    for (long l : ev.orders)
      j["orders"].push_back({{"order", l}, {"provenance", ev.provenance.at(l)}});
    return emit(o, j.dump(2) + "\n");
  }
  std::ostringstream t;
  t << "zeta_0 = " << to_string(z0) << "\n";
  if (!p1.empty())
    t << "P_1 = " << p1 << "  (degree " << p1_degree << ")\n";
  else
    t << "P_1 undefined: " << p1_note << "\n";
  t << "eigenvalue orders near the base point:\n";
  for (long l : ev.orders) t << "  " << l << "  " << ev.provenance.at(l) << "\n";
  return emit(o, t.str());
}

int cmd_lct(const Opts& o) {
  if (o.global)
    throw error(errc::Unsupported,
                "the log canonical threshold is germ data; use --local (with --at)");
  ResolutionGraph g = build_graph(build_curve(o), o);
  LctValue l = lct(g);
  if (o.format == "json") {
    json j;
    j["command"] = "lct";
    j["f"] = o.poly;
    j["lct"] = to_string(l.value);
    j["achieved_by"] = json::array();
    for (int id : l.achieved_by) j["achieved_by"].push_back(g.components[size_t(id)].name);
    return emit(o, j.dump(2) + "\n");
  }
  std::ostringstream t;
  t << "lct = " << to_string(l.value) << "  attained by " << comp_names(g, l.achieved_by) << "\n";
  return emit(o, t.str());
}

// ---- check and corpus ------------------------------------------------------

CheckReport structure_report(const ResolutionGraph& g) {
  CheckReport r;
  r.name = "structure";
  if (!g.germ_mode) {
    r.verdict = CheckReport::Verdict::inapplicable;
    r.witnesses.push_back("stated for germ resolutions only");
    return r;
  }
  MinLocusReport ml = analyze_min_locus(g);
  std::string locus = "min locus: {";
  for (int id : ml.locus) locus += " " + g.components[size_t(id)].name;
  locus += " }";
  if (!ml.shape.empty()) locus += "  shape=" + ml.shape;
  r.witnesses.push_back(locus);
  r.witnesses.push_back(std::string("connected: ") + (ml.connected ? "yes" : "NO"));
  r.witnesses.push_back(std::string("nu/N strictly increases away from the locus: ") +
                        (ml.monotone ? "yes" : "NO"));
  if (ml.order2_pole)
    r.witnesses.push_back("order-2 pole " + to_string(*ml.order2_pole) +
                          (ml.order2_ok ? " equals -lct = -1/k" : ": VIOLATES -lct = -1/k"));
  else
    r.witnesses.push_back("order-2 pole: none");
  r.verdict = ml.connected && ml.monotone && ml.order2_ok ? CheckReport::Verdict::pass
                                                          : CheckReport::Verdict::fail;
  return r;
}

std::vector<CheckReport> run_checks(const CurveSystem& c, const ResolutionGraph& g,
                                    const std::string& which, int char_d) {
  bool all = which == "all";
  std::vector<CheckReport> reports;
  if (all || which == "relations") reports.push_back(check_numerical_relations(g));
  if (all || which == "poles") {
    ZetaOptions z;
    z.local = g.germ_mode;
    reports.push_back(check_pole_determination(g, zeta_top(g, z)));
  }
  if (all || which == "monodromy") reports.push_back(check_monodromy_conjecture(c));
  if (all || which == "holomorphy") {
    int dlo = char_d > 1 ? char_d : 2;
    int dhi = char_d > 1 ? char_d : 10;
    for (int d = dlo; d <= dhi; ++d) {
      CheckReport r = check_holomorphy(c, d);
      r.name += " d=" + std::to_string(d);
      reports.push_back(std::move(r));
    }
  }
  if (all || which == "structure") reports.push_back(structure_report(g));
  return reports;
}

int cmd_check(const Opts& o, const std::string& which) {
  CurveSystem c = build_curve(o);
  ResolutionGraph g = build_graph(c, o);
  std::vector<CheckReport> reports = run_checks(c, g, which, o.char_d);
  bool failed = false;
  for (const auto& r : reports)
    if (!r.ok()) failed = true;

  if (o.format == "json") {
    json j;
    j["command"] = "check";
    j["f"] = o.poly;
    j["local"] = !o.global;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
    emit(o, j.dump(2) + "\n");
    return failed ? 1 : 0;
  }
  std::ostringstream t;
  for (const auto& r : reports) {
    t << r.name << ": " << to_string(r.verdict) << "\n";
    for (const auto& w : r.witnesses) t << "  " << w << "\n";
  }
  emit(o, t.str());
  return failed ? 1 : 0;
}

int cmd_corpus(const Opts& o) {
  size_t passed = 0;
  json entries = json::array();
  std::ostringstream t;
  for (const auto& entry : corpus()) {
    ResolutionGraph g = resolve_germ(entry.curve);
    std::vector<CheckReport> reports = run_checks(entry.curve, g, "all", 1);
    bool ok = true;
    for (const auto& r : reports)
      if (!r.ok()) ok = false;
    if (ok) ++passed;
    if (o.format == "json") {
      json je;
      je["name"] = entry.name;
      je["ok"] = ok;
      je["reports"] = json::array();
      for (const auto& r : reports) je["reports"].push_back(report_json(r));
      entries.push_back(std::move(je));
    } else {
      t << entry.name << ": " << (ok ? "pass" : "FAIL") << "\n";
      if (!ok)
        for (const auto& r : reports)
          if (!r.ok()) {
            t << "  " << r.name << ": " << to_string(r.verdict) << "\n";
            for (const auto& w : r.witnesses) t << "    " << w << "\n";
          }
    }
  }
  size_t total = corpus().size();
  if (o.format == "json") {
    json j;
    j["command"] = "corpus";
    j["total"] = total;
    j["passed"] = passed;
    j["entries"] = std::move(entries);
    emit(o, j.dump(2) + "\n");
  } else {
    t << "corpus: " << passed << "/" << total << " pass\n";
    emit(o, t.str());
  }
  return passed == total ? 0 : 1;
}

}  // namespace

// ---- dispatch --------------------------------------------------------------

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact embedded resolutions, zeta functions, and monodromy of plane curves"};
  app.name("monolab");
  app.require_subcommand(1);

  Opts o;
  int rc = 0;

  auto* resolve = app.add_subcommand("resolve", "embedded resolution and its dual graph");
  add_curve_arg(resolve, o);
  add_locality(resolve, o);
  add_resolve_opts(resolve, o);
  add_output_opts(resolve, o, {"text", "json", "dot"});
  resolve->callback([&] { rc = cmd_resolve(o); });

  auto* zeta = app.add_subcommand("zeta", "zeta functions of the curve");
  zeta->require_subcommand(1);

  auto* ztop = zeta->add_subcommand("top", "topological zeta function");
  add_curve_arg(ztop, o);
  add_locality(ztop, o);
  add_resolve_opts(ztop, o);
  ztop->add_option("--char", o.char_d, "character order d (keeps strata with d | N)");
  ztop->add_option("--form", o.form, "differential form numerator g for omega = g dx^dy");
  add_output_opts(ztop, o, {"text", "json"});
  ztop->callback([&] { rc = cmd_zeta_top(o); });

  auto* zmulti = zeta->add_subcommand("top-multi", "multivariate topological zeta function");
  add_curve_arg(zmulti, o);
  add_locality(zmulti, o);
  add_resolve_opts(zmulti, o);
  zmulti->add_option("--weight", o.weights,
                     "LABEL=INDEX assignment of s-variables (repeatable; labels may share)");
  add_output_opts(zmulti, o, {"text", "json"});
  zmulti->callback([&] { rc = cmd_zeta_top_multi(o); });

  auto* zpadic = zeta->add_subcommand("padic", "Igusa zeta function over Q_p");
  add_curve_arg(zpadic, o);
  add_locality(zpadic, o);
  add_resolve_opts(zpadic, o);
  zpadic->add_option("-p,--prime", o.p, "prime p")->required();
  zpadic->add_option("--max-i", o.max_i, "verify predicted counts mod p^i up to i = N");
  add_output_opts(zpadic, o, {"text", "json"});
  zpadic->callback([&] { rc = cmd_zeta_padic(o); });

  auto* zmot = zeta->add_subcommand("motivic", "naive motivic zeta function of the germ");
  add_curve_arg(zmot, o);
  add_locality(zmot, o);
  add_resolve_opts(zmot, o);
  add_output_opts(zmot, o, {"text", "json"});
  zmot->callback([&] { rc = cmd_zeta_motivic(o); });

  auto* count = app.add_subcommand("count", "brute-force solution counts mod p^i");
  add_curve_arg(count, o);
  add_locality(count, o);
  count->add_option("-p,--prime", o.p, "prime p")->required();
  count->add_option("--max-i", o.max_i, "count mod p^i for i = 1..N")->required();
  add_output_opts(count, o, {"text", "json"});
  count->callback([&] { rc = cmd_count(o); });

  auto* mono = app.add_subcommand("monodromy", "monodromy zeta function and eigenvalue orders");
  add_curve_arg(mono, o);
  add_locality(mono, o);
  add_resolve_opts(mono, o);
  add_output_opts(mono, o, {"text", "json"});
  mono->callback([&] { rc = cmd_monodromy(o); });

  auto* lctc = app.add_subcommand("lct", "log canonical threshold of the germ");
  add_curve_arg(lctc, o);
  add_locality(lctc, o);
  add_resolve_opts(lctc, o);
  add_output_opts(lctc, o, {"text", "json"});
  lctc->callback([&] { rc = cmd_lct(o); });

  auto* check = app.add_subcommand("check", "verify the theorems on a concrete curve");
  check->require_subcommand(1);
  for (const std::string which :
       {"monodromy", "holomorphy", "relations", "poles", "structure", "all"}) {
    auto* sub = check->add_subcommand(
        which, which == "all" ? "run every check" : "check " + which + " on the curve");
    add_curve_arg(sub, o);
    add_locality(sub, o);
    add_resolve_opts(sub, o);
    if (which == "holomorphy" || which == "all")
      sub->add_option("--char", o.char_d, "single character order d (default: sweep 2..10)");
    add_output_opts(sub, o, {"text", "json"});
    sub->callback([&rc, &o, which] { rc = cmd_check(o, which); });
  }

  auto* corp = app.add_subcommand("corpus", "run every check over the built-in germ corpus");
  add_output_opts(corp, o, {"text", "json"});
  corp->callback([&] { rc = cmd_corpus(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const error& e) {
    std::cerr << "monolab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "monolab: error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace monolab
