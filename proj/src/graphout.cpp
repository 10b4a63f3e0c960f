#include <monolab/graphout.hpp>

#include <json.hpp>

#include <sstream>

namespace monolab {

namespace {

std::string ratio_str(const Int& nu, const Int& n) {
  if (n == 0) return "-";
  return to_string(make_rat(nu, n));
}

}  // namespace

std::string to_dot(const ResolutionGraph& g) {
  std::ostringstream out;
  out << "graph dual {\n";
  out << "  layout=dot;\n  node [fontsize=10];\n";
  for (const auto& c : g.components) {
    Int n = g.N_total(c);
    out << "  " << c.name;
    if (c.exceptional()) {
      out << " [shape=point, xlabel=\"" << c.name << " (" << n.get_str() << ","
          << c.nu.get_str() << ") " << ratio_str(c.nu, n)
          << " self=" << c.self_int << "\"];\n";
    } else {
      out << " [shape=circle, label=\"" << c.name << "\", xlabel=\"(" << n.get_str()
          << "," << c.nu.get_str() << ") " << ratio_str(c.nu, n) << "\"];\n";
    }
  }
  for (const auto& e : g.edges) {
    out << "  " << g.components[size_t(e.a)].name << " -- "
        << g.components[size_t(e.b)].name;
    if (e.points != 1 || !e.rational) {
      out << " [label=\"" << e.points << " pt" << (e.points == 1 ? "" : "s");
      if (!e.rational) out << " (conjugate)";
      out << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json_text(const ResolutionGraph& g, int indent) {
  using json = nlohmann::ordered_json;
  json j;
  j["mode"] = g.germ_mode ? "germ" : "global";
  if (g.germ_mode)
    j["base_point"] = {to_string(g.base_point.first), to_string(g.base_point.second)};

  j["labels"] = json::array();
  for (size_t l = 0; l < g.labels.size(); ++l)
    j["labels"].push_back({{"label", g.labels[l]}, {"multiplicity", g.label_multiplicity[l]}});
  j["pieces"] = json::array();
  for (const auto& p : g.pieces) j["pieces"].push_back(to_string(p));
  j["piece_multiplicity"] = g.piece_mult;

  j["components"] = json::array();
  for (const auto& c : g.components) {
    json jc;
    jc["id"] = c.id;
    jc["name"] = c.name;
    jc["kind"] = c.exceptional() ? "exceptional" : "strict";
    jc["N"] = json::array();
    for (const auto& n : c.N) jc["N"].push_back(n.get_str());
    jc["N_total"] = g.N_total(c).get_str();
    jc["nu"] = c.nu.get_str();
    if (c.exceptional()) jc["self_int"] = c.self_int;
    jc["birth_index"] = c.birth_index;
    if (!c.exceptional()) {
      jc["piece"] = c.piece;
      jc["branches"] = c.branches;
    }
    try {
      jc["chi_open"] = g.chi_open(c.id);
    } catch (const error&) {
      jc["chi_open"] = nullptr;
    }
    j["components"].push_back(std::move(jc));
  }

  j["edges"] = json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"a", e.a},
                          {"b", e.b},
                          {"points", e.points},
                          {"rational", e.rational},
                          {"at", e.at}});

  j["fiber"] = g.fiber();

  j["blowup_log"] = json::array();
  for (const auto& r : g.blowup_log) {
    json jr;
    jr["component"] = r.component;
    jr["center"] = r.center;
    jr["through"] = r.through;
    jr["strict_mult"] = r.strict_mult;
    jr["piece_mult"] = r.piece_mult;
    j["blowup_log"].push_back(std::move(jr));
  }

  j["warnings"] = g.warnings;

  if (g.euler.have) {
    json je;
    je["chi_strict"] = json::object();
    for (const auto& [id, chi] : g.euler.chi_strict)
      je["chi_strict"][g.components[size_t(id)].name] = chi;
    je["chi_complement"] = g.euler.chi_complement;
    j["euler"] = std::move(je);
  }

  return j.dump(indent) + "\n";
}

}  // namespace monolab
