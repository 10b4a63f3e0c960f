#include "monolab/corpus.hpp"

#include "monolab/parse.hpp"

namespace monolab {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    auto P = [](const char* s) { return parse_poly(s); };
    auto one = [&](const char* name, const char* f) {
      return CorpusEntry{name, germ_of(parse_poly(f))};
    };
    std::vector<CorpusEntry> v;
    // smooth and normal-crossing germs
    v.push_back(one("smooth-line", "x"));
    v.push_back(one("smooth-parabola", "y-x^2"));
    v.push_back(one("axes", "x*y"));
    v.push_back({"weighted-axes", make_germ({{"a", P("x"), 2}, {"b", P("y"), 3}})});
    // nodes
    v.push_back(one("node", "y^2-x^2"));
    v.push_back(one("node-on-cubic", "y^2-x^2-x^3"));
    // the y^q - x^p family
    v.push_back(one("cusp-3-2", "y^2-x^3"));
    v.push_back(one("cusp-5-2", "y^2-x^5"));
    v.push_back(one("cusp-5-3", "y^3-x^5"));
    v.push_back(one("cusp-7-3", "y^3-x^7"));
    v.push_back(one("cusp-5-4", "y^4-x^5"));
    v.push_back(one("cusp-4-3", "y^3-x^4"));
    // two Puiseux pairs
    v.push_back(one("sextic", "(y^2-x^3)^2-x^6*y"));
    // ordinary multiple points and tangencies
    v.push_back(one("triple-point", "y*(y-x)*(y-4*x)"));
    v.push_back(one("four-lines", "x*y*(x+y)*(x-2*y)"));
    v.push_back(one("tangent-node", "y^2-x^4"));
    v.push_back({"tangent-pair", make_germ({{"a", P("y"), 1}, {"b", P("y-x^2"), 1}})});
    v.push_back(one("triple-tangent", "(y-x^2)*(y+x^2)*(y-2*x^2)"));
    // products of branches of different complexity
    v.push_back(one("cusp-with-line", "x*(y^2-x^3)"));
    v.push_back(one("cusp-with-double-line", "x^2*(y^2-x^3)"));
    v.push_back(one("cusp-with-triple-line", "x^3*(y^2-x^3)"));
    v.push_back(one("double-cusp", "(y^2-x^3)*(x^2-y^3)"));
    // non-reduced
    v.push_back(one("cusp-squared", "(y^2-x^3)^2"));
    return v;
  }();
  return entries;
}

}  // namespace monolab
