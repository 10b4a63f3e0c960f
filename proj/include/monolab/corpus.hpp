#pragma once

// The standing germ corpus the property suites and the corpus runner work
// through: smooth germs, normal crossings, nodes, the y^q - x^p cusps,
// ordinary multiple points, tangent configurations, products mixing these,
// and non-reduced cases.  Every entry resolves over Q at the origin.

#include <monolab/curve.hpp>

#include <string>
#include <vector>

namespace monolab {

struct CorpusEntry {
  std::string name;
  CurveSystem curve;  // germ at the origin
};

const std::vector<CorpusEntry>& corpus();

}  // namespace monolab
