#include "monolab/linform.hpp"

#include <sstream>

namespace monolab {

bool LinForm::is_zero() const {
  if (c0 != 0) return false;
  for (auto& c : cs)
    if (c != 0) return false;
  return true;
}

bool LinForm::is_constant() const {
  for (auto& c : cs)
    if (c != 0) return false;
  return true;
}

Rat LinForm::canonicalize() {
  if (is_zero()) throw error(errc::ZeroLinForm, "cannot canonicalize the zero form");
  Int g = abs(c0);
  for (auto& c : cs) g = int_gcd(g, c);
  Int first = c0;
  if (first == 0)
    for (auto& c : cs)
      if (c != 0) {
        first = c;
        break;
      }
  if (first < 0) g = -g;
  c0 /= g;
  for (auto& c : cs) c /= g;
  return Rat(g);
}

Rat LinForm::eval(const std::vector<Rat>& point) const {
  Rat acc(c0);
  for (size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    if (i >= point.size()) throw std::invalid_argument("LinForm::eval: point too short");
    acc += Rat(cs[i]) * point[i];
  }
  return acc;
}

MPoly LinForm::to_mpoly(const std::vector<std::string>& vnames) const {
  MPoly p = MPoly::constant(Rat(c0));
  for (size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    p = p + Rat(cs[i]) * MPoly::var(vnames.at(i));
  }
  return p;
}

std::string LinForm::to_string(const std::vector<std::string>& vnames) const {
  std::ostringstream os;
  bool first = true;
  if (c0 != 0 || is_constant()) {
    os << c0.get_str();
    first = false;
  }
  for (size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    if (!first && cs[i] > 0) os << "+";
    if (cs[i] == -1) os << "-";
    else if (cs[i] != 1) os << cs[i].get_str();
    os << vnames.at(i);
    first = false;
  }
  return os.str();
}

bool LinForm::operator<(const LinForm& o) const {
  if (c0 != o.c0) return c0 < o.c0;
  return cs < o.cs;
}

bool LinForm::operator==(const LinForm& o) const { return c0 == o.c0 && cs == o.cs; }

bool proportional(const LinForm& a, const LinForm& b) {
  // cross products must all agree
  if (a.is_zero() || b.is_zero()) return false;
  size_t n = std::max(a.cs.size(), b.cs.size());
  auto at = [](const LinForm& f, size_t i) { return i < f.cs.size() ? f.cs[i] : Int(0); };
  for (size_t i = 0; i <= n; ++i)
    for (size_t j = i + 1; j <= n; ++j) {
      Int ai = i == 0 ? a.c0 : at(a, i - 1);
      Int aj = j == 0 ? a.c0 : at(a, j - 1);
      Int bi = i == 0 ? b.c0 : at(b, i - 1);
      Int bj = j == 0 ? b.c0 : at(b, j - 1);
      if (ai * bj != aj * bi) return false;
    }
  return true;
}

}  // namespace monolab
