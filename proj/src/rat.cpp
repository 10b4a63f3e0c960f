#include "monolab/rat.hpp"

#include <algorithm>

namespace monolab {

Rat make_rat(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(a, b);
  q.canonicalize();
  return q;
}

Int int_pow(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& a, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (a == 0) throw std::invalid_argument("rat_pow: zero to negative power");
    return rat_pow(Rat(1) / a, -e);
  }
  Rat r(1);
  Rat base = a;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::vector<Int> divisors(const Int& n) {
  if (n == 0) throw std::invalid_argument("divisors of zero");
  Int m = abs(n);
  // factor by trial division
  std::vector<std::pair<Int, unsigned>> fac;
  Int d = 2;
  while (d * d <= m) {
    if (m % d == 0) {
      unsigned e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      fac.push_back({d, e});
    }
    d += (d == 2) ? 1 : 2;
  }
  if (m > 1) fac.push_back({m, 1});
  std::vector<Int> out{Int(1)};
  for (auto& [p, e] : fac) {
    size_t base = out.size();
    Int pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

Rat parse_rat(const std::string& s) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rat: bad literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
  q.canonicalize();
  return q;
}

long to_long(const Int& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("Int does not fit in long");
  return n.get_si();
}

const char* error::name(errc c) {
  switch (c) {
    case errc::NotAGerm: return "NotAGerm";
    case errc::NonRationalCenter: return "NonRationalCenter";
    case errc::NonRationalInfinity: return "NonRationalInfinity";
    case errc::BudgetExceeded: return "BudgetExceeded";
    case errc::BadPrime: return "BadPrime";
    case errc::MissingEulerData: return "MissingEulerData";
    case errc::ZeroLinForm: return "ZeroLinForm";
    case errc::SharedRatio: return "SharedRatio";
    case errc::NotIsolated: return "NotIsolated";
    case errc::SyntaxError: return "SyntaxError";
    case errc::UnknownVariable: return "UnknownVariable";
    case errc::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace monolab
