#include "monolab/unityrat.hpp"

#include <sstream>
#include <stdexcept>

namespace monolab {

void UnityRat::mul_factor(long N, int e) {
  if (N < 1) throw std::invalid_argument("UnityRat: factor exponent base must be >= 1");
  if (e == 0) return;
  auto it = exps.find(N);
  if (it == exps.end()) exps[N] = e;
  else {
    it->second += e;
    if (it->second == 0) exps.erase(it);
  }
}

UnityRat operator*(const UnityRat& a, const UnityRat& b) {
  UnityRat r = a;
  for (auto& [N, e] : b.exps) r.mul_factor(N, e);
  return r;
}

std::map<long, int> cyclo_multiplicities(const UnityRat& u) {
  std::map<long, int> m;
  for (auto& [N, e] : u.exps) {
    for (long d = 1; d * d <= N; ++d) {
      if (N % d) continue;
      m[d] += e;
      if (d != N / d) m[N / d] += e;
    }
  }
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
  return m;
}

bool is_polynomial(const UnityRat& u) {
  for (auto& [l, m] : cyclo_multiplicities(u))
    if (m < 0) return false;
  return true;
}

long degree(const UnityRat& u) {
  long d = 0;
  for (auto& [N, e] : u.exps) d += N * long(e);
  return d;
}

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

long zero_count(const UnityRat& u) {
  long z = 0;
  for (auto& [l, m] : cyclo_multiplicities(u))
    if (m > 0) z += long(m) * euler_phi(l);
  return z;
}

std::pair<MPoly, MPoly> expand(const UnityRat& u) {
  MPoly num = MPoly::constant(1), den = MPoly::constant(1);
  MPoly t = MPoly::var("t");
  for (auto& [N, e] : u.exps) {
    MPoly f = mp_pow(t, unsigned(N)) - MPoly::constant(1);
    if (e > 0) num = num * mp_pow(f, unsigned(e));
    else den = den * mp_pow(f, unsigned(-e));
  }
  return {num, den};
}

Rat eval(const UnityRat& u, const Rat& t0) {
  Rat r(1);
  for (auto& [N, e] : u.exps) {
    Rat base = rat_pow(t0, N) - 1;
    if (base == 0) {
      if (e < 0) throw std::domain_error("UnityRat eval: pole at this point");
      return Rat(0);
    }
    r *= rat_pow(base, e);
  }
  return r;
}

std::string to_string(const UnityRat& u) {
  std::ostringstream pos, neg;
  int npos = 0, nneg = 0;
  for (auto& [N, e] : u.exps) {
    std::ostringstream f;
    f << "(t";
    if (N > 1) f << "^" << N;
    f << "-1)";
    if (e > 0) {
      pos << f.str();
      if (e > 1) pos << "^" << e;
      ++npos;
    } else {
      neg << f.str();
      if (e < -1) neg << "^" << -e;
      ++nneg;
    }
  }
  std::string n = npos ? pos.str() : "1";
  if (!nneg) return n;
  std::ostringstream os;
  os << n << "/";
  if (nneg > 1) os << "(" << neg.str() << ")";
  else os << neg.str();
  return os.str();
}

MPoly cyclotomic_poly(long n) {
  MPoly t = MPoly::var("t");
  MPoly f = mp_pow(t, unsigned(n)) - MPoly::constant(1);
  for (long d = 1; d < n; ++d) {
    if (n % d) continue;
    auto q = divexact(f, cyclotomic_poly(d));
    f = *q;
  }
  return f;
}

UnityRat from_cyclo_multiplicities(const std::map<long, int>& m) {
  std::map<long, int> work = m;
  UnityRat u;
  while (true) {
    long N = 0;
    for (auto& [l, v] : work)
      if (v != 0) N = std::max(N, l);
    if (N == 0) break;
    int e = work[N];
    u.mul_factor(N, e);
    for (long d = 1; d * d <= N; ++d) {
      if (N % d) continue;
      work[d] -= e;
      if (d != N / d) work[N / d] -= e;
    }
  }
  for (auto& [l, v] : work)
    if (v != 0) throw std::invalid_argument("no finite (t^N-1) product matches");
  return u;
}

}  // namespace monolab
