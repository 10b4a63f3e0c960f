#include "monolab/counting.hpp"

#include <stdexcept>

namespace monolab {

namespace {

// Dense coefficient table of the integer representative reduced mod m:
// yc[j][k] is the coefficient of y^j x^k.  All moduli here satisfy m^2 <=
// budget <= 2^63, so plain uint64 products never overflow.
struct ModTable {
  std::vector<std::vector<std::uint64_t>> yc;
};

ModTable reduce_mod(const MPoly& f, std::uint64_t m) {
  ModTable t;
  Int mm{long(m)};
  for (const auto& [es, c] : f.terms) {
    int ex = 0, ey = 0;
    for (size_t v = 0; v < f.vars.size(); ++v)
      (f.vars[v] == "x" ? ex : ey) = es[v];
    if (size_t(ey) >= t.yc.size()) t.yc.resize(size_t(ey) + 1);
    auto& row = t.yc[size_t(ey)];
    if (size_t(ex) >= row.size()) row.resize(size_t(ex) + 1, 0);
    Int r = c.get_num() % mm;  // primitive representative: denominator 1
    if (r < 0) r += mm;
    row[size_t(ex)] = r.get_ui();
  }
  return t;
}

std::uint64_t horner(const std::vector<std::uint64_t>& cs, std::uint64_t v, std::uint64_t m) {
  std::uint64_t a = 0;
  for (size_t k = cs.size(); k-- > 0;) a = (a * v + cs[k]) % m;
  return a;
}

// Count the zeros of f(x, .) mod m over y in {0, step, 2*step, ...}.
std::uint64_t row_zeros(const ModTable& t, std::uint64_t m, std::uint64_t x,
                        std::uint64_t step) {
  std::vector<std::uint64_t> a(t.yc.size());
  for (size_t j = 0; j < t.yc.size(); ++j) a[j] = horner(t.yc[j], x, m);
  std::uint64_t n = 0;
  for (std::uint64_t y = 0; y < m; y += step)
    if (horner(a, y, m) == 0) ++n;
  return n;
}

std::uint64_t count_mod(const ModTable& t, std::uint64_t m, std::uint64_t step,
                        bool parallel) {
  const long nx = long(m / step);  // step divides m
  std::uint64_t total = 0;
  if (parallel) {
#if defined(_OPENMP)
#pragma omp parallel for reduction(+ : total) schedule(static)
#endif
    for (long i = 0; i < nx; ++i) total += row_zeros(t, m, std::uint64_t(i) * step, step);
  } else {
    for (long i = 0; i < nx; ++i) total += row_zeros(t, m, std::uint64_t(i) * step, step);
  }
  return total;
}

CountSeries run(const MPoly& f, long p, int imax, bool restricted, std::uint64_t budget,
                bool parallel) {
  if (!is_prime(p)) throw error(errc::BadPrime, std::to_string(p) + " is not prime");
  if (imax < 1) throw std::invalid_argument("imax must be >= 1");
  for (const auto& v : f.vars)
    if (v != "x" && v != "y") throw std::invalid_argument("count variables are x and y");
  MPoly g = primitive_part(f);
  if (g.is_zero()) throw std::invalid_argument("zero polynomial");

  std::uint64_t work = 1;
  for (int k = 0; k < 2 * imax; ++k) {
    if (work > budget / std::uint64_t(p))
      throw error(errc::BudgetExceeded, "p^(2*imax) exceeds the enumeration budget");
    work *= std::uint64_t(p);
  }

  CountSeries out;
  out.p = p;
  out.restricted = restricted;
  std::uint64_t m = 1;
  for (int i = 1; i <= imax; ++i) {
    m *= std::uint64_t(p);
    ModTable t = reduce_mod(g, m);
    out.counts.push_back(count_mod(t, m, restricted ? std::uint64_t(p) : 1, parallel));
  }
  return out;
}

}  // namespace

bool is_prime(long p) {
  if (p < 2) return false;
  Int n(p);
  return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

CountSeries brute_force_counts(const MPoly& f, long p, int imax, bool restricted,
                               std::uint64_t budget) {
  return run(f, p, imax, restricted, budget, true);
}

CountSeries brute_force_counts_serial(const MPoly& f, long p, int imax, bool restricted,
                                      std::uint64_t budget) {
  return run(f, p, imax, restricted, budget, false);
}

}  // namespace monolab
