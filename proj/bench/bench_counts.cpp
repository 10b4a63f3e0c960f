// Times the enumeration kernel: serial reference vs the (OpenMP) parallel
// entry point, checking that the counts agree bit for bit.
//
//   monolab-bench [poly] [p] [imax]

#include <monolab/counting.hpp>
#include <monolab/parse.hpp>

#include <chrono>
#include <iostream>
#include <string>

using namespace monolab;

int main(int argc, char** argv) {
  std::string src = argc > 1 ? argv[1] : "(y^2-x^3)^2-x^6*y";
  long p = argc > 2 ? std::stol(argv[2]) : 11;
  int imax = argc > 3 ? std::stoi(argv[3]) : 4;

  MPoly f = parse_poly(src);
  namespace chrono = std::chrono;
  auto ms = [](auto d) { return chrono::duration_cast<chrono::milliseconds>(d).count(); };

  auto t0 = chrono::steady_clock::now();
  CountSeries serial = brute_force_counts_serial(f, p, imax);
  auto t1 = chrono::steady_clock::now();
  CountSeries parallel = brute_force_counts(f, p, imax);
  auto t2 = chrono::steady_clock::now();

  std::cout << "f = " << src << ", p = " << p << ", imax = " << imax << "\n";
  for (int i = 0; i < imax; ++i)
    std::cout << "  N_" << (i + 1) << " = " << serial.counts[size_t(i)] << "\n";
  std::cout << "serial   " << ms(t1 - t0) << " ms\n";
  std::cout << "parallel " << ms(t2 - t1) << " ms\n";
  if (serial.counts != parallel.counts) {
    std::cout << "MISMATCH between serial and parallel counts\n";
    return 1;
  }
  std::cout << "counts identical\n";
  return 0;
}
