// Serial reference kernels against their OpenMP counterparts.
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qmult/multiplicity.hpp"

using namespace qmult;

namespace {

template <class F>
double seconds_of(int reps, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

bool report(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
            << serial << " s" << std::setw(10) << parallel << " s" << std::setw(8) << std::setprecision(2)
            << serial / parallel << "x  " << (same ? "match" : "MISMATCH") << '\n';
  return same;
}

bool bench_box(const LieType& t, int reps) {
  const auto rs = build_root_system(t);
  auto records = alternation_set(rs, rs.highest_root, Weight::zero(rs.rank()));
  std::vector<Weight> xis;
  for (const auto& r : records) xis.push_back(r.xi);
  const auto corner = BoxTable::covering_corner(xis);
  std::vector<std::uint64_t> a, b;
  const double s = seconds_of(reps, [&] { a = BoxTable(rs, corner, Kernel::Serial).data(); });
  const double p = seconds_of(reps, [&] { b = BoxTable(rs, corner, Kernel::Parallel).data(); });
  return report("box table " + to_string(t), s, p, a == b);
}

bool bench_tree(const LieType& t, int reps) {
  const auto rs = build_root_system(t);
  auto a = alternation_set(rs, rs.highest_root, Weight::zero(rs.rank()));
  auto b = a;
  MultiplicityOptions serial{Method::Tree, Kernel::Serial};
  MultiplicityOptions parallel{Method::Tree, Kernel::Parallel};
  const double s = seconds_of(reps, [&] { fill_partitions(rs, a, serial); });
  const double p = seconds_of(reps, [&] { fill_partitions(rs, b, parallel); });
  bool same = a.size() == b.size();
  for (std::size_t k = 0; same && k < a.size(); ++k) same = a[k].pq == b[k].pq;
  return report("tree batch " + to_string(t), s, p, same);
}

bool bench_filter(const LieType& t, int reps) {
  const auto rs = build_root_system(t);
  const auto group = enumerate_group(rs);
  std::vector<AlternationRecord> a, b;
  const double s = seconds_of(reps, [&] { a = alternation_filter_serial(rs, group, rs.highest_root, Weight::zero(rs.rank())); });
  const double p = seconds_of(reps, [&] { b = alternation_filter_parallel(rs, group, rs.highest_root, Weight::zero(rs.rank())); });
  bool same = a.size() == b.size();
  for (std::size_t k = 0; same && k < a.size(); ++k) same = a[k].element.matrix == b[k].element.matrix;
  return report("exhaustive filter " + to_string(t), s, p, same);
}

}  // namespace

int main(int argc, char** argv) {
  // "--quick" keeps the run short enough for ctest.
  const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  const int reps = quick ? 1 : 3;
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << '\n';
#else
  std::cout << "built without OpenMP; both columns run serially\n";
#endif
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12) << "serial" << std::setw(12)
            << "parallel" << std::setw(9) << "speedup" << '\n';
  bool ok = true;
  ok &= bench_box(parse_lie_type("E6"), reps);
  ok &= bench_tree(parse_lie_type("F4"), reps);
  ok &= bench_filter(parse_lie_type(quick ? "F4" : "E6"), reps);
  if (!quick) {
    ok &= bench_box(parse_lie_type("E8"), reps);
    ok &= bench_tree(parse_lie_type("E6"), reps);
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
