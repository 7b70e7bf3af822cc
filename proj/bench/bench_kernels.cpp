// Serial reference kernels against their OpenMP versions: timings and agreement.

#include "alcove/gallery.hpp"
#include "alcove/quiver.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>

using namespace alcove;

namespace {

template <class F>
double seconds(F&& f)
{
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const std::vector<WalkLeaf>& a, const std::vector<WalkLeaf>& b)
{
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].start != b[k].start || a[k].crossings != b[k].crossings || a[k].dim != b[k].dim) return false;
  return true;
}

void walk_case(const char* name, int rank, std::vector<long long> lambda, bool ls_only)
{
  const AffineComplex ac(RootSystem::type_a(rank));
  const Gallery gamma = minimal_gallery(ac, LatticeVector::coweight(lambda));
  const WalkTables tables(ac);
  const WalkSpec spec = walk_spec(ac, gamma, ls_only, 1ULL << 40);
  std::vector<WalkLeaf> s, p;
  const double ts = seconds([&] { s = walk_serial(tables, spec); });
  const double tp = seconds([&] { p = walk_parallel(tables, spec, 0); });
  std::printf("%-28s p=%-3d leaves=%-9zu serial=%8.3fs parallel=%8.3fs speedup=%5.2f %s\n", name, gamma.length(),
              s.size(), ts, tp, ts / tp, same(s, p) ? "agree" : "DIFFER");
}

void submodule_case(const char* name, const QuiverModule& m, int prime)
{
  SubmoduleOptions opt;
  opt.method = SubmoduleMethod::exhaustive;
  opt.prime = prime;
  opt.budget = 1ULL << 40;
  const auto prob = detail::exhaustive_problem(m, opt);
  DimVectorSet s, p;
  const double ts = seconds([&] { s = detail::exhaustive_serial(prob); });
  const double tp = seconds([&] { p = detail::exhaustive_parallel(prob, 0); });
  std::printf("%-28s cand=%-9llu sets=%-4zu serial=%8.3fs parallel=%8.3fs speedup=%5.2f %s\n", name, prob.combinations,
              s.size(), ts, tp, ts / tp, s == p ? "agree" : "DIFFER");
}

} // namespace

int main()
{
  std::printf("threads: %d\n", omp_get_max_threads());
  walk_case("A2 (12,0) LS", 2, {12, 0}, true);
  walk_case("A2 (4,4) LS", 2, {4, 4}, true);
  walk_case("A2 (5,0) all", 2, {5, 0}, false);
  walk_case("A3 (2,1,1) LS", 3, {2, 1, 1}, true);
  walk_case("A3 (1,1,1) all", 3, {1, 1, 1}, false);
  submodule_case("N(2,4,5) over F3", maya_module(5, {2, 4, 5}), 3);
  submodule_case("C+D+C over F3", direct_sum(direct_sum(a2_module('C'), a2_module('D')), a2_module('C')), 3);
  submodule_case("N(3,4) n=4 over F2", maya_module(4, {3, 4}), 2);
  return 0;
}
