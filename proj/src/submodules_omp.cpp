#include "alcove/quiver.hpp"

#include <omp.h>

namespace alcove::detail {

DimVectorSet exhaustive_parallel(const ExhaustiveProblem& prob, int jobs)
{
  DimVectorSet out;
  const long long n = static_cast<long long>(prob.combinations);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    DimVectorSet local;
#pragma omp for schedule(static)
    for (long long i = 0; i < n; ++i)
      if (auto dv = exhaustive_candidate(prob, static_cast<unsigned long long>(i))) local.insert(std::move(*dv));
#pragma omp critical(alcove_submodule_merge)
    out.insert(local.begin(), local.end());
  }
  return out;
}

} // namespace alcove::detail
