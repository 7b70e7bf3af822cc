#include "alcove/quiver.hpp"

namespace alcove::detail {

DimVectorSet exhaustive_serial(const ExhaustiveProblem& prob)
{
  DimVectorSet out;
  for (unsigned long long i = 0; i < prob.combinations; ++i)
    if (auto dv = exhaustive_candidate(prob, i)) out.insert(std::move(*dv));
  return out;
}

} // namespace alcove::detail
