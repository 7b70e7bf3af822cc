#include "alcove/walk_kernel.hpp"

#include "alcove/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <iterator>

namespace alcove {

std::vector<WalkLeaf> walk_parallel(const WalkTables& t, const WalkSpec& spec, int jobs)
{
  const int p = static_cast<int>(spec.steps.size());
  const int prefix = std::min(p, 8);
  const long long per_start = 1LL << prefix;
  const long long tasks = static_cast<long long>(t.start_elements.size()) * per_start;
  std::vector<std::vector<WalkLeaf>> slots(tasks);
  std::atomic<std::size_t> found{0};
  std::exception_ptr error;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long task = 0; task < tasks; ++task) {
    const int start = static_cast<int>(task / per_start);
    const long long path = task % per_start;
    try {
      detail::WalkState s = detail::initial_state(t, start);
      std::uint64_t bits = 0;
      bool alive = true;
      // The prefix is read with step 1 as the most significant bit, so that
      // slot order matches the depth-first order of the serial walk.
      for (int d = 0; d < prefix && alive; ++d) {
        const bool cross = (path >> (prefix - 1 - d)) & 1;
        alive = detail::advance(t, spec, d, cross, s);
        if (cross) bits |= std::uint64_t{1} << d;
      }
      if (alive) detail::walk_from(t, spec, start, bits, prefix, s, slots[task], found);
    } catch (...) {
#pragma omp critical(alcove_walk_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::vector<WalkLeaf> out;
  for (auto& slot : slots) std::move(slot.begin(), slot.end(), std::back_inserter(out));
  return out;
}

} // namespace alcove
