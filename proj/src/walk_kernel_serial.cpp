#include "alcove/walk_kernel.hpp"

namespace alcove {

std::vector<WalkLeaf> walk_serial(const WalkTables& t, const WalkSpec& spec)
{
  std::vector<WalkLeaf> out;
  std::atomic<std::size_t> found{0};
  for (int start = 0; start < static_cast<int>(t.start_elements.size()); ++start)
    detail::walk_from(t, spec, start, 0, 0, detail::initial_state(t, start), out, found);
  return out;
}

} // namespace alcove
