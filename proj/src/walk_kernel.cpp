#include "alcove/walk_kernel.hpp"

#include "alcove/errors.hpp"

#include <algorithm>

namespace alcove {

WalkTables::WalkTables(const AffineComplex& ac)
    : rank(ac.rank()), num_roots(ac.roots().num_positive_roots()),
      order(static_cast<int>(ac.weyl().order())), weyl(&ac.weyl())
{
  if (rank > detail::max_walk_rank) throw InvalidInput("walk kernel supports rank at most 8");
  const RootSystem& rs = ac.roots();
  const Face& fund = ac.fundamental_alcove();
  const auto starts = ac.alcoves_containing(ac.origin());
  start_elements.assign(starts.size(), -1);
  for (int w = 0; w < order; ++w) {
    const Face a = ac.carrier_face(weyl->apply(w, fund.witness()));
    const auto it = std::lower_bound(starts.begin(), starts.end(), a);
    start_elements[it - starts.begin()] = w;
  }

  wall_root.push_back(rs.highest_root());
  wall_level.push_back(1);
  wall_side.push_back(-1);
  for (int i = 0; i < rank; ++i) {
    wall_root.push_back(rs.simple_root(i));
    wall_level.push_back(0);
    wall_side.push_back(1);
  }
  for (int a = 0; a < num_roots; ++a) {
    pairing_rows.push_back(rs.pairing_row(a));
    coroots.push_back(rs.positive_roots()[a]);
  }
  const auto& verts = ac.fundamental_vertices();
  for (int w = 0; w < order; ++w)
    for (const auto& v : verts) vertex_images.push_back(weyl->apply(w, v));
}

RationalPoint leaf_endpoint(const WalkTables& t, const WalkSpec& spec, const WalkLeaf& leaf)
{
  RationalPoint x = t.vertex_images[leaf.element * (t.rank + 1) + spec.end_vertex];
  for (int i = 0; i < t.rank; ++i) x[i] += leaf.shift[i];
  return x;
}

namespace detail {

WalkState initial_state(const WalkTables& t, int start)
{
  WalkState s;
  s.element = t.start_elements.at(start);
  s.dim = t.num_roots - t.weyl->length(s.element);
  return s;
}

bool advance(const WalkTables& t, const WalkSpec& spec, int step, bool cross, WalkState& s)
{
  const int type = spec.steps[step];
  const int image = t.weyl->root_image(s.element, t.wall_root[type]);
  const int root = (image > 0 ? image : -image) - 1;
  const int sign = image > 0 ? 1 : -1;
  const auto& row = t.pairing_rows[root];
  long long at_shift = 0;
  for (int i = 0; i < t.rank; ++i) at_shift += row[i] * s.shift[i];
  const long long level = sign > 0 ? t.wall_level[type] + at_shift : at_shift - t.wall_level[type];
  // side > 0: the current alcove lies on the positive side of the wall.
  const int side = t.wall_side[type] * sign;
  if (!cross) {
    if (side > 0) {
      ++s.dim;
    } else {
      if (spec.ls_only) return false;
      s.positively_folded = false;
    }
    return true;
  }
  if (side < 0) ++s.dim;
  s.element = t.weyl->reflect_left(root, s.element);
  const long long k = at_shift - level;
  const auto& coroot = t.coroots[root];
  for (int i = 0; i < t.rank; ++i) s.shift[i] -= k * coroot[i];
  return true;
}

bool accept(const WalkTables& t, const WalkSpec& spec, const WalkState& s)
{
  if (!spec.ls_only) return true;
  const RationalPoint& v = t.vertex_images[s.element * (t.rank + 1) + spec.end_vertex];
  long long ht = 0;
  for (int i = 0; i < t.rank; ++i) {
    const Rational d = spec.lambda[i] - v[i] - Rational(s.shift[i]);
    if (d.denominator() != 1 || d.numerator() < 0) return false;
    ht += d.numerator();
  }
  return s.dim == spec.based_dim - ht;
}

void walk_from(const WalkTables& t, const WalkSpec& spec, int start, std::uint64_t bits, int depth,
               const WalkState& s, std::vector<WalkLeaf>& out, std::atomic<std::size_t>& found)
{
  if (depth == static_cast<int>(spec.steps.size())) {
    if (!accept(t, spec, s)) return;
    if (++found > spec.budget) throw BudgetExceeded("gallery enumeration exceeded the budget");
    out.push_back({start, bits, s.element, std::vector<long long>(s.shift.begin(), s.shift.begin() + t.rank), s.dim,
                   s.positively_folded});
    return;
  }
  for (int cross = 0; cross < 2; ++cross) {
    WalkState next = s;
    if (!advance(t, spec, depth, cross == 1, next)) continue;
    walk_from(t, spec, start, bits | (static_cast<std::uint64_t>(cross) << depth), depth + 1, next, out, found);
  }
}

} // namespace detail

} // namespace alcove
