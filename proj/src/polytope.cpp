#include "alcove/polytope.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace alcove {

namespace {

using Vec = RationalPoint;

Vec sub(const Vec& a, const Vec& b)
{
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Rational dot(const Vec& a, const Vec& b)
{
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Row-reduces `rows` in place; returns pivot columns.
std::vector<int> row_reduce(std::vector<Vec>& rows, int cols)
{
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == Rational(0)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == Rational(0)) continue;
      const Rational f = rows[i][c];
      for (int k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

struct Span {
  Vec origin;
  std::vector<Vec> basis; // reduced rows
  std::vector<int> pivots;
};

Span affine_span(const std::vector<Vec>& pts)
{
  Span s;
  s.origin = pts.front();
  for (const Vec& p : pts) s.basis.push_back(sub(p, s.origin));
  s.pivots = row_reduce(s.basis, static_cast<int>(s.origin.size()));
  return s;
}

bool in_span(const Span& s, const Vec& x)
{
  Vec d = sub(x, s.origin);
  for (std::size_t r = 0; r < s.basis.size(); ++r) {
    const Rational f = d[s.pivots[r]];
    if (f == Rational(0)) continue;
    for (std::size_t k = 0; k < d.size(); ++k) d[k] -= f * s.basis[r][k];
  }
  return std::all_of(d.begin(), d.end(), [](const Rational& v) { return v == Rational(0); });
}

Vec project(const Span& s, const Vec& x)
{
  Vec y;
  for (int c : s.pivots) y.push_back(x[c]);
  return y;
}

Rational cross2(const Vec& o, const Vec& a, const Vec& b)
{
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Indices of the hull vertices of 2D points in counterclockwise order.
std::vector<std::size_t> monotone_chain(const std::vector<Vec>& pts)
{
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx[i]]) <= Rational(0)) --k;
    hull[k++] = idx[i];
  }
  for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx[i]]) <= Rational(0)) --k;
    hull[k++] = idx[i];
  }
  hull.resize(k - 1);
  return hull;
}

Vec cross3(const Vec& a, const Vec& b)
{
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

struct Plane {
  Vec normal;
  Rational offset; // normal . y <= offset on the polytope
  bool operator<(const Plane& o) const { return std::tie(normal, offset) < std::tie(o.normal, o.offset); }
};

/// Facet planes of a full-dimensional point set in R^3, normals scaled to a canonical form.
std::vector<Plane> facets3(const std::vector<Vec>& pts)
{
  std::set<Plane> found;
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Vec nrm = cross3(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
        if (std::all_of(nrm.begin(), nrm.end(), [](const Rational& v) { return v == Rational(0); })) continue;
        Rational off = dot(nrm, pts[a]);
        bool above = false, below = false;
        for (const Vec& p : pts) {
          const Rational v = dot(nrm, p) - off;
          above |= v > Rational(0);
          below |= v < Rational(0);
        }
        if (above && below) continue;
        if (above) {
          for (auto& x : nrm) x = -x;
          off = -off;
        }
        // Canonical scale: first nonzero entry of the normal has absolute value 1.
        const auto first = std::find_if(nrm.begin(), nrm.end(), [](const Rational& v) { return v != Rational(0); });
        const Rational s = *first < Rational(0) ? -*first : *first;
        for (auto& x : nrm) x /= s;
        off /= s;
        found.insert({nrm, off});
      }
  return {found.begin(), found.end()};
}

/// x lies in conv(pts): phase one of the simplex method on
/// lambda >= 0, sum lambda = 1, sum lambda_i pts_i = x, with Bland's rule.
bool in_hull_lp(const std::vector<Vec>& pts, const Vec& x)
{
  const std::size_t n = pts.size();
  const std::size_t m = x.size() + 1;
  const std::size_t cols = n + m + 1;
  std::vector<Vec> t(m, Vec(cols, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < n; ++j) t[k][j] = k + 1 < m ? pts[j][k] : Rational(1);
    t[k][cols - 1] = k + 1 < m ? x[k] : Rational(1);
    if (t[k][cols - 1] < Rational(0))
      for (auto& v : t[k]) v = -v;
    t[k][n + k] = 1;
    basis[k] = n + k;
  }
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols && enter == cols; ++j) {
      Rational reduced = j >= n ? Rational(1) : Rational(0);
      for (std::size_t k = 0; k < m; ++k)
        if (basis[k] >= n) reduced -= t[k][j];
      if (reduced < Rational(0)) enter = j;
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t k = 0; k < m; ++k) {
      if (t[k][enter] <= Rational(0)) continue;
      const Rational ratio = t[k][cols - 1] / t[k][enter];
      if (leave == m || ratio < best || (ratio == best && basis[k] < basis[leave])) {
        leave = k;
        best = ratio;
      }
    }
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == leave || t[k][enter] == Rational(0)) continue;
      const Rational f = t[k][enter];
      for (std::size_t j = 0; j < cols; ++j) t[k][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  for (std::size_t k = 0; k < m; ++k)
    if (basis[k] >= n && t[k][cols - 1] != Rational(0)) return false;
  return true;
}

/// Vertex indices of a point set whose affine span has the dimension of the coordinates.
std::vector<std::size_t> hull_vertices(const std::vector<Vec>& pts, int d, std::vector<std::size_t>* ccw)
{
  if (d == 0) return {0};
  if (d == 1) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) { return a[0] < b[0]; });
    return {static_cast<std::size_t>(lo - pts.begin()), static_cast<std::size_t>(hi - pts.begin())};
  }
  if (d == 2) {
    auto h = monotone_chain(pts);
    if (ccw) *ccw = h;
    return h;
  }
  if (d > 3) {
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              idx.end());
    std::vector<std::size_t> verts;
    for (std::size_t i : idx) {
      std::vector<Vec> others;
      for (std::size_t k : idx)
        if (k != i) others.push_back(pts[k]);
      if (!in_hull_lp(others, pts[i])) verts.push_back(i);
    }
    return verts;
  }
  std::set<std::size_t> verts;
  for (const Plane& f : facets3(pts)) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(f.normal, pts[i]) == f.offset) on.push_back(i);
    std::vector<Vec> face;
    for (std::size_t i : on) face.push_back(pts[i]);
    const Span s = affine_span(face);
    std::vector<Vec> proj;
    for (const Vec& p : face) proj.push_back(project(s, p));
    for (std::size_t k : monotone_chain(proj)) verts.insert(on[k]);
  }
  return {verts.begin(), verts.end()};
}

using Poly2 = std::vector<Vec>;

Rational shoelace(const Poly2& poly)
{
  Rational s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec& a = poly[i];
    const Vec& b = poly[(i + 1) % poly.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  if (s < Rational(0)) s = -s;
  return s / 2;
}

/// Sutherland-Hodgman clip of `subject` by the counterclockwise convex polygon `clip`.
Poly2 clip_polygon(Poly2 subject, const Poly2& clip)
{
  for (std::size_t e = 0; e < clip.size() && !subject.empty(); ++e) {
    const Vec& a = clip[e];
    const Vec& b = clip[(e + 1) % clip.size()];
    Poly2 out;
    for (std::size_t i = 0; i < subject.size(); ++i) {
      const Vec& p = subject[i];
      const Vec& q = subject[(i + 1) % subject.size()];
      const Rational sp = cross2(a, b, p);
      const Rational sq = cross2(a, b, q);
      if (sp >= Rational(0)) out.push_back(p);
      if ((sp > Rational(0) && sq < Rational(0)) || (sp < Rational(0) && sq > Rational(0))) {
        const Rational t = sp / (sp - sq);
        out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
      }
    }
    subject = std::move(out);
  }
  return subject;
}

void require_plane(const LatticePolytope& p)
{
  if (p.ambient_rank() != 2) throw InvalidInput("operation requires rank 2");
}

} // namespace

LatticePolytope convex_hull(const std::vector<RationalPoint>& points)
{
  if (points.empty()) throw InvalidInput("convex hull of an empty set");
  const std::size_t r = points.front().size();
  for (const Vec& p : points)
    if (p.size() != r) throw InvalidInput("points have different ranks");
  const Span s = affine_span(points);
  const int d = static_cast<int>(s.pivots.size());
  std::vector<Vec> proj;
  for (const Vec& p : points) proj.push_back(project(s, p));
  std::vector<std::size_t> ccw;
  const auto idx = hull_vertices(proj, d, &ccw);

  LatticePolytope out;
  out.rank_ = static_cast<int>(r);
  out.dim_ = d;
  for (std::size_t i : idx) out.vertices_.push_back(points[i]);
  std::sort(out.vertices_.begin(), out.vertices_.end());
  out.vertices_.erase(std::unique(out.vertices_.begin(), out.vertices_.end()), out.vertices_.end());
  if (d == 2 && r == 2)
    for (std::size_t i : ccw) out.boundary_.push_back(points[i]);
  return out;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q)
{
  if (p.ambient_rank() != q.ambient_rank()) throw InvalidInput("Minkowski sum of polytopes of different rank");
  std::vector<RationalPoint> sums;
  for (const Vec& a : p.vertices())
    for (const Vec& b : q.vertices()) {
      Vec c = a;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
      sums.push_back(std::move(c));
    }
  return convex_hull(sums);
}

bool contains(const LatticePolytope& p, const RationalPoint& x)
{
  if (static_cast<int>(x.size()) != p.ambient_rank()) throw InvalidInput("point has wrong rank");
  const auto& verts = p.vertices();
  const Span s = affine_span(verts);
  if (!in_span(s, x)) return false;
  const Vec y = project(s, x);
  std::vector<Vec> proj;
  for (const Vec& v : verts) proj.push_back(project(s, v));
  switch (p.dim()) {
  case 0:
    return true;
  case 1: {
    auto [lo, hi] = std::minmax_element(proj.begin(), proj.end(), [](const Vec& a, const Vec& b) { return a[0] < b[0]; });
    return (*lo)[0] <= y[0] && y[0] <= (*hi)[0];
  }
  case 2: {
    const auto ring = monotone_chain(proj);
    for (std::size_t i = 0; i < ring.size(); ++i)
      if (cross2(proj[ring[i]], proj[ring[(i + 1) % ring.size()]], y) < Rational(0)) return false;
    return true;
  }
  case 3:
    for (const Plane& f : facets3(proj))
      if (dot(f.normal, y) > f.offset) return false;
    return true;
  default:
    return in_hull_lp(proj, y);
  }
}

Rational area(const LatticePolytope& p)
{
  require_plane(p);
  return p.dim() == 2 ? shoelace(p.boundary()) : Rational(0);
}

bool union_equals(const std::vector<LatticePolytope>& parts, const LatticePolytope& whole)
{
  require_plane(whole);
  if (parts.empty()) return false;
  if (parts.size() > 3) throw InvalidInput("union check supports at most three parts");
  for (const auto& part : parts) {
    require_plane(part);
    for (const Vec& v : part.vertices())
      if (!contains(whole, v)) return false;
  }
  if (whole.dim() == 2) {
    Rational covered = 0;
    const std::size_t n = parts.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Poly2 region;
      bool first = true, flat = false;
      for (std::size_t i = 0; i < n && !flat; ++i) {
        if (!(mask & (1u << i))) continue;
        if (parts[i].dim() < 2) {
          flat = true;
          break;
        }
        region = first ? parts[i].boundary() : clip_polygon(region, parts[i].boundary());
        first = false;
      }
      if (flat || region.size() < 3) continue;
      const Rational a = shoelace(region);
      covered += (__builtin_popcount(mask) % 2 == 1) ? a : -a;
    }
    return covered == area(whole);
  }
  // Lower-dimensional whole: cover its vertices and, along a segment, its length.
  if (whole.dim() == 0) return true;
  const Span s = affine_span(whole.vertices());
  std::vector<std::pair<Rational, Rational>> intervals;
  for (const auto& part : parts) {
    Rational lo = project(s, part.vertices().front())[0], hi = lo;
    for (const Vec& v : part.vertices()) {
      const Rational t = project(s, v)[0];
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    intervals.push_back({lo, hi});
  }
  std::sort(intervals.begin(), intervals.end());
  Rational reach = project(s, whole.vertices().front())[0];
  Rational end = project(s, whole.vertices().back())[0];
  if (end < reach) std::swap(end, reach);
  for (const auto& [lo, hi] : intervals) {
    if (lo > reach) return false;
    reach = std::max(reach, hi);
  }
  return reach >= end;
}

LatticePolytope scale(const LatticePolytope& p, long long factor)
{
  std::vector<RationalPoint> pts = p.vertices();
  for (auto& v : pts)
    for (auto& x : v) x *= factor;
  return convex_hull(pts);
}

std::map<std::string, LatticePolytope> primitive_a2()
{
  auto pt = [](long long a, long long b) { return RationalPoint{Rational(a), Rational(b)}; };
  return {
      {"alpha1", convex_hull({pt(0, 0), pt(1, 0)})},
      {"alpha2", convex_hull({pt(0, 0), pt(0, 1)})},
      {"beta1", convex_hull({pt(0, 0), pt(1, 0), pt(1, 1)})},
      {"beta2", convex_hull({pt(0, 0), pt(0, 1), pt(1, 1)})},
  };
}

} // namespace alcove
