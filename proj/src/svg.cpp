#include "alcove/svg.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace alcove {

namespace {

struct Xy {
  double x, y;
};

/// Embeds coroot coordinates isometrically for the Cartan form.
Xy embed(const RootSystem& rs, const RationalPoint& p)
{
  const double a = boost::rational_cast<double>(p[0]);
  const double b = boost::rational_cast<double>(p[1]);
  const double g11 = rs.cartan()[0][0], g12 = rs.cartan()[0][1], g22 = rs.cartan()[1][1];
  // alpha_1^vee -> (sqrt(g11), 0); alpha_2^vee -> (g12/sqrt(g11), sqrt(g22 - g12^2/g11)).
  const double e1 = std::sqrt(g11);
  const double ux = g12 / e1, uy = std::sqrt(g22 - g12 * g12 / g11);
  return {a * e1 + b * ux, b * uy};
}

class Canvas {
public:
  Canvas(double min_x, double min_y, double max_x, double max_y) : min_x_(min_x), max_y_(max_y)
  {
    const double w = (max_x - min_x) * scale_ + 2 * margin_;
    const double h = (max_y - min_y) * scale_ + 2 * margin_;
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
         << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  }

  double sx(double x) const { return margin_ + (x - min_x_) * scale_; }
  double sy(double y) const { return margin_ + (max_y_ - y) * scale_; }

  void polygon(const std::vector<Xy>& pts, const std::string& style)
  {
    out_ << "  <polygon points=\"";
    for (const Xy& p : pts) out_ << sx(p.x) << "," << sy(p.y) << " ";
    out_ << "\" style=\"" << style << "\"/>\n";
  }

  void line(Xy a, Xy b, const std::string& style)
  {
    out_ << "  <line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x) << "\" y2=\"" << sy(b.y)
         << "\" style=\"" << style << "\"/>\n";
  }

  void dot(Xy p, const std::string& fill) { out_ << "  <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"3\" fill=\"" << fill << "\"/>\n"; }

  std::string finish()
  {
    out_ << "</svg>\n";
    return out_.str();
  }

private:
  double min_x_, max_y_;
  double scale_ = 60;
  double margin_ = 20;
  std::ostringstream out_;
};

void require_rank2(const RootSystem& rs)
{
  if (rs.rank() != 2) throw InvalidInput("pictures are drawn for rank 2 only");
}

} // namespace

std::string polytopes_svg(const RootSystem& rs, const std::vector<LatticePolytope>& polys)
{
  require_rank2(rs);
  std::vector<Xy> all{{0, 0}};
  for (const auto& p : polys)
    for (const auto& v : p.vertices()) all.push_back(embed(rs, v));
  auto [lx, hx] = std::minmax_element(all.begin(), all.end(), [](Xy a, Xy b) { return a.x < b.x; });
  auto [ly, hy] = std::minmax_element(all.begin(), all.end(), [](Xy a, Xy b) { return a.y < b.y; });
  Canvas c(lx->x - 0.5, ly->y - 0.5, hx->x + 0.5, hy->y + 0.5);
  static const char* colors[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948"};
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const auto& p = polys[k];
    if (p.ambient_rank() != 2) throw InvalidInput("pictures are drawn for rank 2 only");
    const std::string color = colors[k % 6];
    std::vector<Xy> pts;
    for (const auto& v : p.dim() == 2 ? p.boundary() : p.vertices()) pts.push_back(embed(rs, v));
    if (pts.size() >= 3) c.polygon(pts, "fill:" + color + ";fill-opacity:0.3;stroke:" + color + ";stroke-width:2");
    else if (pts.size() == 2) c.line(pts[0], pts[1], "stroke:" + color + ";stroke-width:3");
    for (const Xy& v : pts) c.dot(v, color);
  }
  c.dot({0, 0}, "black");
  return c.finish();
}

std::string gallery_svg(const AffineComplex& ac, const Gallery& g)
{
  const RootSystem& rs = ac.roots();
  require_rank2(rs);
  std::vector<Xy> all;
  for (const Face& a : g.alcoves)
    for (const auto& v : ac.vertices(a)) all.push_back(embed(rs, v));
  auto [lx, hx] = std::minmax_element(all.begin(), all.end(), [](Xy a, Xy b) { return a.x < b.x; });
  auto [ly, hy] = std::minmax_element(all.begin(), all.end(), [](Xy a, Xy b) { return a.y < b.y; });
  const double x0 = lx->x - 1, x1 = hx->x + 1, y0 = ly->y - 1, y1 = hy->y + 1;
  Canvas c(x0, y0, x1, y1);

  // Hyperplanes <alpha, x> = n crossing the window, clipped to its box.
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    // <alpha, x> is linear in the embedded plane: find its gradient from two probe points.
    const Xy o = embed(rs, {Rational(0), Rational(0)});
    const Xy e1 = embed(rs, {Rational(1), Rational(0)});
    const Xy e2 = embed(rs, {Rational(0), Rational(1)});
    const double p1 = rs.pairing_row(a)[0], p2 = rs.pairing_row(a)[1];
    const double det = (e1.x - o.x) * (e2.y - o.y) - (e2.x - o.x) * (e1.y - o.y);
    const double gx = (p1 * (e2.y - o.y) - p2 * (e1.y - o.y)) / det;
    const double gy = (p2 * (e1.x - o.x) - p1 * (e2.x - o.x)) / det;
    double lo = 1e300, hi = -1e300;
    for (Xy corner : {Xy{x0, y0}, Xy{x0, y1}, Xy{x1, y0}, Xy{x1, y1}}) {
      const double v = gx * corner.x + gy * corner.y;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    for (long long n = static_cast<long long>(std::ceil(lo)); n <= static_cast<long long>(std::floor(hi)); ++n) {
      std::vector<Xy> hits;
      auto edge = [&](Xy p, Xy q) {
        const double vp = gx * p.x + gy * p.y - n, vq = gx * q.x + gy * q.y - n;
        if ((vp <= 0 && vq >= 0) || (vp >= 0 && vq <= 0)) {
          const double t = vp == vq ? 0 : vp / (vp - vq);
          hits.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
      };
      edge({x0, y0}, {x1, y0});
      edge({x1, y0}, {x1, y1});
      edge({x1, y1}, {x0, y1});
      edge({x0, y1}, {x0, y0});
      if (hits.size() >= 2) c.line(hits.front(), hits.back(), "stroke:#999;stroke-dasharray:4,3;stroke-width:1");
    }
  }
  for (const Face& a : g.alcoves) {
    std::vector<Xy> pts;
    for (const auto& v : ac.vertices(a)) pts.push_back(embed(rs, v));
    // Order the triangle counterclockwise around its centroid.
    Xy m{0, 0};
    for (Xy p : pts) m.x += p.x / pts.size(), m.y += p.y / pts.size();
    std::sort(pts.begin(), pts.end(), [m](Xy p, Xy q) { return std::atan2(p.y - m.y, p.x - m.x) < std::atan2(q.y - m.y, q.x - m.x); });
    c.polygon(pts, "fill:#4e79a7;fill-opacity:0.25;stroke:#4e79a7;stroke-width:1");
  }
  std::vector<Xy> path;
  for (std::size_t j = 0; j < g.alcoves.size(); ++j) {
    path.push_back(embed(rs, g.smalls[j].witness()));
    path.push_back(embed(rs, g.alcoves[j].witness()));
  }
  path.push_back(embed(rs, g.smalls.back().witness()));
  for (std::size_t k = 0; k + 1 < path.size(); ++k) c.line(path[k], path[k + 1], "stroke:#e15759;stroke-width:2");
  c.dot(path.front(), "black");
  c.dot(path.back(), "#e15759");
  return c.finish();
}

} // namespace alcove
