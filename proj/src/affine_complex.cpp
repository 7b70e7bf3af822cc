#include "alcove/affine_complex.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <functional>

namespace alcove {

std::size_t FaceHash::operator()(const Face& f) const noexcept
{
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (long long c : f.code()) h ^= std::hash<long long>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

namespace {

int matrix_rank(std::vector<std::vector<Rational>> rows)
{
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [c](const auto& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

} // namespace

AffineComplex::AffineComplex(RootSystem rs) : rs_(std::move(rs)), weyl_(rs_)
{
  const int r = rs_.rank();
  fund_vertices_.push_back(RationalPoint(r, Rational(0)));
  const auto& c = rs_.highest_root_coefficients();
  for (int i = 0; i < r; ++i) {
    RationalPoint y(r, Rational(0));
    y[i] = Rational(1, c[i]);
    fund_vertices_.push_back(rs_.from_coweight_coords(y));
  }
  RationalPoint bary(r, Rational(0));
  for (const auto& v : fund_vertices_)
    for (int i = 0; i < r; ++i) bary[i] += v[i];
  for (auto& x : bary) x /= static_cast<long long>(fund_vertices_.size());
  fundamental_ = face_at(bary);
  origin_ = face_at(fund_vertices_.front());

  // w(rho^vee) meets every open Weyl chamber exactly once.
  RationalPoint rho = rs_.from_coweight_coords(RationalPoint(r, Rational(1)));
  for (std::size_t w = 0; w < weyl_.order(); ++w) regular_directions_.push_back(weyl_.apply(static_cast<int>(w), rho));
}

RationalPoint AffineComplex::affine_reflection(const AffineRoot& beta, const RationalPoint& x) const
{
  const Rational shift = rs_.pairing(beta.root, x) - Rational(beta.level);
  RationalPoint y = x;
  const auto& coroot = rs_.positive_roots()[beta.root];
  for (int i = 0; i < rank(); ++i)
    if (coroot[i] != 0) y[i] -= shift * coroot[i];
  return y;
}

std::vector<long long> AffineComplex::code_of(const RationalPoint& x) const
{
  std::vector<long long> code(rs_.num_positive_roots());
  for (int a = 0; a < rs_.num_positive_roots(); ++a) {
    const Rational v = rs_.pairing(a, x);
    code[a] = v.denominator() == 1 ? 2 * v.numerator() : 2 * floor(v) + 1;
  }
  return code;
}

int AffineComplex::dim_of(const std::vector<long long>& code) const
{
  std::vector<std::vector<Rational>> rows;
  for (int a = 0; a < rs_.num_positive_roots(); ++a) {
    if (code[a] & 1) continue;
    const auto& row = rs_.pairing_row(a);
    rows.emplace_back(row.begin(), row.end());
  }
  return rank() - matrix_rank(std::move(rows));
}

Face AffineComplex::face_at(const RationalPoint& barycenter) const
{
  Face f;
  f.code_ = code_of(barycenter);
  f.witness_ = barycenter;
  f.dim_ = dim_of(f.code_);
  return f;
}

std::vector<AffineRoot> AffineComplex::folding_word(RationalPoint& x) const
{
  std::vector<AffineRoot> word;
  const int theta = rs_.highest_root();
  while (true) {
    bool moved = false;
    for (int i = 0; i < rank(); ++i) {
      const int a = rs_.simple_root(i);
      if (rs_.pairing(a, x) < 0) {
        AffineRoot s{a, 0};
        x = affine_reflection(s, x);
        word.push_back(s);
        moved = true;
        break;
      }
    }
    if (moved) continue;
    if (rs_.pairing(theta, x) > 1) {
      AffineRoot s{theta, 1};
      x = affine_reflection(s, x);
      word.push_back(s);
      continue;
    }
    return word;
  }
}

RationalPoint AffineComplex::unfold(const std::vector<AffineRoot>& word, RationalPoint x) const
{
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = affine_reflection(*it, x);
  return x;
}

Face AffineComplex::carrier_face(const RationalPoint& x) const
{
  if (static_cast<int>(x.size()) != rank()) throw InvalidInput("point has wrong rank");
  RationalPoint folded = x;
  const auto word = folding_word(folded);
  const auto code = code_of(folded);
  // Barycenter of the face of the closed fundamental alcove containing the folded point.
  RationalPoint bary(rank(), Rational(0));
  long long count = 0;
  for (const auto& v : fund_vertices_) {
    bool inside = true;
    for (int a = 0; a < rs_.num_positive_roots() && inside; ++a) {
      const Rational val = rs_.pairing(a, v);
      const long long n = code[a] >> 1;
      inside = (code[a] & 1) ? (val >= n && val <= n + 1) : (val == n);
    }
    if (!inside) continue;
    for (int i = 0; i < rank(); ++i) bary[i] += v[i];
    ++count;
  }
  for (auto& b : bary) b /= count;
  return face_at(unfold(word, bary));
}

FaceType AffineComplex::face_type(const Face& f) const
{
  RationalPoint x = f.witness();
  folding_word(x);
  return FaceType{face_at(x)};
}

std::vector<Face> AffineComplex::alcoves_containing(const Face& f) const
{
  const RationalPoint& x = f.witness();
  std::vector<Face> out;
  for (const auto& d : regular_directions_) {
    // Step along d small enough to stay off every hyperplane not containing f.
    Rational eps = 1;
    for (int a = 0; a < rs_.num_positive_roots(); ++a) {
      const Rational slope = rs_.pairing(a, d);
      const Rational abs_slope = slope < 0 ? -slope : slope;
      Rational room = 1;
      if (!f.is_on(a)) {
        const Rational v = rs_.pairing(a, x) - Rational(f.level(a));
        room = std::min(v, 1 - v);
      }
      eps = std::min(eps, room / (abs_slope + 1));
    }
    eps /= 2;
    RationalPoint y = x;
    for (int i = 0; i < rank(); ++i) y[i] += eps * d[i];
    Face alcove = carrier_face(y);
    if (std::find(out.begin(), out.end(), alcove) == out.end()) out.push_back(std::move(alcove));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Face AffineComplex::face_of_type_in_alcove(const Face& alcove, const FaceType& t) const
{
  if (alcove.dim() != rank()) throw InvalidInput("face_of_type_in_alcove expects an alcove");
  RationalPoint x = alcove.witness();
  const auto word = folding_word(x);
  return face_at(unfold(word, t.face.witness()));
}

Face AffineComplex::translate_face(const Face& f, const LatticeVector& v) const
{
  const RationalPoint shift = rs_.to_coroot(v);
  RationalPoint y = f.witness();
  for (int i = 0; i < rank(); ++i) y[i] += shift[i];
  return face_at(y);
}

Face AffineComplex::reflect_face(const Face& f, const AffineRoot& beta) const
{
  return face_at(affine_reflection(beta, f.witness()));
}

bool AffineComplex::in_closure(const Face& small, const Face& big) const
{
  for (int a = 0; a < rs_.num_positive_roots(); ++a) {
    const long long n = big.level(a);
    if (big.is_on(a)) {
      if (small.code()[a] != big.code()[a]) return false;
    } else {
      const long long c = small.code()[a];
      if (c != 2 * n && c != 2 * n + 1 && c != 2 * (n + 1)) return false;
    }
  }
  return true;
}

std::vector<AffineRoot> AffineComplex::walls(const Face& f) const
{
  std::vector<AffineRoot> out;
  for (int a = 0; a < rs_.num_positive_roots(); ++a)
    if (f.is_on(a)) out.push_back({a, f.level(a)});
  return out;
}

std::vector<RationalPoint> AffineComplex::vertices(const Face& f) const
{
  RationalPoint x = f.witness();
  const auto word = folding_word(x);
  const Face folded = face_at(x);
  std::vector<RationalPoint> out;
  for (const auto& v : fund_vertices_) {
    const Face vf = face_at(v);
    if (in_closure(vf, folded)) out.push_back(unfold(word, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long AffineComplex::alcove_distance(const Face& alcove) const
{
  long long d = 0;
  for (int a = 0; a < rs_.num_positive_roots(); ++a) {
    const long long k = alcove.level(a);
    d += k < 0 ? -k : k;
  }
  return d;
}

std::optional<LatticeVector> AffineComplex::lattice_point(const Face& f) const
{
  if (f.dim() != 0) return std::nullopt;
  const RationalPoint y = rs_.coweight_coords(f.witness());
  std::vector<long long> coords;
  for (const Rational& c : y) {
    if (c.denominator() != 1) return std::nullopt;
    coords.push_back(c.numerator());
  }
  return LatticeVector::coweight(std::move(coords));
}

Face AffineComplex::make_face(const std::vector<long long>& code, const RationalPoint& witness) const
{
  if (static_cast<int>(witness.size()) != rank() || static_cast<int>(code.size()) != rs_.num_positive_roots())
    throw InvalidInput("face has wrong rank");
  Face f = carrier_face(witness);
  if (f.code() != code) throw InvalidInput("sign vector does not match the face's point");
  return f;
}

} // namespace alcove
