#include "alcove/root_data.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace alcove {

namespace {

// Gauss-Jordan over Q; returns the determinant and fills the inverse.
Rational invert(const IntMatrix& m, std::vector<std::vector<Rational>>& inverse)
{
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a[row][col] != 0) { pivot = row; break; }
    if (pivot < 0) return 0;
    if (pivot != col) { std::swap(a[pivot], a[col]); det = -det; }
    det *= a[col][col];
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (int k = 0; k < 2 * n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  inverse.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inverse[i][j] = a[i][n + j];
  return det;
}

long long leading_minor(const IntMatrix& m, int k)
{
  IntMatrix sub(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub[i][j] = m[i][j];
  std::vector<std::vector<Rational>> unused;
  const Rational d = invert(sub, unused);
  return d.numerator() / d.denominator();
}

} // namespace

RootSystem::RootSystem(IntMatrix cartan) : rank_(static_cast<int>(cartan.size())), cartan_(std::move(cartan))
{
  if (rank_ < 1) throw InvalidInput("Cartan matrix must be non-empty");
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(cartan_[i].size()) != rank_) throw InvalidInput("Cartan matrix must be square");
    for (int j = 0; j < rank_; ++j) {
      const int a = cartan_[i][j];
      if (i == j && a != 2) throw InvalidInput("Cartan matrix must have 2 on the diagonal");
      if (i != j && a != 0 && a != -1)
        throw InvalidInput("only simply-laced Cartan matrices (off-diagonal 0 or -1) are supported");
      if (a != cartan_[j][i]) throw InvalidInput("Cartan matrix must be symmetric");
    }
  }
  for (int k = 1; k <= rank_; ++k)
    if (leading_minor(cartan_, k) <= 0) throw InvalidInput("Cartan matrix is not of finite type");

  const Rational det = invert(cartan_, inverse_);
  det_ = det.numerator();

  // Positive roots by increasing height; beta + alpha_i is a root iff the
  // alpha_i-string through beta extends upward (q = p - <beta, alpha_i^vee> > 0).
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    positive_.push_back(e);
    known.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < rank_; ++i) {
        int p = 0;
        for (auto down = beta;;) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < rank_; ++j) pair += beta[j] * cartan_[j][i];
        if (p - pair <= 0) continue;
        auto up = beta;
        up[i] += 1;
        if (known.insert(up).second) {
          positive_.push_back(up);
          next.push_back(up);
        }
      }
    }
    if (positive_.size() > 4096) throw InvalidInput("root system too large");
    frontier = std::move(next);
  }

  for (int r = 0; r < num_positive_roots(); ++r) lookup_[positive_[r]] = r;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    simple_index_.push_back(lookup_.at(e));
  }
  pairing_rows_.resize(positive_.size());
  for (int r = 0; r < num_positive_roots(); ++r) {
    auto& row = pairing_rows_[r];
    row.assign(rank_, 0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) row[i] += positive_[r][j] * cartan_[j][i];
  }
  highest_ = 0;
  for (int r = 1; r < num_positive_roots(); ++r)
    if (root_height(r) > root_height(highest_)) highest_ = r;
}

RootSystem RootSystem::type_a(int rank)
{
  if (rank < 1) throw InvalidInput("type A rank must be positive");
  IntMatrix c(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    c[i][i] = 2;
    if (i + 1 < rank) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return RootSystem(std::move(c));
}

int RootSystem::find_root(const std::vector<int>& coords) const
{
  auto it = lookup_.find(coords);
  return it == lookup_.end() ? -1 : it->second;
}

int RootSystem::root_height(int root) const
{
  const auto& r = positive_.at(root);
  return std::accumulate(r.begin(), r.end(), 0);
}

Rational RootSystem::pairing(int root, const RationalPoint& x) const
{
  if (root < 0 || root >= num_positive_roots()) throw InvalidInput("root index out of range");
  if (static_cast<int>(x.size()) != rank_) throw InvalidInput("point has wrong rank");
  const auto& row = pairing_rows_[root];
  Rational s = 0;
  for (int i = 0; i < rank_; ++i)
    if (row[i] != 0) s += x[i] * row[i];
  return s;
}

long long RootSystem::pairing(int root, const std::vector<long long>& c) const
{
  if (root < 0 || root >= num_positive_roots()) throw InvalidInput("root index out of range");
  if (static_cast<int>(c.size()) != rank_) throw InvalidInput("vector has wrong rank");
  const auto& row = pairing_rows_[root];
  long long s = 0;
  for (int i = 0; i < rank_; ++i) s += c[i] * row[i];
  return s;
}

RationalPoint RootSystem::to_coroot(const LatticeVector& v) const
{
  if (static_cast<int>(v.coords.size()) != rank_) throw InvalidInput("vector has wrong rank");
  if (v.basis == Basis::coroot) return to_rational(v.coords);
  return from_coweight_coords(to_rational(v.coords));
}

std::vector<long long> RootSystem::to_coweight(const LatticeVector& v) const
{
  if (static_cast<int>(v.coords.size()) != rank_) throw InvalidInput("vector has wrong rank");
  if (v.basis == Basis::coweight) return v.coords;
  std::vector<long long> y(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) y[i] += static_cast<long long>(cartan_[i][k]) * v.coords[k];
  return y;
}

RationalPoint RootSystem::coweight_coords(const RationalPoint& x) const
{
  RationalPoint y(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k)
      if (cartan_[i][k] != 0) y[i] += x[k] * cartan_[i][k];
  return y;
}

RationalPoint RootSystem::from_coweight_coords(const RationalPoint& y) const
{
  RationalPoint x(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) x[i] += inverse_[i][k] * y[k];
  return x;
}

long long height(const RootSystem& rs, const LatticeVector& v)
{
  long long h = 0;
  for (const Rational& c : rs.to_coroot(v)) {
    if (c < 0 || c.denominator() != 1)
      throw InvalidInput("height is defined for non-negative integer combinations of simple coroots");
    h += c.numerator();
  }
  return h;
}

bool is_dominant(const RootSystem& rs, const LatticeVector& v)
{
  const auto y = rs.to_coweight(v);
  return std::all_of(y.begin(), y.end(), [](long long c) { return c >= 0; });
}

long long schubert_cell_dim(const LatticeVector& mu, const RootSystem& rs)
{
  if (!is_dominant(rs, mu)) throw InvalidInput("schubert_cell_dim requires a dominant coweight");
  const auto y = rs.to_coweight(mu);
  long long total = 0;
  for (const auto& root : rs.positive_roots())
    for (int j = 0; j < rs.rank(); ++j) total += root[j] * y[j];
  return total;
}

bool dominance_leq(const LatticeVector& lhs, const LatticeVector& rhs, const RootSystem& rs)
{
  const auto a = rs.to_coweight(lhs);
  const auto b = rs.to_coweight(rhs);
  RationalPoint diff(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) diff[i] = Rational(b[i] - a[i]);
  for (const Rational& c : rs.from_coweight_coords(diff))
    if (c < 0 || c.denominator() != 1) return false;
  return true;
}

long long weyl_dim(const LatticeVector& lambda, const RootSystem& rs)
{
  if (!is_dominant(rs, lambda)) throw InvalidInput("weyl_dim requires a dominant coweight");
  const auto y = rs.to_coweight(lambda);
  Rational dim = 1;
  for (const auto& root : rs.positive_roots()) {
    long long num = 0;
    long long den = 0;
    for (int j = 0; j < rs.rank(); ++j) {
      num += root[j] * (y[j] + 1);
      den += root[j];
    }
    dim *= Rational(num, den);
  }
  return dim.numerator();
}

namespace {

// Dominant representative of a weight given in coweight coordinates.
std::vector<long long> dominant_rep(const RootSystem& rs, std::vector<long long> y)
{
  const auto& a = rs.cartan();
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (y[i] >= 0) continue;
      const long long c = y[i];
      for (int k = 0; k < rs.rank(); ++k) y[k] -= c * a[i][k];
      changed = true;
    }
  }
  return y;
}

// Weyl-invariant form on coweight coordinates: (x, y) = x^T A^{-1} y.
Rational form(const RootSystem& rs, const std::vector<long long>& x, const std::vector<long long>& y)
{
  const auto& inv = rs.inverse_cartan();
  Rational s = 0;
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) s += inv[i][j] * (x[i] * y[j]);
  return s;
}

// Multiplicities of the dominant weights of V_lambda, keyed by coweight coordinates.
std::map<std::vector<long long>, long long> dominant_multiplicities(const RootSystem& rs,
                                                                   const std::vector<long long>& lam)
{
  const int r = rs.rank();
  const auto lam_coroot = rs.from_coweight_coords(to_rational(lam));
  std::vector<long long> bound(r);
  for (int i = 0; i < r; ++i) bound[i] = floor(lam_coroot[i]);

  // Dominant mu = lambda - sum k_i alpha_i^vee, ordered by depth sum(k).
  std::vector<std::pair<long long, std::vector<long long>>> candidates;
  std::vector<long long> k(r, 0);
  const auto& a = rs.cartan();
  while (true) {
    std::vector<long long> mu = lam;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) mu[j] -= k[i] * a[i][j];
    if (std::all_of(mu.begin(), mu.end(), [](long long c) { return c >= 0; }))
      candidates.emplace_back(std::accumulate(k.begin(), k.end(), 0LL), mu);
    int pos = 0;
    while (pos < r && k[pos] == bound[pos]) k[pos++] = 0;
    if (pos == r) break;
    ++k[pos];
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<long long> rho(r, 1);
  std::vector<long long> lam_rho(r);
  for (int i = 0; i < r; ++i) lam_rho[i] = lam[i] + 1;
  const Rational top = form(rs, lam_rho, lam_rho);

  std::map<std::vector<long long>, long long> mult;
  for (const auto& [depth, mu] : candidates) {
    if (depth == 0) {
      mult[mu] = 1;
      continue;
    }
    Rational sum = 0;
    for (int root = 0; root < rs.num_positive_roots(); ++root) {
      const auto& coeffs = rs.positive_roots()[root];
      std::vector<long long> shift(r, 0); // alpha^vee in coweight coordinates
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) shift[j] += coeffs[i] * a[i][j];
      const long long root_height = rs.root_height(root);
      auto nu = mu;
      for (long long step = 1; depth - step * root_height >= 0; ++step) {
        for (int j = 0; j < r; ++j) nu[j] += shift[j];
        const auto rep = dominant_rep(rs, nu);
        auto it = mult.find(rep);
        if (it == mult.end() || it->second == 0) continue;
        long long pair = 0; // <alpha, nu>
        for (int j = 0; j < r; ++j) pair += coeffs[j] * nu[j];
        sum += Rational(2 * it->second * pair);
      }
    }
    std::vector<long long> mu_rho(r);
    for (int i = 0; i < r; ++i) mu_rho[i] = mu[i] + rho[i];
    const Rational denom = top - form(rs, mu_rho, mu_rho);
    const Rational m = sum / denom;
    if (m.denominator() != 1) throw std::logic_error("Freudenthal recursion produced a non-integer");
    mult[mu] = m.numerator();
  }
  return mult;
}

} // namespace

long long freudenthal_multiplicity(const LatticeVector& lambda, const LatticeVector& nu, const RootSystem& rs)
{
  if (!is_dominant(rs, lambda)) throw InvalidInput("freudenthal_multiplicity requires a dominant highest weight");
  const auto lam = rs.to_coweight(lambda);
  const auto rep = dominant_rep(rs, rs.to_coweight(nu));
  if (!dominance_leq(LatticeVector::coweight(rep), lambda, rs)) return 0;
  const auto table = dominant_multiplicities(rs, lam);
  auto it = table.find(rep);
  return it == table.end() ? 0 : it->second;
}

std::map<std::vector<long long>, long long> weight_multiplicities(const LatticeVector& lambda,
                                                                  const RootSystem& rs)
{
  if (!is_dominant(rs, lambda)) throw InvalidInput("weight_multiplicities requires a dominant highest weight");
  const auto table = dominant_multiplicities(rs, rs.to_coweight(lambda));
  std::map<std::vector<long long>, long long> out;
  const auto& a = rs.cartan();
  for (const auto& [dom, m] : table) {
    if (m == 0) continue;
    // Orbit of a dominant weight by breadth-first search over simple reflections.
    std::vector<std::vector<long long>> queue{dom};
    out[dom] = m;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int i = 0; i < rs.rank(); ++i) {
        auto y = queue[head];
        const long long c = y[i];
        if (c == 0) continue;
        for (int k = 0; k < rs.rank(); ++k) y[k] -= c * a[i][k];
        if (out.emplace(y, m).second) queue.push_back(y);
      }
    }
  }
  return out;
}

std::vector<LatticeVector> dominant_box(const RootSystem& rs, int max_coord)
{
  std::vector<LatticeVector> out;
  std::vector<long long> c(rs.rank(), 0);
  while (true) {
    out.push_back(LatticeVector::coweight(c));
    int pos = 0;
    while (pos < rs.rank() && c[pos] == max_coord) c[pos++] = 0;
    if (pos == rs.rank()) break;
    ++c[pos];
  }
  return out;
}

} // namespace alcove
