#include "alcove/quiver.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace alcove {

namespace {

RationalMatrix zeros(int rows, int cols) { return RationalMatrix(rows, std::vector<Rational>(cols, Rational(0))); }

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b, int inner, int cols)
{
  RationalMatrix c = zeros(static_cast<int>(a.size()), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int k = 0; k < inner; ++k) {
      if (a[i][k] == Rational(0)) continue;
      for (int j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool is_prime(int p)
{
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int half(const Quiver& q) { return static_cast<int>(q.arrows.size()) / 2; }

DimVectorSet coordinate_dim_vectors(const QuiverModule& m, std::size_t budget)
{
  // Global basis numbering: vertex by vertex.
  std::vector<int> offset(m.dims.size() + 1, 0);
  for (std::size_t v = 0; v < m.dims.size(); ++v) offset[v + 1] = offset[v] + m.dims[v];
  const int total = offset.back();
  if (total > 62) throw BudgetExceeded("module too large for coordinate enumeration");
  std::vector<std::vector<int>> image(total);
  for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
    const Arrow& arr = m.quiver.arrows[a];
    for (int col = 0; col < m.dims[arr.source]; ++col)
      for (int row = 0; row < m.dims[arr.target]; ++row)
        if (m.maps[a][row][col] != Rational(0)) image[offset[arr.source] + col].push_back(offset[arr.target] + row);
  }
  std::vector<std::uint64_t> closure(total, 0);
  for (int b = 0; b < total; ++b) {
    std::vector<int> stack{b};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (closure[b] >> x & 1) continue;
      closure[b] |= std::uint64_t{1} << x;
      for (int y : image[x]) stack.push_back(y);
    }
  }
  std::set<std::uint64_t> closed{0};
  std::vector<std::uint64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t s : frontier)
      for (int b = 0; b < total; ++b) {
        if (s >> b & 1) continue;
        const std::uint64_t t = s | closure[b];
        if (closed.insert(t).second) {
          if (closed.size() > budget) throw BudgetExceeded("submodule enumeration exceeded the budget");
          next.push_back(t);
        }
      }
    frontier = std::move(next);
  }
  DimVectorSet out;
  for (std::uint64_t s : closed) {
    std::vector<int> dv(m.dims.size(), 0);
    for (std::size_t v = 0; v < m.dims.size(); ++v)
      for (int i = offset[v]; i < offset[v + 1]; ++i) dv[v] += static_cast<int>(s >> i & 1);
    out.insert(dv);
  }
  return out;
}

} // namespace

Quiver linear_quiver(int n, bool doubled)
{
  if (n < 1) throw InvalidInput("quiver needs at least one vertex");
  Quiver q;
  q.vertex_count = n;
  q.doubled = doubled;
  for (int i = 2; i <= n; ++i) q.arrows.push_back({i - 1, i - 2, "alpha_" + std::to_string(i)});
  if (doubled)
    for (int i = 2; i <= n; ++i) q.arrows.push_back({i - 2, i - 1, "alpha_" + std::to_string(i) + "*"});
  return q;
}

void check_module(const QuiverModule& m)
{
  const Quiver& q = m.quiver;
  if (static_cast<int>(m.dims.size()) != q.vertex_count) throw InvalidInput("dimension vector has wrong length");
  if (m.maps.size() != q.arrows.size()) throw InvalidInput("one matrix per arrow is required");
  for (int d : m.dims)
    if (d < 0) throw InvalidInput("negative dimension");
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& arr = q.arrows[a];
    if (arr.source < 0 || arr.source >= q.vertex_count || arr.target < 0 || arr.target >= q.vertex_count)
      throw InvalidInput("arrow endpoint out of range");
    const RationalMatrix& mat = m.maps[a];
    if (static_cast<int>(mat.size()) != m.dims[arr.target]) throw InvalidInput("matrix has wrong number of rows");
    for (const auto& row : mat)
      if (static_cast<int>(row.size()) != m.dims[arr.source]) throw InvalidInput("matrix has wrong number of columns");
  }
}

QuiverModule zero_module(const Quiver& q)
{
  QuiverModule m;
  m.quiver = q;
  m.dims.assign(q.vertex_count, 0);
  m.maps.assign(q.arrows.size(), {});
  return m;
}

QuiverModule maya_module(int n, const std::vector<int>& a_set)
{
  if (n < 1) throw InvalidInput("Maya module needs n >= 1");
  for (std::size_t k = 0; k < a_set.size(); ++k) {
    if (a_set[k] < 1 || a_set[k] > n) throw InvalidInput("Maya set entry out of range");
    if (k > 0 && a_set[k] <= a_set[k - 1]) throw InvalidInput("Maya set must be strictly increasing");
  }
  const int size = static_cast<int>(a_set.size());
  if (size == n) throw InvalidInput("Maya set must be a proper subset");
  bool initial = true;
  for (int k = 0; k < size; ++k) initial &= a_set[k] == k + 1;
  if (initial) throw InvalidInput("Maya set must not be {1, ..., m}");

  // Basis v_{j,k}, k <= j <= a_k - 1, living at vertex j.
  std::map<std::pair<int, int>, int> position; // (j, k) -> index within vertex j
  QuiverModule m;
  m.quiver = linear_quiver(n);
  m.dims.assign(n, 0);
  std::vector<std::vector<std::string>> labels(n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= size; ++k)
      if (k <= j && j <= a_set[k - 1] - 1) {
        position[{j, k}] = m.dims[j - 1]++;
        labels[j - 1].push_back("v" + std::to_string(j) + std::to_string(k));
      }
  for (const auto& l : labels) m.basis_labels.insert(m.basis_labels.end(), l.begin(), l.end());

  for (const Arrow& arr : m.quiver.arrows) {
    RationalMatrix mat = zeros(m.dims[arr.target], m.dims[arr.source]);
    const int from = arr.source + 1;
    const int to = arr.target + 1;
    for (const auto& [jk, col] : position) {
      if (jk.first != from) continue;
      // alpha_j: v_{j,k} -> v_{j-1,k}; the starred arrow j -> j+1: v_{j,k} -> v_{j+1,k+1}.
      const std::pair<int, int> dest = to < from ? std::pair{to, jk.second} : std::pair{to, jk.second + 1};
      const auto it = position.find(dest);
      if (it != position.end()) mat[it->second][col] = 1;
    }
    m.maps.push_back(std::move(mat));
  }
  return m;
}

RationalMatrix preprojective_relation(const QuiverModule& m, int v)
{
  check_module(m);
  if (!m.quiver.doubled) throw InvalidInput("preprojective relation needs a doubled quiver");
  const int h = half(m.quiver);
  RationalMatrix rel = zeros(m.dims[v], m.dims[v]);
  for (int a = 0; a < h; ++a) {
    const Arrow& arr = m.quiver.arrows[a];
    const RationalMatrix& alpha = m.maps[a];
    const RationalMatrix& star = m.maps[a + h];
    if (arr.target == v) {
      const auto prod = multiply(alpha, star, m.dims[arr.source], m.dims[v]);
      for (int i = 0; i < m.dims[v]; ++i)
        for (int j = 0; j < m.dims[v]; ++j) rel[i][j] += prod[i][j];
    }
    if (arr.source == v) {
      const auto prod = multiply(star, alpha, m.dims[arr.target], m.dims[v]);
      for (int i = 0; i < m.dims[v]; ++i)
        for (int j = 0; j < m.dims[v]; ++j) rel[i][j] -= prod[i][j];
    }
  }
  return rel;
}

bool verify_preprojective(const QuiverModule& m)
{
  for (int v = 0; v < m.quiver.vertex_count; ++v)
    for (const auto& row : preprojective_relation(m, v))
      for (const Rational& x : row)
        if (x != Rational(0)) return false;
  return true;
}

QuiverModule direct_sum(const QuiverModule& a, const QuiverModule& b)
{
  check_module(a);
  check_module(b);
  if (!(a.quiver == b.quiver)) throw InvalidInput("direct sum of modules over different quivers");
  QuiverModule m;
  m.quiver = a.quiver;
  for (std::size_t v = 0; v < a.dims.size(); ++v) m.dims.push_back(a.dims[v] + b.dims[v]);
  for (std::size_t k = 0; k < a.quiver.arrows.size(); ++k) {
    const Arrow& arr = a.quiver.arrows[k];
    RationalMatrix mat = zeros(m.dims[arr.target], m.dims[arr.source]);
    const int rs = a.dims[arr.target], cs = a.dims[arr.source];
    for (int i = 0; i < rs; ++i)
      for (int j = 0; j < cs; ++j) mat[i][j] = a.maps[k][i][j];
    for (int i = 0; i < b.dims[arr.target]; ++i)
      for (int j = 0; j < b.dims[arr.source]; ++j) mat[rs + i][cs + j] = b.maps[k][i][j];
    m.maps.push_back(std::move(mat));
  }
  if (!a.basis_labels.empty() || !b.basis_labels.empty()) {
    // Keep vertex-major order of the combined basis.
    std::size_t ia = 0, ib = 0;
    for (std::size_t v = 0; v < a.dims.size(); ++v) {
      for (int i = 0; i < a.dims[v]; ++i, ++ia)
        m.basis_labels.push_back(ia < a.basis_labels.size() ? a.basis_labels[ia] + "'" : "");
      for (int i = 0; i < b.dims[v]; ++i, ++ib)
        m.basis_labels.push_back(ib < b.basis_labels.size() ? b.basis_labels[ib] + "''" : "");
    }
  }
  return m;
}

QuiverModule a2_module(char name)
{
  QuiverModule m = zero_module(linear_quiver(2));
  switch (name) {
  case 'A':
    m.dims = {1, 0};
    m.maps = {zeros(1, 0), zeros(0, 1)};
    break;
  case 'B':
    m.dims = {0, 1};
    m.maps = {zeros(0, 1), zeros(1, 0)};
    break;
  case 'C':
    m.dims = {1, 1};
    m.maps = {{{Rational(1)}}, {{Rational(0)}}};
    break;
  case 'D':
    m.dims = {1, 1};
    m.maps = {{{Rational(0)}}, {{Rational(1)}}};
    break;
  default:
    throw InvalidInput(std::string("unknown A2 module ") + name);
  }
  return m;
}

bool is_combinatorial(const QuiverModule& m)
{
  for (const RationalMatrix& mat : m.maps) {
    // Rows too: two basis vectors with a common image span a non-coordinate
    // submodule through their difference.
    for (const auto& row : mat)
      if (std::count_if(row.begin(), row.end(), [](const Rational& x) { return x != Rational(0); }) > 1) return false;
    const std::size_t cols = mat.empty() ? 0 : mat.front().size();
    for (std::size_t c = 0; c < cols; ++c) {
      int nonzero = 0;
      for (const auto& row : mat) {
        if (row[c] == Rational(0)) continue;
        if (row[c] != Rational(1)) return false;
        ++nonzero;
      }
      if (nonzero > 1) return false;
    }
  }
  return true;
}

DimVectorSet submodule_dim_vectors(const QuiverModule& m, const SubmoduleOptions& opt)
{
  check_module(m);
  if (opt.method == SubmoduleMethod::coordinate) {
    if (!is_combinatorial(m)) throw MethodPrecondition("coordinate method needs a combinatorial module");
    return coordinate_dim_vectors(m, opt.budget);
  }
  const auto prob = detail::exhaustive_problem(m, opt);
  return opt.jobs == 1 ? detail::exhaustive_serial(prob) : detail::exhaustive_parallel(prob, opt.jobs);
}

LatticePolytope pol(const QuiverModule& m, const SubmoduleOptions& opt)
{
  std::vector<RationalPoint> pts;
  for (const auto& dv : submodule_dim_vectors(m, opt)) {
    RationalPoint x;
    for (int d : dv) x.push_back(Rational(d));
    pts.push_back(std::move(x));
  }
  return convex_hull(pts);
}

namespace detail {

SubspaceList all_subspaces(int p, int d)
{
  SubspaceList out;
  out.p = p;
  out.d = d;
  long long size = 1;
  for (int i = 0; i < d; ++i) size *= p;
  for (int k = 0; k <= d; ++k) {
    // Pivot columns as a bitmask with k bits set.
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      std::vector<int> piv;
      for (int c = 0; c < d; ++c)
        if (mask >> c & 1) piv.push_back(c);
      std::vector<std::pair<int, int>> free; // (row, column)
      for (int r = 0; r < k; ++r)
        for (int c = piv[r] + 1; c < d; ++c)
          if (!(mask >> c & 1)) free.push_back({r, c});
      long long assignments = 1;
      for (std::size_t f = 0; f < free.size(); ++f) assignments *= p;
      for (long long a = 0; a < assignments; ++a) {
        std::vector<std::vector<int>> basis(k, std::vector<int>(d, 0));
        for (int r = 0; r < k; ++r) basis[r][piv[r]] = 1;
        long long rest = a;
        for (const auto& [r, c] : free) {
          basis[r][c] = static_cast<int>(rest % p);
          rest /= p;
        }
        std::vector<bool> members(size, false);
        long long combos = 1;
        for (int r = 0; r < k; ++r) combos *= p;
        for (long long coeff = 0; coeff < combos; ++coeff) {
          std::vector<int> v(d, 0);
          long long c = coeff;
          for (int r = 0; r < k; ++r, c /= p)
            for (int i = 0; i < d; ++i) v[i] = (v[i] + static_cast<int>(c % p) * basis[r][i]) % p;
          long long code = 0;
          for (int i = d - 1; i >= 0; --i) code = code * p + v[i];
          members[code] = true;
        }
        out.members.push_back(std::move(members));
        out.dims.push_back(k);
        out.bases.push_back(std::move(basis));
      }
    }
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> reduce_mod(const QuiverModule& m, int p)
{
  auto inverse = [p](long long b) {
    for (long long x = 1; x < p; ++x)
      if ((b * x) % p == 1) return x;
    return 0LL;
  };
  std::vector<std::vector<std::vector<int>>> out;
  for (const RationalMatrix& mat : m.maps) {
    std::vector<std::vector<int>> red;
    for (const auto& row : mat) {
      std::vector<int> r;
      for (const Rational& x : row) {
        const long long den = ((x.denominator() % p) + p) % p;
        if (den == 0) throw MethodPrecondition("matrix entry does not reduce modulo p");
        const long long num = ((x.numerator() % p) + p) % p;
        r.push_back(static_cast<int>(num * inverse(den) % p));
      }
      red.push_back(std::move(r));
    }
    out.push_back(std::move(red));
  }
  return out;
}

ExhaustiveProblem exhaustive_problem(const QuiverModule& m, const SubmoduleOptions& opt)
{
  if (!is_prime(opt.prime) || opt.prime > 7) throw MethodPrecondition("exhaustive method needs a prime p <= 7");
  const int total = std::accumulate(m.dims.begin(), m.dims.end(), 0);
  if (total > 8) throw MethodPrecondition("exhaustive method needs total dimension <= 8");
  ExhaustiveProblem prob;
  prob.module = &m;
  prob.p = opt.prime;
  prob.maps = reduce_mod(m, opt.prime);
  prob.combinations = 1;
  std::map<int, SubspaceList> cache;
  for (int d : m.dims) {
    if (!cache.count(d)) cache[d] = all_subspaces(opt.prime, d);
    prob.spaces.push_back(cache[d]);
    prob.combinations *= prob.spaces.back().members.size();
    if (prob.combinations > opt.budget) throw BudgetExceeded("submodule enumeration exceeded the budget");
  }
  return prob;
}

std::optional<std::vector<int>> exhaustive_candidate(const ExhaustiveProblem& prob, unsigned long long index)
{
  const QuiverModule& m = *prob.module;
  const std::size_t n = prob.spaces.size();
  std::vector<std::size_t> choice(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t count = prob.spaces[v].members.size();
    choice[v] = index % count;
    index /= count;
  }
  const int p = prob.p;
  for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
    const Arrow& arr = m.quiver.arrows[a];
    const auto& mat = prob.maps[a];
    const auto& target = prob.spaces[arr.target].members[choice[arr.target]];
    for (const auto& u : prob.spaces[arr.source].bases[choice[arr.source]]) {
      long long code = 0;
      for (int i = m.dims[arr.target] - 1; i >= 0; --i) {
        long long s = 0;
        for (int j = 0; j < m.dims[arr.source]; ++j) s += static_cast<long long>(mat[i][j]) * u[j];
        code = code * p + s % p;
      }
      if (!target[code]) return std::nullopt;
    }
  }
  std::vector<int> dv(n);
  for (std::size_t v = 0; v < n; ++v) dv[v] = prob.spaces[v].dims[choice[v]];
  return dv;
}

} // namespace detail

} // namespace alcove
