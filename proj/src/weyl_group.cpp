#include "alcove/weyl_group.hpp"

#include "alcove/errors.hpp"

#include <map>

namespace alcove {

namespace {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// s_alpha(x) = x - <alpha, x> alpha^vee on coroot coordinates.
IntMatrix reflection(const RootSystem& rs, int root)
{
  const int r = rs.rank();
  IntMatrix m(r, std::vector<int>(r, 0));
  const auto& coroot = rs.positive_roots()[root];
  const auto& row = rs.pairing_row(root);
  for (int i = 0; i < r; ++i) {
    m[i][i] = 1;
    for (int j = 0; j < r; ++j) m[i][j] -= coroot[i] * row[j];
  }
  return m;
}

} // namespace

WeylGroup::WeylGroup(const RootSystem& rs, std::size_t max_order)
    : rank_(rs.rank()), num_roots_(rs.num_positive_roots())
{
  const int r = rank_;
  IntMatrix identity(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) identity[i][i] = 1;

  std::vector<IntMatrix> simple;
  for (int i = 0; i < r; ++i) simple.push_back(reflection(rs, rs.simple_root(i)));

  std::map<IntMatrix, int> index;
  elements_.push_back(identity);
  index[identity] = 0;
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& s : simple) {
      auto next = multiply(s, elements_[head]);
      if (index.emplace(next, static_cast<int>(elements_.size())).second) {
        elements_.push_back(std::move(next));
        if (elements_.size() > max_order) throw BudgetExceeded("Weyl group larger than the configured cap");
      }
    }
  }

  const std::size_t n = elements_.size();
  root_image_.resize(n * num_roots_);
  length_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    for (int root = 0; root < num_roots_; ++root) {
      std::vector<int> img(r, 0);
      const auto& c = rs.positive_roots()[root];
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) img[i] += elements_[w][i][j] * c[j];
      int found = rs.find_root(img);
      if (found >= 0) {
        root_image_[w * num_roots_ + root] = found + 1;
        continue;
      }
      for (auto& x : img) x = -x;
      found = rs.find_root(img);
      if (found < 0) throw std::logic_error("Weyl group element does not permute roots");
      root_image_[w * num_roots_ + root] = -(found + 1);
      ++length_[w];
    }
  }

  reflect_left_.resize(num_roots_ * n);
  for (int root = 0; root < num_roots_; ++root) {
    const auto s = reflection(rs, root);
    for (std::size_t w = 0; w < n; ++w) reflect_left_[root * n + w] = index.at(multiply(s, elements_[w]));
  }
}

std::vector<long long> WeylGroup::apply(int w, const std::vector<long long>& x) const
{
  const auto& m = elements_.at(w);
  std::vector<long long> y(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) y[i] += m[i][j] * x[j];
  return y;
}

RationalPoint WeylGroup::apply(int w, const RationalPoint& x) const
{
  const auto& m = elements_.at(w);
  RationalPoint y(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (m[i][j] != 0) y[i] += x[j] * m[i][j];
  return y;
}

} // namespace alcove
