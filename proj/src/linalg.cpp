#include "kcut/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace kcut {

Mat::Mat(std::initializer_list<Vec> rows) {
  for (const Vec& r : rows) push_row(r);
}

Mat Mat::from_rows(std::vector<Vec> rows, int cols) {
  Mat m;
  m.cols_ = cols;
  for (Vec& r : rows) m.push_row(std::move(r));
  return m;
}

void Mat::push_row(Vec row) {
  if (rows_.empty() && cols_ == 0) {
    cols_ = static_cast<int>(row.size());
  } else if (static_cast<int>(row.size()) != cols_) {
    throw std::invalid_argument("matrix row width mismatch");
  }
  rows_.push_back(std::move(row));
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec scaled(const Vec& v, const Rat& s) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
  return r;
}

bool is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool all_integer(const Vec& v) {
  for (const Rat& x : v)
    if (!x.is_integer()) return false;
  return true;
}

Vec vec_of(const IntVec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

IntVec primitive_integer_vector(const Vec& v) {
  Int den_lcm(1);
  for (const Rat& x : v) den_lcm = lcm(den_lcm, x.den());
  IntVec ints(v.size());
  Int g(0);
  for (size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].num() * (den_lcm / v[i].den());
    g = gcd(g, ints[i]);
  }
  if (sgn(g) == 0) return ints;  // zero vector
  for (Int& x : ints) x /= g;
  return ints;
}

int rank(std::vector<Vec> m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    for (size_t i = row + 1; i < m.size(); ++i) {
      if (m[i][col].is_zero()) continue;
      Rat f = m[i][col] / m[row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace kcut
