#pragma once

#include <initializer_list>
#include <vector>

#include "kcut/rational.hpp"

namespace kcut {

using Vec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Dense rational matrix with a fixed column count; rows may be appended.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : cols_(cols), rows_(rows, Vec(cols, Rat(0))) {}
  explicit Mat(std::initializer_list<Vec> rows);
  static Mat from_rows(std::vector<Vec> rows, int cols);

  int row_count() const { return static_cast<int>(rows_.size()); }
  int col_count() const { return cols_; }
  const Vec& operator[](int i) const { return rows_[i]; }
  Vec& operator[](int i) { return rows_[i]; }
  const std::vector<Vec>& rows() const { return rows_; }
  void push_row(Vec row);

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  int cols_ = 0;
  std::vector<Vec> rows_;
};

Rat dot(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Rat& s);
bool is_zero(const Vec& v);
bool all_integer(const Vec& v);
Vec vec_of(const IntVec& v);
Vec concat(const Vec& a, const Vec& b);

// Smallest positive rational multiple of v that is an integer vector with
// gcd of absolute entries equal to 1. The zero vector maps to zeros.
IntVec primitive_integer_vector(const Vec& v);

// Exact rank via Gaussian elimination; the argument is consumed.
int rank(std::vector<Vec> m);

}  // namespace kcut
