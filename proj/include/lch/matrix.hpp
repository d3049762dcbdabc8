// Dense exact matrices over a coefficient ring, Gaussian elimination over
// fields, and Smith normal form over the integers.
#pragma once

#include <optional>
#include <vector>

#include "lch/ring.hpp"

namespace lch {

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Elem(0)) {}
  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Elem& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Elem& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat&) const = default;

 private:
  size_t rows_, cols_;
  std::vector<Elem> a_;
};

Mat mat_mul(const Ring& r, const Mat& a, const Mat& b);
Mat mat_add(const Ring& r, const Mat& a, const Mat& b);
Mat mat_sub(const Ring& r, const Mat& a, const Mat& b);
Mat mat_neg(const Ring& r, const Mat& a);
bool mat_is_zero(const Ring& r, const Mat& a);
Mat transpose(const Mat& a);
// [a | b] side by side; row counts must agree.
Mat hconcat(const Mat& a, const Mat& b);

// Rank by exact Gaussian elimination; requires a field.
long field_rank(const Ring& r, Mat a);
// Columns form a basis of the kernel of a; requires a field.
Mat field_kernel_basis(const Ring& r, Mat a);
// One solution x of a x = b, if any; requires a field.
std::optional<std::vector<Elem>> field_solve(const Ring& r, Mat a, std::vector<Elem> b);

// Invariant factors d_1 | d_2 | ... of an integer matrix, nonnegative,
// padded with no zeros (only the nonzero factors are returned). The number
// of factors equals the rank.
std::vector<mpz_class> smith_invariant_factors(const Mat& a);

}  // namespace lch
