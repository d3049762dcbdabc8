#include "lch/matrix.hpp"

#include <stdexcept>

namespace lch {

Mat mat_mul(const Ring& r, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Mat c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (r.is_zero(a.at(i, k))) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) = r.add(c.at(i, j), r.mul(a.at(i, k), b.at(k, j)));
    }
  return c;
}

Mat mat_add(const Ring& r, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  Mat c(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = r.add(a.at(i, j), b.at(i, j));
  return c;
}

Mat mat_sub(const Ring& r, const Mat& a, const Mat& b) {
  return mat_add(r, a, mat_neg(r, b));
}

Mat mat_neg(const Ring& r, const Mat& a) {
  Mat c(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = r.neg(a.at(i, j));
  return c;
}

bool mat_is_zero(const Ring& r, const Mat& a) {
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!r.is_zero(a.at(i, j))) return false;
  return true;
}

Mat transpose(const Mat& a) {
  Mat c(a.cols(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c.at(j, i) = a.at(i, j);
  return c;
}

Mat hconcat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat row mismatch");
  Mat c(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

namespace {

void require_field(const Ring& r) {
  if (!r.is_field()) throw std::domain_error("operation requires a field ring");
}

// Row echelon form in place; returns pivot columns. Deterministic: scans
// columns left to right, takes the first nonzero entry as pivot.
std::vector<size_t> echelonize(const Ring& r, Mat& a) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t piv = row;
    while (piv < a.rows() && r.is_zero(a.at(piv, col))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    Elem inv = r.inverse(a.at(row, col));
    for (size_t j = col; j < a.cols(); ++j) a.at(row, j) = r.mul(a.at(row, j), inv);
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == row || r.is_zero(a.at(i, col))) continue;
      Elem f = a.at(i, col);
      for (size_t j = col; j < a.cols(); ++j)
        a.at(i, j) = r.sub(a.at(i, j), r.mul(f, a.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

long field_rank(const Ring& r, Mat a) {
  require_field(r);
  return static_cast<long>(echelonize(r, a).size());
}

Mat field_kernel_basis(const Ring& r, Mat a) {
  require_field(r);
  size_t n = a.cols();
  std::vector<size_t> pivots = echelonize(r, a);
  std::vector<bool> is_pivot(n, false);
  for (size_t p : pivots) is_pivot[p] = true;
  Mat basis(n, n - pivots.size());
  size_t bcol = 0;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.at(free, bcol) = 1;
    for (size_t k = 0; k < pivots.size(); ++k)
      basis.at(pivots[k], bcol) = r.neg(a.at(k, free));
    ++bcol;
  }
  return basis;
}

std::optional<std::vector<Elem>> field_solve(const Ring& r, Mat a, std::vector<Elem> b) {
  require_field(r);
  if (b.size() != a.rows()) throw std::invalid_argument("solve shape mismatch");
  Mat aug = hconcat(a, Mat(a.rows(), 1));
  for (size_t i = 0; i < a.rows(); ++i) aug.at(i, a.cols()) = b[i];
  std::vector<size_t> pivots = echelonize(r, aug);
  // Inconsistent iff a pivot lands in the last column.
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Elem> x(a.cols(), Elem(0));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, a.cols());
  return x;
}

std::vector<mpz_class> smith_invariant_factors(const Mat& a) {
  size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      if (a.at(i, j).get_den() != 1)
        throw std::domain_error("Smith normal form requires integer entries");
      m[i][j] = a.at(i, j).get_num();
    }

  std::vector<mpz_class> factors;
  size_t t = 0;
  while (t < rows && t < cols) {
    // Deterministic pivot: smallest |entry| in the remaining block, ties
    // broken by (row, col).
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (!found || cmp(abs(m[i][j]), abs(m[pi][pj])) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(m[t], m[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        mpz_class q = m[i][t] / m[t][t];  // truncated division
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);  // remainder is smaller; repeat
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        mpz_class q = m[t][j] / m[t][t];
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
    }
    ++t;
  }
  // Enforce the divisibility chain d_1 | d_2 | ... by gcd/lcm fixups.
  for (size_t i = 0; i < t; ++i) m[i][i] = abs(m[i][i]);
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i + 1 < t; ++i) {
      if (m[i + 1][i + 1] % m[i][i] == 0) continue;
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), m[i][i].get_mpz_t(), m[i + 1][i + 1].get_mpz_t());
      l = m[i][i] / g * m[i + 1][i + 1];
      m[i][i] = g;
      m[i + 1][i + 1] = l;
      changed = true;
    }
  }
  for (size_t i = 0; i < t; ++i) factors.push_back(m[i][i]);
  return factors;
}

}  // namespace lch
