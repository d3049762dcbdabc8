#include "lch/grading.hpp"

#include <numeric>

namespace lch {

GradingGroup GradingGroup::from_geometry(long greatest_divisor, long maslov) {
  if (greatest_divisor < 0 || maslov < 0)
    throw std::invalid_argument("grading parameters must be nonnegative");
  long a = 2 * greatest_divisor;
  long b = maslov;
  // lcm with the conventions lcm(0, x) = x, lcm(x, 0) = x, lcm(0, 0) = 0,
  // so that g = m = 0 yields the Z-grading.
  long n;
  if (a == 0)
    n = b;
  else if (b == 0)
    n = a;
  else
    n = std::lcm(a, b);
  GradingGroup g(n);
  g.greatest_divisor_ = greatest_divisor;
  g.maslov_ = maslov;
  return g;
}

long expected_dim_one_positive(long deg_a, const std::vector<long>& deg_bs, long maslov_mu) {
  long s = 0;
  for (long b : deg_bs) s += b;
  return deg_a - s + maslov_mu - 1;
}

long expected_dim_two_positive(long deg_a1, long deg_a2, const std::vector<long>& deg_bs,
                               const std::vector<long>& deg_cs, long n, long maslov_mu) {
  long s = 0;
  for (long b : deg_bs) s += b;
  for (long c : deg_cs) s += c;
  return deg_a1 + deg_a2 - s - n + 1 + maslov_mu;
}

long expected_dim_generalized(long dim_moduli, long morse_index, long n, PunctureSign sign) {
  if (sign == PunctureSign::Positive) return dim_moduli + 1 + (morse_index - n);
  return dim_moduli + 1 - morse_index;
}

}  // namespace lch
