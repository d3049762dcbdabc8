// Grading groups (Z or Z_N) and the formal dimension formulas for the
// moduli spaces behind the differential.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace lch {

// The cyclic group gradings live in. order == 0 encodes Z; order >= 1
// encodes Z_N with representatives in [0, N). When built from geometric
// data, N = lcm(2g, m) with lcm(0, x) = x, lcm(x, 0) = x, lcm(0, 0) = 0.
class GradingGroup {
 public:
  static GradingGroup integer_grading() { return GradingGroup(0); }
  static GradingGroup cyclic(long order) {
    if (order < 1) throw std::invalid_argument("cyclic order must be >= 1");
    return GradingGroup(order);
  }
  static GradingGroup from_geometry(long greatest_divisor, long maslov);

  long order() const { return order_; }
  bool is_integer() const { return order_ == 0; }
  long reduce(long d) const {
    if (order_ == 0) return d;
    long r = d % order_;
    return r < 0 ? r + order_ : r;
  }
  // True when (-1)^d is well defined for group elements d: Z, or even order.
  bool parity_well_defined() const { return order_ == 0 || order_ % 2 == 0; }

  std::optional<long> greatest_divisor() const { return greatest_divisor_; }
  std::optional<long> maslov() const { return maslov_; }

  bool operator==(const GradingGroup& o) const { return order_ == o.order_; }

 private:
  explicit GradingGroup(long order) : order_(order) {}
  long order_;
  std::optional<long> greatest_divisor_;
  std::optional<long> maslov_;
};

// A reduced degree; constructed only through make_degree.
struct Degree {
  long value = 0;
  bool operator==(const Degree&) const = default;
};

inline Degree make_degree(const GradingGroup& g, long raw) { return Degree{g.reduce(raw)}; }

inline Degree grading_reduce(long d, const GradingGroup& g) { return make_degree(g, d); }

// |q| = nu - 1 with nu = D - U + I: down cusps minus up cusps plus the Morse
// index of the front difference function.
inline long front_grading(long down_cusps, long up_cusps, long morse_index) {
  if (down_cusps < 0 || up_cusps < 0 || morse_index < 0)
    throw std::invalid_argument("cusp counts and Morse index must be nonnegative");
  return down_cusps - up_cusps + morse_index - 1;
}

// Formal dimension of the disk moduli space with one positive puncture:
// |a| - sum |b_j| + mu - 1.
long expected_dim_one_positive(long deg_a, const std::vector<long>& deg_bs, long maslov_mu);

// Two positive punctures: |a1| + |a2| - sum |b| - sum |c| - n + 1 + mu.
long expected_dim_two_positive(long deg_a1, long deg_a2, const std::vector<long>& deg_bs,
                               const std::vector<long>& deg_cs, long n, long maslov_mu);

enum class PunctureSign { Positive, Negative };

// Formal dimension of a generalized disk: dim M + 1 + (I - n) for a positive
// Morse puncture, dim M + 1 - I for a negative one.
long expected_dim_generalized(long dim_moduli, long morse_index, long n, PunctureSign sign);

}  // namespace lch
