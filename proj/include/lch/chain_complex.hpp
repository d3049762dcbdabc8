// Graded based chain complexes with exact boundary matrices, homology over
// fields and over Z, duals, mapping cones, and Poincare polynomials.
//
// Degrees are reduced in the complex's grading group; the boundary is
// degree -1, so over a cyclic grading the matrices wrap around. M_k maps
// C_k to C_{k-1} and M_{k-1} M_k = 0 is checked at construction.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "lch/grading.hpp"
#include "lch/matrix.hpp"
#include "lch/ring.hpp"

namespace lch {

class ChainComplex {
 public:
  ChainComplex(Ring ring, GradingGroup grading,
               std::map<long, std::vector<std::string>> basis, std::map<long, Mat> boundary);

  static ChainComplex zero(const Ring& r,
                           const GradingGroup& g = GradingGroup::integer_grading()) {
    return ChainComplex(r, g, {}, {});
  }

  const Ring& ring() const { return ring_; }
  const GradingGroup& grading() const { return grading_; }
  // Degrees with a nonempty basis, ascending.
  std::vector<long> degrees() const;
  long dim(long k) const;
  long total_dim() const;
  const std::vector<std::string>& basis(long k) const;
  // M_k : C_k -> C_{k-1}; a correctly shaped zero matrix when absent.
  Mat boundary(long k) const;
  bool is_zero() const { return basis_.empty(); }

  bool operator==(const ChainComplex&) const = default;

 private:
  Ring ring_;
  GradingGroup grading_;
  std::map<long, std::vector<std::string>> basis_;
  std::map<long, Mat> boundary_;
};

struct HomologyProfile {
  GradingGroup grading = GradingGroup::integer_grading();
  std::map<long, long> free_rank;                 // zero entries not stored
  std::map<long, std::vector<mpz_class>> torsion;  // invariant factors > 1
  long rank(long k) const {
    auto it = free_rank.find(k);
    return it == free_rank.end() ? 0 : it->second;
  }
  bool operator==(const HomologyProfile&) const = default;
};

// Laurent polynomial with nonnegative integer coefficients (dimension
// counts); zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<long, long> coeffs);
  void set(long degree, long coeff);
  long coeff(long degree) const;
  const std::map<long, long>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::string str() const;  // "t^-2 + t + t^2", degree ascending
  bool operator==(const LaurentPoly&) const = default;
  bool operator<(const LaurentPoly& o) const { return c_ < o.c_; }

 private:
  std::map<long, long> c_;
};

// dim H_k = dim C_k - rank M_k - rank M_{k+1}, by exact elimination.
// Requires a field ring.
HomologyProfile homology_field(const ChainComplex& c);
// Free ranks and invariant-factor torsion via Smith normal form. Requires
// ring Z.
HomologyProfile homology_integral(const ChainComplex& c);
// Field dims as a plain map (zero entries omitted).
std::map<long, long> homology_dims(const ChainComplex& c);

// P(t) = sum dim H_k t^k. Requires a Z-graded field profile.
LaurentPoly poincare_chekanov(const HomologyProfile& profile);

// The dual complex on labels "x*": degree(x*) = n - 2 - degree(x), boundary
// matrices the transposes, so <d_p p, q> = <p, d_q q> entrywise.
ChainComplex dualize(const ChainComplex& c, long n);

// A graded map f: C -> D shifting degree by `degree`; blocks[k] maps C_k to
// D_{k+degree}. Missing blocks are zero.
struct GradedMap {
  long degree = 0;
  std::map<long, Mat> blocks;
  Mat block(const ChainComplex& c, const ChainComplex& d, long k) const;
};

bool is_chain_map(const ChainComplex& c, const ChainComplex& d, const GradedMap& f);

// Mapping cone of a degree -1 chain map: the complex on C (+) D with
// (c, d) |-> (-dc, f(c) + dd). Throws when f is not a chain map.
ChainComplex mapping_cone(const ChainComplex& c, const ChainComplex& d, const GradedMap& f);

// Euler characteristic over a field, computed from both chains and homology
// (the two must agree). Rejects cyclic gradings of odd order.
long euler_characteristic(const ChainComplex& c);

// Rank of the induced map H_k(C) -> H_{k+f.degree}(D) over a field.
long induced_rank(const ChainComplex& c, const ChainComplex& d, const GradedMap& f, long k);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

// Degree shift: (shift(C, s))_k = C_{k-s}, boundary matrices unchanged.
ChainComplex shift(const ChainComplex& c, long s);

}  // namespace lch
