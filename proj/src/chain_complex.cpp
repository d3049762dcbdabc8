#include "lch/chain_complex.hpp"

#include <stdexcept>

namespace lch {

namespace {
const std::vector<std::string> kEmptyBasis;
}

ChainComplex::ChainComplex(Ring ring, GradingGroup grading,
                           std::map<long, std::vector<std::string>> basis,
                           std::map<long, Mat> boundary)
    : ring_(std::move(ring)), grading_(grading), basis_(std::move(basis)) {
  for (auto it = basis_.begin(); it != basis_.end();) {
    if (it->first != grading_.reduce(it->first))
      throw std::invalid_argument("basis degree not reduced in the grading group");
    if (it->second.empty())
      it = basis_.erase(it);
    else
      ++it;
  }
  for (auto& [k, m] : boundary) {
    if (k != grading_.reduce(k))
      throw std::invalid_argument("boundary degree not reduced in the grading group");
    size_t src = static_cast<size_t>(dim(k));
    size_t dst = static_cast<size_t>(dim(grading_.reduce(k - 1)));
    if (m.rows() != dst || m.cols() != src)
      throw std::invalid_argument("boundary matrix at degree " + std::to_string(k) +
                                  " has shape " + std::to_string(m.rows()) + "x" +
                                  std::to_string(m.cols()) + ", expected " +
                                  std::to_string(dst) + "x" + std::to_string(src));
    if (!mat_is_zero(ring_, m)) boundary_[k] = std::move(m);
  }
  for (const auto& [k, m] : boundary_) {
    Mat next = this->boundary(grading_.reduce(k - 1));
    if (!mat_is_zero(ring_, mat_mul(ring_, next, m)))
      throw std::invalid_argument("boundary does not square to zero at degree " +
                                  std::to_string(k));
  }
}

std::vector<long> ChainComplex::degrees() const {
  std::vector<long> out;
  for (const auto& [k, b] : basis_) out.push_back(k);
  return out;
}

long ChainComplex::dim(long k) const {
  auto it = basis_.find(k);
  return it == basis_.end() ? 0 : static_cast<long>(it->second.size());
}

long ChainComplex::total_dim() const {
  long t = 0;
  for (const auto& [k, b] : basis_) t += static_cast<long>(b.size());
  return t;
}

const std::vector<std::string>& ChainComplex::basis(long k) const {
  auto it = basis_.find(k);
  return it == basis_.end() ? kEmptyBasis : it->second;
}

Mat ChainComplex::boundary(long k) const {
  auto it = boundary_.find(k);
  if (it != boundary_.end()) return it->second;
  return Mat(static_cast<size_t>(dim(grading_.reduce(k - 1))), static_cast<size_t>(dim(k)));
}

LaurentPoly::LaurentPoly(std::map<long, long> coeffs) {
  for (const auto& [d, c] : coeffs) set(d, c);
}

void LaurentPoly::set(long degree, long coeff) {
  if (coeff == 0)
    c_.erase(degree);
  else
    c_[degree] = coeff;
}

long LaurentPoly::coeff(long degree) const {
  auto it = c_.find(degree);
  return it == c_.end() ? 0 : it->second;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : c_) {
    if (!s.empty()) s += " + ";
    std::string coeff = (c == 1 && d != 0) ? "" : std::to_string(c);
    if (d == 0)
      s += std::to_string(c);
    else if (d == 1)
      s += coeff + "t";
    else
      s += coeff + "t^" + std::to_string(d);
  }
  return s;
}

HomologyProfile homology_field(const ChainComplex& c) {
  if (!c.ring().is_field())
    throw std::domain_error("field homology requires a field ring, got " + c.ring().name());
  HomologyProfile p;
  p.grading = c.grading();
  for (long k : c.degrees()) {
    long rank_in = field_rank(c.ring(), c.boundary(c.grading().reduce(k + 1)));
    long rank_out = field_rank(c.ring(), c.boundary(k));
    long h = c.dim(k) - rank_in - rank_out;
    if (h != 0) p.free_rank[k] = h;
  }
  return p;
}

HomologyProfile homology_integral(const ChainComplex& c) {
  if (!c.ring().is_integers())
    throw std::domain_error("integral homology requires ring Z, got " + c.ring().name());
  HomologyProfile p;
  p.grading = c.grading();
  std::map<long, std::vector<mpz_class>> snf;
  auto factors_at = [&](long k) -> const std::vector<mpz_class>& {
    auto it = snf.find(k);
    if (it == snf.end()) it = snf.emplace(k, smith_invariant_factors(c.boundary(k))).first;
    return it->second;
  };
  for (long k : c.degrees()) {
    const auto& in = factors_at(c.grading().reduce(k + 1));
    const auto& out = factors_at(k);
    long h = c.dim(k) - static_cast<long>(in.size()) - static_cast<long>(out.size());
    if (h != 0) p.free_rank[k] = h;
    std::vector<mpz_class> tors;
    for (const auto& d : in)
      if (d > 1) tors.push_back(d);
    if (!tors.empty()) p.torsion[k] = std::move(tors);
  }
  return p;
}

std::map<long, long> homology_dims(const ChainComplex& c) {
  return homology_field(c).free_rank;
}

LaurentPoly poincare_chekanov(const HomologyProfile& profile) {
  if (!profile.grading.is_integer())
    throw std::domain_error("Poincare polynomial needs a Z-graded profile");
  if (!profile.torsion.empty())
    throw std::domain_error("Poincare polynomial needs a field (torsion-free) profile");
  LaurentPoly p;
  for (const auto& [k, d] : profile.free_rank) p.set(k, d);
  return p;
}

ChainComplex dualize(const ChainComplex& c, long n) {
  if (!c.ring().is_field()) throw std::domain_error("dualize requires a field ring");
  const GradingGroup& g = c.grading();
  std::map<long, std::vector<std::string>> basis;
  std::map<long, Mat> boundary;
  for (long m : c.degrees()) {
    long j = g.reduce(n - 2 - m);
    std::vector<std::string> labels;
    for (const auto& name : c.basis(m)) labels.push_back(name + "*");
    basis[j] = std::move(labels);
  }
  for (long m : c.degrees()) {
    long j = g.reduce(n - 2 - m);
    // d_p on duals of C_m is the transpose of M_{m+1}: C_{m+1} -> C_m.
    Mat t = transpose(c.boundary(g.reduce(m + 1)));
    if (t.rows() > 0 && t.cols() > 0) boundary[j] = std::move(t);
  }
  return ChainComplex(c.ring(), g, std::move(basis), std::move(boundary));
}

Mat GradedMap::block(const ChainComplex& c, const ChainComplex& d, long k) const {
  auto it = blocks.find(k);
  if (it != blocks.end()) return it->second;
  return Mat(static_cast<size_t>(d.dim(d.grading().reduce(k + degree))),
             static_cast<size_t>(c.dim(k)));
}

bool is_chain_map(const ChainComplex& c, const ChainComplex& d, const GradedMap& f) {
  if (!(c.ring() == d.ring()) || !(c.grading() == d.grading())) return false;
  const Ring& r = c.ring();
  const GradingGroup& g = c.grading();
  for (const auto& [k, m] : f.blocks) {
    Mat expected_shape = f.block(c, d, k);
    if (m.rows() != expected_shape.rows() || m.cols() != expected_shape.cols()) return false;
  }
  std::map<long, bool> degrees_to_check;
  for (long k : c.degrees()) degrees_to_check[k] = true;
  for (const auto& [k, m] : f.blocks) degrees_to_check[k] = true;
  for (const auto& [k, unused] : degrees_to_check) {
    (void)unused;
    Mat lhs = mat_mul(r, f.block(c, d, g.reduce(k - 1)), c.boundary(k));
    Mat rhs = mat_mul(r, d.boundary(g.reduce(k + f.degree)), f.block(c, d, k));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

ChainComplex mapping_cone(const ChainComplex& c, const ChainComplex& d, const GradedMap& f) {
  if (f.degree != -1) throw std::invalid_argument("mapping cone needs a degree -1 map");
  if (!is_chain_map(c, d, f)) throw std::invalid_argument("mapping cone of a non-chain-map");
  const Ring& r = c.ring();
  const GradingGroup& g = c.grading();
  std::map<long, std::vector<std::string>> basis;
  std::map<long, Mat> boundary;
  std::map<long, bool> keys;
  for (long k : c.degrees()) keys[k] = true;
  for (long k : d.degrees()) keys[k] = true;
  for (const auto& [k, unused] : keys) {
    (void)unused;
    std::vector<std::string> labels = c.basis(k);
    for (const auto& name : d.basis(k)) labels.push_back(name);
    if (!labels.empty()) basis[k] = std::move(labels);
  }
  for (const auto& [k, unused] : keys) {
    (void)unused;
    long km1 = g.reduce(k - 1);
    size_t nc = static_cast<size_t>(c.dim(k)), nd = static_cast<size_t>(d.dim(k));
    size_t mc = static_cast<size_t>(c.dim(km1)), md = static_cast<size_t>(d.dim(km1));
    if (nc + nd == 0 || mc + md == 0) continue;
    Mat m(mc + md, nc + nd);
    Mat dc = c.boundary(k), dd = d.boundary(k), fk = f.block(c, d, k);
    for (size_t i = 0; i < mc; ++i)
      for (size_t j = 0; j < nc; ++j) m.at(i, j) = r.neg(dc.at(i, j));
    for (size_t i = 0; i < md; ++i) {
      for (size_t j = 0; j < nc; ++j) m.at(mc + i, j) = fk.at(i, j);
      for (size_t j = 0; j < nd; ++j) m.at(mc + i, nc + j) = dd.at(i, j);
    }
    boundary[k] = std::move(m);
  }
  return ChainComplex(r, g, std::move(basis), std::move(boundary));
}

long euler_characteristic(const ChainComplex& c) {
  if (!c.grading().parity_well_defined())
    throw std::domain_error("Euler characteristic undefined for odd cyclic gradings");
  auto sign = [](long k) { return (k % 2 == 0) ? 1 : -1; };
  long chi_chains = 0;
  for (long k : c.degrees()) chi_chains += sign(k) * c.dim(k);
  long chi_homology = 0;
  for (const auto& [k, h] : homology_field(c).free_rank) chi_homology += sign(k) * h;
  if (chi_chains != chi_homology)
    throw std::logic_error("Euler characteristic mismatch between chains and homology");
  return chi_chains;
}

long induced_rank(const ChainComplex& c, const ChainComplex& d, const GradedMap& f, long k) {
  const Ring& r = c.ring();
  if (!r.is_field()) throw std::domain_error("induced rank requires a field ring");
  long kd = d.grading().reduce(k + f.degree);
  Mat cycles = field_kernel_basis(r, c.boundary(k));
  Mat mapped = mat_mul(r, f.block(c, d, k), cycles);
  Mat boundaries = d.boundary(d.grading().reduce(kd + 1));
  return field_rank(r, hconcat(mapped, boundaries)) - field_rank(r, boundaries);
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  if (!(a.ring() == b.ring()) || !(a.grading() == b.grading()))
    throw std::invalid_argument("direct sum of complexes over different rings/gradings");
  const Ring& r = a.ring();
  const GradingGroup& g = a.grading();
  std::map<long, std::vector<std::string>> basis;
  std::map<long, Mat> boundary;
  std::map<long, bool> keys;
  for (long k : a.degrees()) keys[k] = true;
  for (long k : b.degrees()) keys[k] = true;
  for (const auto& [k, unused] : keys) {
    (void)unused;
    std::vector<std::string> labels = a.basis(k);
    for (const auto& name : b.basis(k)) labels.push_back(name);
    basis[k] = std::move(labels);
    long km1 = g.reduce(k - 1);
    size_t na = static_cast<size_t>(a.dim(k)), nb = static_cast<size_t>(b.dim(k));
    size_t ma = static_cast<size_t>(a.dim(km1)), mb = static_cast<size_t>(b.dim(km1));
    if (na + nb == 0 || ma + mb == 0) continue;
    Mat m(ma + mb, na + nb);
    Mat da = a.boundary(k), db = b.boundary(k);
    for (size_t i = 0; i < ma; ++i)
      for (size_t j = 0; j < na; ++j) m.at(i, j) = da.at(i, j);
    for (size_t i = 0; i < mb; ++i)
      for (size_t j = 0; j < nb; ++j) m.at(ma + i, na + j) = db.at(i, j);
    boundary[k] = std::move(m);
  }
  return ChainComplex(r, g, std::move(basis), std::move(boundary));
}

ChainComplex shift(const ChainComplex& c, long s) {
  const GradingGroup& g = c.grading();
  std::map<long, std::vector<std::string>> basis;
  std::map<long, Mat> boundary;
  for (long k : c.degrees()) basis[g.reduce(k + s)] = c.basis(k);
  for (long k : c.degrees()) {
    Mat m = c.boundary(k);
    if (m.rows() > 0 && m.cols() > 0) boundary[g.reduce(k + s)] = std::move(m);
  }
  return ChainComplex(c.ring(), g, std::move(basis), std::move(boundary));
}

}  // namespace lch
