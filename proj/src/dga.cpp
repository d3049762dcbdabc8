#include "lch/dga.hpp"

#include <stdexcept>

namespace lch {

Dga::Dga(Ring ring, GradingGroup grading, GeneratorTable generators,
         std::map<int, NoncommPoly> differential, std::optional<long> ambient_dim)
    : ring_(std::move(ring)),
      grading_(grading),
      gens_(std::move(generators)),
      ambient_dim_(ambient_dim) {
  if (!ring_.is_z2() && !grading_.parity_well_defined())
    throw std::invalid_argument(
        "ring " + ring_.name() +
        " needs the Koszul sign (-1)^deg, which is ill-defined for a cyclic "
        "grading of odd order; use Z2 coefficients or an even/Z grading");
  for (const auto& g : gens_.all())
    if (g.degree.value != grading_.reduce(g.degree.value))
      throw std::invalid_argument("unreduced degree on generator '" + g.name + "'");
  diff_.assign(gens_.size(), NoncommPoly{});
  for (auto& [idx, dq] : differential) {
    if (idx < 0 || static_cast<size_t>(idx) >= gens_.size())
      throw std::invalid_argument("differential given for unknown generator index");
    for (const auto& [w, c] : dq.terms())
      for (int letter : w)
        if (letter < 0 || static_cast<size_t>(letter) >= gens_.size())
          throw std::invalid_argument("unknown generator in differential of '" +
                                      gens_.info(idx).name + "'");
    diff_[static_cast<size_t>(idx)] = std::move(dq);
  }
}

NoncommPoly Dga::apply_differential(const NoncommPoly& p) const {
  NoncommPoly out;
  for (const auto& [w, c] : p.terms()) {
    for (int letter : w)
      if (letter < 0 || static_cast<size_t>(letter) >= gens_.size())
        throw std::invalid_argument("unknown generator in polynomial");
    long prefix_deg = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      const NoncommPoly& dl = diff_[static_cast<size_t>(w[i])];
      if (!dl.is_zero()) {
        // (-1)^{deg of prefix}; any integer lift works since the grading
        // has even order (or is Z) whenever signs matter.
        Elem sign = (prefix_deg % 2 == 0) ? ring_.one() : ring_.from_int(-1);
        Elem coeff = ring_.mul(c, sign);
        Word prefix(w.begin(), w.begin() + static_cast<long>(i));
        Word suffix(w.begin() + static_cast<long>(i) + 1, w.end());
        for (const auto& [dw, dc] : dl.terms()) {
          Word full = prefix;
          full.insert(full.end(), dw.begin(), dw.end());
          full.insert(full.end(), suffix.begin(), suffix.end());
          out.add_term(ring_, full, ring_.mul(coeff, dc));
        }
      }
      prefix_deg += gens_.info(w[i]).degree.value;
    }
  }
  return out;
}

ValidityReport Dga::validate() const {
  ValidityReport rep;
  for (size_t i = 0; i < gens_.size(); ++i) {
    long expected = grading_.reduce(gens_.info(static_cast<int>(i)).degree.value - 1);
    for (const auto& [w, c] : diff_[i].terms()) {
      long actual = word_degree(gens_, grading_, w);
      if (actual != expected)
        rep.degree_violations.push_back(
            DegreeViolation{static_cast<int>(i), w, expected, actual});
    }
    NoncommPoly dd = apply_differential(diff_[i]);
    if (!dd.is_zero()) rep.d_squared.emplace_back(static_cast<int>(i), dd);
  }
  return rep;
}

bool Dga::is_good() const {
  for (const auto& dq : diff_)
    if (!ring_.is_zero(dq.constant_term(ring_))) return false;
  return true;
}

ActionReport Dga::action_check() const {
  for (const auto& g : gens_.all())
    if (!g.action)
      throw std::invalid_argument("generator '" + g.name + "' has no action data");
  ActionReport rep;
  for (size_t i = 0; i < gens_.size(); ++i) {
    const mpq_class la = *gens_.info(static_cast<int>(i)).action;
    for (const auto& [w, c] : diff_[i].terms()) {
      mpq_class lw = 0;
      for (int letter : w) lw += *gens_.info(letter).action;
      if (!(la > lw))
        rep.violations.push_back(ActionViolation{static_cast<int>(i), w, la, lw});
    }
  }
  return rep;
}

bool Dga::operator==(const Dga& o) const {
  return ring_ == o.ring_ && grading_ == o.grading_ && gens_ == o.gens_ &&
         diff_ == o.diff_ && ambient_dim_ == o.ambient_dim_;
}

std::string report_to_string(const Dga& dga, const ValidityReport& report) {
  if (report.valid()) return "valid";
  std::string s;
  for (const auto& v : report.degree_violations)
    s += "degree violation at d " + dga.generators().info(v.generator).name + ": term " +
         word_to_string(dga.generators(), v.word) + " has degree " +
         std::to_string(v.actual) + ", expected " + std::to_string(v.expected) + "\n";
  for (const auto& [i, dd] : report.d_squared)
    s += "d^2 " + dga.generators().info(i).name + " = " +
         poly_to_string(dga.ring(), dga.generators(), dd) + "\n";
  return s;
}

}  // namespace lch
