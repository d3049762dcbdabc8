// The free unital graded tensor algebra on Reeb-chord generators together
// with its differential. Degree and square-zero checks are reported as
// data, not thrown, so callers can print diagnostics.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lch/poly.hpp"

namespace lch {

struct DegreeViolation {
  int generator;
  Word word;
  long expected;  // deg(q) - 1, reduced
  long actual;    // word degree, reduced
};

struct ValidityReport {
  std::vector<DegreeViolation> degree_violations;
  std::vector<std::pair<int, NoncommPoly>> d_squared;  // generators with d(dq) != 0
  bool valid() const { return degree_violations.empty() && d_squared.empty(); }
};

struct ActionViolation {
  int generator;
  Word word;
  mpq_class generator_action;
  mpq_class word_action;
};

struct ActionReport {
  std::vector<ActionViolation> violations;
  bool pass() const { return violations.empty(); }
};

class Dga {
 public:
  // differential maps generator index -> dq; generators absent from the map
  // have zero differential. Throws std::invalid_argument on structural
  // problems: bad indices, or a sign convention that is not available
  // (rings other than Z_2 need (-1)^deg, so the grading must be Z or of
  // even order).
  Dga(Ring ring, GradingGroup grading, GeneratorTable generators,
      std::map<int, NoncommPoly> differential, std::optional<long> ambient_dim = {});

  const Ring& ring() const { return ring_; }
  const GradingGroup& grading() const { return grading_; }
  const GeneratorTable& generators() const { return gens_; }
  std::optional<long> ambient_dim() const { return ambient_dim_; }
  const NoncommPoly& differential_of(int i) const { return diff_.at(static_cast<size_t>(i)); }

  // Leibniz extension: d(ab) = (da)b + (-1)^{|a|} a(db), letter by letter.
  NoncommPoly apply_differential(const NoncommPoly& p) const;

  ValidityReport validate() const;
  bool is_good() const;  // no constant terms in any dq
  // Checks l(a) > sum l(b_j) strictly for every word of every da; throws
  // std::invalid_argument when some generator lacks action data.
  ActionReport action_check() const;

  bool operator==(const Dga& o) const;

 private:
  Ring ring_;
  GradingGroup grading_;
  GeneratorTable gens_;
  std::vector<NoncommPoly> diff_;  // indexed by generator
  std::optional<long> ambient_dim_;
};

std::string report_to_string(const Dga& dga, const ValidityReport& report);

}  // namespace lch
