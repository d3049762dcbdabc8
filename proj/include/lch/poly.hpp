// Free unital noncommutative polynomials: finite sums of words in the
// generators of an ordered table, with exact ring coefficients.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lch/grading.hpp"
#include "lch/ring.hpp"

namespace lch {

// A word is a sequence of generator indices; the empty word is the unit 1.
using Word = std::vector<int>;

struct GeneratorInfo {
  std::string name;
  Degree degree;
  std::optional<mpq_class> action;  // Reeb chord length, when supplied
};

class GeneratorTable {
 public:
  int add(const std::string& name, Degree degree, std::optional<mpq_class> action = {});
  int index_of(const std::string& name) const;  // -1 when absent
  const GeneratorInfo& info(int i) const { return gens_.at(static_cast<size_t>(i)); }
  size_t size() const { return gens_.size(); }
  const std::vector<GeneratorInfo>& all() const { return gens_; }

  bool operator==(const GeneratorTable& o) const { return gens_ == o.gens_; }

 private:
  std::vector<GeneratorInfo> gens_;
  std::map<std::string, int> by_name_;
};

inline bool operator==(const GeneratorInfo& a, const GeneratorInfo& b) {
  return a.name == b.name && a.degree == b.degree && a.action == b.action;
}

// Normalized: no zero coefficients, words deduplicated, deterministic
// (lexicographic) term order. Not required to be degree homogeneous.
class NoncommPoly {
 public:
  NoncommPoly() = default;

  static NoncommPoly unit(const Ring& r) { return single(r, Word{}, r.one()); }
  static NoncommPoly generator(const Ring& r, int index) {
    return single(r, Word{index}, r.one());
  }
  static NoncommPoly single(const Ring& r, const Word& w, const Elem& c);

  void add_term(const Ring& r, const Word& w, const Elem& c);
  const std::map<Word, Elem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NoncommPoly plus(const Ring& r, const NoncommPoly& o) const;
  NoncommPoly times(const Ring& r, const NoncommPoly& o) const;  // concatenation
  NoncommPoly scaled(const Ring& r, const Elem& c) const;
  NoncommPoly negated(const Ring& r) const { return scaled(r, r.from_int(-1)); }

  // Splits into word-length components; component(0) is the constant term.
  std::map<long, NoncommPoly> length_components() const;
  // Constant term (coefficient of the empty word), zero if absent.
  Elem constant_term(const Ring& r) const;

  bool operator==(const NoncommPoly&) const = default;

 private:
  std::map<Word, Elem> terms_;
};

// Sum of the letter degrees, reduced in the grading group.
long word_degree(const GeneratorTable& t, const GradingGroup& g, const Word& w);
// Raw (unreduced) integer sum of letter degrees as stored.
long word_degree_raw(const GeneratorTable& t, const Word& w);

std::string word_to_string(const GeneratorTable& t, const Word& w);
std::string poly_to_string(const Ring& r, const GeneratorTable& t, const NoncommPoly& p);

}  // namespace lch
