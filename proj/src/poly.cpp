#include "lch/poly.hpp"

#include <stdexcept>

namespace lch {

int GeneratorTable::add(const std::string& name, Degree degree,
                        std::optional<mpq_class> action) {
  if (name.empty()) throw std::invalid_argument("generator name must be nonempty");
  if (by_name_.count(name)) throw std::invalid_argument("duplicate generator '" + name + "'");
  if (action && *action <= 0)
    throw std::invalid_argument("action of '" + name + "' must be positive");
  int idx = static_cast<int>(gens_.size());
  gens_.push_back(GeneratorInfo{name, degree, std::move(action)});
  by_name_[name] = idx;
  return idx;
}

int GeneratorTable::index_of(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

NoncommPoly NoncommPoly::single(const Ring& r, const Word& w, const Elem& c) {
  NoncommPoly p;
  p.add_term(r, w, c);
  return p;
}

void NoncommPoly::add_term(const Ring& r, const Word& w, const Elem& c) {
  Elem v = r.normalize(c);
  if (r.is_zero(v)) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, v);
    return;
  }
  it->second = r.add(it->second, v);
  if (r.is_zero(it->second)) terms_.erase(it);
}

NoncommPoly NoncommPoly::plus(const Ring& r, const NoncommPoly& o) const {
  NoncommPoly out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(r, w, c);
  return out;
}

NoncommPoly NoncommPoly::times(const Ring& r, const NoncommPoly& o) const {
  NoncommPoly out;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      out.add_term(r, w, r.mul(c1, c2));
    }
  return out;
}

NoncommPoly NoncommPoly::scaled(const Ring& r, const Elem& c) const {
  NoncommPoly out;
  for (const auto& [w, v] : terms_) out.add_term(r, w, r.mul(v, c));
  return out;
}

std::map<long, NoncommPoly> NoncommPoly::length_components() const {
  std::map<long, NoncommPoly> out;
  for (const auto& [w, c] : terms_) out[static_cast<long>(w.size())].terms_[w] = c;
  return out;
}

Elem NoncommPoly::constant_term(const Ring& r) const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? r.zero() : it->second;
}

long word_degree(const GeneratorTable& t, const GradingGroup& g, const Word& w) {
  return g.reduce(word_degree_raw(t, w));
}

long word_degree_raw(const GeneratorTable& t, const Word& w) {
  long d = 0;
  for (int i : w) d += t.info(i).degree.value;
  return d;
}

std::string word_to_string(const GeneratorTable& t, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += t.info(w[i]).name;
  }
  return s;
}

std::string poly_to_string(const Ring& r, const GeneratorTable& t, const NoncommPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    if (w.empty()) {
      s += r.str(c);
    } else if (r.is_one(c)) {
      s += word_to_string(t, w);
    } else {
      s += r.str(c) + "*" + word_to_string(t, w);
    }
  }
  return s;
}

}  // namespace lch
