#include "lch/ring.hpp"

namespace lch {

bool is_prime(long m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (long d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

Ring Ring::parse(const std::string& token) {
  if (token == "Z") return integers();
  if (token == "Q") return rationals();
  if (token.size() > 1 && token[0] == 'Z') {
    try {
      size_t pos = 0;
      long m = std::stol(token.substr(1), &pos);
      if (pos == token.size() - 1 && m >= 2) return mod(m);
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("unknown ring '" + token + "' (expected Z, Q, or Z<m>)");
}

Elem Ring::normalize(const Elem& e) const {
  switch (kind_) {
    case Kind::Rationals: {
      Elem r = e;
      r.canonicalize();
      return r;
    }
    case Kind::Integers: {
      if (e.get_den() != 1) throw std::domain_error("non-integer value in Z");
      return e;
    }
    case Kind::Mod: {
      if (e.get_den() != 1) throw std::domain_error("non-integer value in Z_m");
      mpz_class v = e.get_num() % modulus_;
      if (v < 0) v += modulus_;
      return Elem(v);
    }
  }
  throw std::logic_error("unreachable");
}

bool Ring::is_unit(const Elem& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return a != 0;
    case Kind::Integers:
      return a == 1 || a == -1;
    case Kind::Mod: {
      mpz_class g;
      mpz_class v = normalize(a).get_num();
      mpz_class m(modulus_);
      mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Elem Ring::inverse(const Elem& a) const {
  switch (kind_) {
    case Kind::Rationals: {
      if (a == 0) throw std::domain_error("division by zero in Q");
      Elem r = 1 / a;
      r.canonicalize();
      return r;
    }
    case Kind::Integers: {
      if (!is_unit(a)) throw std::domain_error("non-unit in Z has no inverse");
      return a;
    }
    case Kind::Mod: {
      mpz_class v = normalize(a).get_num();
      mpz_class m(modulus_);
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("non-unit in Z_" + std::to_string(modulus_));
      return Elem(inv);
    }
  }
  throw std::logic_error("unreachable");
}

Elem Ring::divide(const Elem& a, const Elem& b) const {
  if (kind_ == Kind::Integers) {
    if (b == 0) throw std::domain_error("division by zero in Z");
    Elem q = a / b;
    q.canonicalize();
    if (q.get_den() != 1) throw std::domain_error("inexact division in Z");
    return q;
  }
  return mul(a, inverse(b));
}

std::string Ring::str(const Elem& a) const {
  return normalize(a).get_str();
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::Mod:
      return "Z" + std::to_string(modulus_);
  }
  return "?";
}

}  // namespace lch
