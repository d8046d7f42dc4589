#include "pairwalls/rational.hpp"

#include <stdexcept>

namespace pairwalls {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

std::string rat_str(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

bool is_integer(const Rat& q) { return denominator(q) == 1; }

Int to_integer(const Rat& q) {
  if (!is_integer(q)) throw std::invalid_argument("not an integer: " + rat_str(q));
  return numerator(q);
}

Int binomial(const Int& n, unsigned k) {
  if (n < 0 || n < Int(k)) return 0;
  Int num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= n - Int(i);
    den *= Int(i + 1);
  }
  return num / den;
}

i64 binomial_i64(i64 n, unsigned k) {
  return static_cast<i64>(binomial(Int(n), k));
}

}  // namespace pairwalls
