#include "pairwalls/ratpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pairwalls {

RatPoly::RatPoly(Rat constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

RatPoly::RatPoly(i64 constant) : RatPoly(Rat(constant)) {}

RatPoly RatPoly::variable() {
  RatPoly p;
  p.coeffs_ = {Rat(0), Rat(1)};
  return p;
}

RatPoly RatPoly::from_coeffs(std::vector<Rat> asc) {
  RatPoly p;
  p.coeffs_ = std::move(asc);
  p.normalize();
  return p;
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rat RatPoly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return from_coeffs(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
  std::vector<Rat> c = coeffs_;
  for (auto& q : c) q = -q;
  return from_coeffs(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return from_coeffs(std::move(c));
}

RatPoly RatPoly::scaled(const Rat& q) const {
  std::vector<Rat> c = coeffs_;
  for (auto& x : c) x *= q;
  return from_coeffs(std::move(c));
}

Rat RatPoly::eval(const Rat& t0) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
  return acc;
}

RatPoly RatPoly::shift(i64 k) const {
  if (k == 0 || is_zero()) return *this;
  // c'_j = sum_{i>=j} c_i * binom(i, j) * k^(i-j)
  const int n = degree();
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  for (int j = 0; j <= n; ++j) {
    Rat acc(0);
    Rat kpow(1);
    for (int i = j; i <= n; ++i) {
      acc += coeffs_[static_cast<size_t>(i)] * Rat(binomial(Int(i), static_cast<unsigned>(j))) * kpow;
      kpow *= Rat(k);
    }
    c[static_cast<size_t>(j)] = acc;
  }
  return from_coeffs(std::move(c));
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rat q = coeff(i);
    if (q == 0) continue;
    if (!out.empty()) out += (q > 0) ? "+" : "-";
    else if (q < 0) out += "-";
    Rat a = abs(q);
    if (i == 0) {
      out += rat_str(a);
    } else {
      if (a != 1) out += rat_str(a) + "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Ord lex_cmp(const RatPoly& a, const RatPoly& b) {
  Rat lead = (a - b).leading();
  if (lead == 0) return Ord::equal;
  return lead > 0 ? Ord::greater : Ord::less;
}

bool lex_less(const RatPoly& a, const RatPoly& b) { return lex_cmp(a, b) == Ord::less; }

bool lex_positive(const RatPoly& p) { return lex_cmp(RatPoly(), p) == Ord::less; }

namespace {

// One term of the textual form: [sign][coef][*][t[^e]]
struct Term {
  Rat coef;
  int exp;
};

Term parse_term(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty polynomial term");
  size_t pos = s.find('t');
  if (pos == std::string::npos) return {parse_rat(s), 0};
  std::string coef = s.substr(0, pos);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  Rat q = coef.empty() ? Rat(1) : (coef == "-" ? Rat(-1) : parse_rat(coef));
  int exp = 1;
  std::string rest = s.substr(pos + 1);
  if (!rest.empty()) {
    if (rest[0] != '^') throw std::invalid_argument("bad term: " + s);
    exp = std::stoi(rest.substr(1));
    if (exp < 0) throw std::invalid_argument("negative exponent in: " + s);
  }
  return {q, exp};
}

}  // namespace

RatPoly parse_poly(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty polynomial literal");
  std::vector<Rat> coeffs;
  size_t i = 0;
  while (i < t.size()) {
    size_t j = i + 1;  // keep a leading sign with its term
    while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
    Term term = parse_term(t.substr(i, j - i));
    if (term.exp >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(term.exp) + 1, Rat(0));
    coeffs[static_cast<size_t>(term.exp)] += term.coef;
    i = j;
    if (i < t.size() && t[i] == '+') ++i;  // '-' stays as the next term's sign
  }
  return RatPoly::from_coeffs(std::move(coeffs));
}

}  // namespace pairwalls
