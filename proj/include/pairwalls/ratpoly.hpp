#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pairwalls/rational.hpp"

namespace pairwalls {

/// Polynomial in one variable t with exact rational coefficients.
/// Coefficients are stored ascending by degree with no trailing zeros;
/// the zero polynomial is the empty list. Values are immutable in spirit:
/// every operation returns a fresh polynomial.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(Rat constant);
  explicit RatPoly(i64 constant);

  static RatPoly variable();                          // t
  static RatPoly from_coeffs(std::vector<Rat> asc);   // normalizes trailing zeros

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rat coeff(int i) const;
  Rat leading() const;  // 0 for the zero polynomial
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly scaled(const Rat& q) const;
  bool operator==(const RatPoly& o) const = default;

  Rat eval(const Rat& t0) const;

  /// q with q(t) = p(t+k), exact.
  RatPoly shift(i64 k) const;

  std::string str() const;  // e.g. "1/3*t^3+3*t^2+23/3*t+5", "0"

 private:
  std::vector<Rat> coeffs_;
  void normalize();
};

enum class Ord { less, equal, greater };

/// Lexicographic order on Q[t]: sign of the leading coefficient of a-b.
Ord lex_cmp(const RatPoly& a, const RatPoly& b);
bool lex_less(const RatPoly& a, const RatPoly& b);
bool lex_positive(const RatPoly& p);  // 0 < p

/// Parses the str() format; also accepts terms like "2t" and "-t^2".
RatPoly parse_poly(const std::string& s);

}  // namespace pairwalls
