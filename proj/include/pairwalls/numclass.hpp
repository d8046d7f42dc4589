#pragma once

#include <string>

#include "pairwalls/ratpoly.hpp"

namespace pairwalls {

/// Chern character (ch0, ch1, ch2, ch3) of a sheaf on P^3, in the lattice
/// Z x Z x (1/2)Z x (1/6)Z. H^3 = 1, so degrees are plain rationals.
class NumClass {
 public:
  NumClass() : NumClass(0, 0, 0, 0) {}
  NumClass(Rat ch0, Rat ch1, Rat ch2, Rat ch3);

  static NumClass structure_sheaf();             // O
  static NumClass line_bundle(i64 a);            // O(a)
  static NumClass one_dim_sheaf(i64 d, i64 chi); // structure sheaf of a curve, chi(O_C(t)) = d t + chi
  static NumClass points_sheaf(i64 n);           // n points
  static NumClass ideal_sheaf(i64 d, i64 chi, i64 twist);  // I_C(twist), C as above (d=0: points of length chi)
  static NumClass plane_sheaf(i64 a);            // O_H(a)
  static NumClass line_sheaf(i64 a);             // O_L(a), L a line

  const Rat& ch0() const { return ch0_; }
  const Rat& ch1() const { return ch1_; }
  const Rat& ch2() const { return ch2_; }
  const Rat& ch3() const { return ch3_; }

  i64 rank() const;  // ch0 as an integer
  i64 c1() const;    // ch1 as an integer
  bool normalized() const;  // ch0 > 0 and ch1/ch0 in (-1, 0]

  /// Multiplication by exp(k H): the class of E(k).
  NumClass twist(i64 k) const;

  NumClass operator+(const NumClass& o) const;
  NumClass operator-(const NumClass& o) const;
  bool operator==(const NumClass& o) const = default;

  std::string str() const;  // "ch0,ch1,ch2,ch3"

 private:
  Rat ch0_, ch1_, ch2_, ch3_;
};

/// chi(v(t)) via Hirzebruch-Riemann-Roch on P^3 (Todd coefficients 1, 2, 11/6, 1):
/// P(t) = ch0 t^3/6 + (ch1/2 + ch0) t^2 + (ch2 + 2 ch1 + 11 ch0/6) t + (ch3 + 2 ch2 + 11 ch1/6 + ch0).
RatPoly hilbert_polynomial(const NumClass& v);

/// P_{O(a)}(t) = binom(t+a+3, 3).
RatPoly twisted_structure_hilb(i64 a);

struct ChernClasses {
  i64 rank;
  i64 c1;
  Rat c2, c3;
};

/// Newton relations, ranks 1 and 2 only (throws otherwise).
ChernClasses chern_classes(const NumClass& v);
NumClass class_from_chern(i64 rank, i64 c1, const Rat& c2, const Rat& c3);

/// W_empty = (P_{v_k} - rank * P_O) / (rank - 1); requires rank >= 2.
RatPoly collapsing_wall(const NumClass& v, i64 k);

/// Hilbert polynomial of O_Y for the curve of a saturated pair of class v_k (rank 2):
/// Ptilde(s) = P_O(s) + P_O(s - 2k - c1) - P_{v_k}(s - 2k - c1).
RatPoly curve_polynomial(const NumClass& v, i64 k);

/// True when chi(v(t)) is an integer for every integer t (inspected at four
/// sample twists); sheaf classes always qualify.
bool integral_euler(const NumClass& v);

/// "a,b,c,d" with rational entries.
NumClass parse_class_spec(const std::string& s);
/// "rank:c1,c2,c3".
NumClass parse_chern_spec(const std::string& s);

}  // namespace pairwalls
