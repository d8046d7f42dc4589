#include "pairwalls/numclass.hpp"

#include <stdexcept>
#include <vector>

namespace pairwalls {

NumClass::NumClass(Rat ch0, Rat ch1, Rat ch2, Rat ch3)
    : ch0_(std::move(ch0)), ch1_(std::move(ch1)), ch2_(std::move(ch2)), ch3_(std::move(ch3)) {
  if (!is_integer(ch0_) || !is_integer(ch1_) || !is_integer(ch2_ * 2) || !is_integer(ch3_ * 6))
    throw std::invalid_argument("class outside the lattice Z x Z x (1/2)Z x (1/6)Z: " + str());
}

NumClass NumClass::structure_sheaf() { return NumClass(1, 0, 0, 0); }

NumClass NumClass::line_bundle(i64 a) { return structure_sheaf().twist(a); }

NumClass NumClass::one_dim_sheaf(i64 d, i64 chi) { return NumClass(0, 0, d, chi - 2 * d); }

NumClass NumClass::points_sheaf(i64 n) { return NumClass(0, 0, 0, n); }

NumClass NumClass::ideal_sheaf(i64 d, i64 chi, i64 twist) {
  NumClass z = (d == 0) ? points_sheaf(chi) : one_dim_sheaf(d, chi);
  return (structure_sheaf() - z).twist(twist);
}

NumClass NumClass::plane_sheaf(i64 a) {
  return (structure_sheaf() - line_bundle(-1)).twist(a);
}

NumClass NumClass::line_sheaf(i64 a) { return one_dim_sheaf(1, 1).twist(a); }

i64 NumClass::rank() const { return static_cast<i64>(to_integer(ch0_)); }

i64 NumClass::c1() const { return static_cast<i64>(to_integer(ch1_)); }

bool NumClass::normalized() const {
  if (ch0_ <= 0) return false;
  Rat slope = ch1_ / ch0_;
  return slope > -1 && slope <= 0;
}

NumClass NumClass::twist(i64 k) const {
  Rat kk(k);
  return NumClass(ch0_,
                  ch1_ + kk * ch0_,
                  ch2_ + kk * ch1_ + kk * kk / 2 * ch0_,
                  ch3_ + kk * ch2_ + kk * kk / 2 * ch1_ + kk * kk * kk / 6 * ch0_);
}

NumClass NumClass::operator+(const NumClass& o) const {
  return NumClass(ch0_ + o.ch0_, ch1_ + o.ch1_, ch2_ + o.ch2_, ch3_ + o.ch3_);
}

NumClass NumClass::operator-(const NumClass& o) const {
  return NumClass(ch0_ - o.ch0_, ch1_ - o.ch1_, ch2_ - o.ch2_, ch3_ - o.ch3_);
}

std::string NumClass::str() const {
  return rat_str(ch0_) + "," + rat_str(ch1_) + "," + rat_str(ch2_) + "," + rat_str(ch3_);
}

RatPoly hilbert_polynomial(const NumClass& v) {
  return RatPoly::from_coeffs({v.ch3() + 2 * v.ch2() + Rat(11, 6) * v.ch1() + v.ch0(),
                               v.ch2() + 2 * v.ch1() + Rat(11, 6) * v.ch0(),
                               v.ch1() / 2 + v.ch0(),
                               v.ch0() / 6});
}

RatPoly twisted_structure_hilb(i64 a) {
  return hilbert_polynomial(NumClass::line_bundle(a));
}

ChernClasses chern_classes(const NumClass& v) {
  i64 r = v.rank();
  if (r != 1 && r != 2) throw std::invalid_argument("chern_classes supports ranks 1 and 2 only");
  i64 c1 = v.c1();
  Rat c2 = (Rat(c1) * c1 - 2 * v.ch2()) / 2;
  Rat c3 = 2 * v.ch3() - Rat(c1) * c1 * c1 / 3 + Rat(c1) * c2;
  return {r, c1, c2, c3};
}

NumClass class_from_chern(i64 rank, i64 c1, const Rat& c2, const Rat& c3) {
  if (rank != 1 && rank != 2) throw std::invalid_argument("class_from_chern supports ranks 1 and 2 only");
  Rat ch2 = (Rat(c1) * c1 - 2 * c2) / 2;
  Rat ch3 = (Rat(c1) * c1 * c1 - 3 * Rat(c1) * c2 + 3 * c3) / 6;
  return NumClass(rank, c1, ch2, ch3);
}

RatPoly collapsing_wall(const NumClass& v, i64 k) {
  i64 r = v.rank();
  if (r < 2) throw std::invalid_argument("collapsing wall needs rank >= 2");
  RatPoly p = hilbert_polynomial(v.twist(k)) - hilbert_polynomial(NumClass::structure_sheaf()).scaled(Rat(r));
  return p.scaled(Rat(1, r - 1));
}

RatPoly curve_polynomial(const NumClass& v, i64 k) {
  if (v.rank() != 2) throw std::invalid_argument("curve polynomial needs rank 2");
  i64 a = 2 * k + v.c1();
  RatPoly p_o = hilbert_polynomial(NumClass::structure_sheaf());
  return p_o + p_o.shift(-a) - hilbert_polynomial(v.twist(k)).shift(-a);
}

bool integral_euler(const NumClass& v) {
  RatPoly p = hilbert_polynomial(v);
  for (i64 t = 0; t <= 3; ++t)
    if (!is_integer(p.eval(Rat(t)))) return false;
  return true;
}

namespace {

std::vector<Rat> split_rats(const std::string& s, char sep) {
  std::vector<Rat> out;
  size_t i = 0;
  while (i <= s.size()) {
    size_t j = s.find(sep, i);
    if (j == std::string::npos) j = s.size();
    out.push_back(parse_rat(s.substr(i, j - i)));
    i = j + 1;
    if (j == s.size()) break;
  }
  return out;
}

}  // namespace

NumClass parse_class_spec(const std::string& s) {
  auto v = split_rats(s, ',');
  if (v.size() != 4) throw std::invalid_argument("class spec needs 4 entries: " + s);
  return NumClass(v[0], v[1], v[2], v[3]);
}

NumClass parse_chern_spec(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("chern spec is rank:c1,c2,c3");
  Rat rank = parse_rat(s.substr(0, colon));
  auto v = split_rats(s.substr(colon + 1), ',');
  if (v.size() != 3) throw std::invalid_argument("chern spec needs 3 classes: " + s);
  if (!is_integer(rank) || !is_integer(v[0]))
    throw std::invalid_argument("rank and c1 must be integers");
  return class_from_chern(static_cast<i64>(to_integer(rank)), static_cast<i64>(to_integer(v[0])), v[1], v[2]);
}

}  // namespace pairwalls
