#include "pairwalls/subscheme.hpp"

#include <stdexcept>

namespace pairwalls {

SchemeClass SchemeClass::empty() { return SchemeClass{}; }

SchemeClass SchemeClass::points_of(i64 n) {
  if (n < 1) throw std::invalid_argument("a 0-dimensional scheme has length >= 1");
  SchemeClass c;
  c.dim = 0;
  c.euler = n;
  c.points = n;
  return c;
}

SchemeClass SchemeClass::curve(i64 d, i64 chi, bool planar) {
  if (d < 1) throw std::invalid_argument("a 1-dimensional scheme has degree >= 1");
  SchemeClass c;
  c.dim = 1;
  c.degree = d;
  c.euler = chi;
  c.planar_pure = planar;
  c.points = chi - min_euler(d);  // maximal 0-dimensional part
  return c;
}

RatPoly SchemeClass::hilbert() const {
  if (dim <= 0) return RatPoly(euler);
  return RatPoly::from_coeffs({Rat(euler), Rat(degree)});
}

std::string SchemeClass::str() const {
  if (dim < 0) return "empty";
  if (dim == 0) return std::to_string(euler) + " point" + (euler == 1 ? "" : "s");
  std::string s = "curve d=" + std::to_string(degree) + " chi=" + std::to_string(euler);
  if (planar_pure) s += " (planar";
  if (planar_pure && points > 0) s += " + " + std::to_string(points) + " pt" + (points == 1 ? "" : "s");
  if (planar_pure) s += ")";
  return s;
}

i64 min_euler(i64 d) {
  if (d < 1) throw std::invalid_argument("min_euler needs degree >= 1");
  return 1 - binomial_i64(d - 1, 2);
}

bool realizable(const SchemeClass& c) {
  switch (c.dim) {
    case -1:
      return c.degree == 0 && c.euler == 0;
    case 0:
      return c.degree == 0 && c.euler >= 1;
    case 1:
      return c.degree >= 1 && c.euler >= min_euler(c.degree);
    default:
      return false;
  }
}

PlanarSplit split_planar(const RatPoly& p) {
  if (p.degree() != 1) throw std::invalid_argument("split_planar needs a linear polynomial, got " + p.str());
  if (!is_integer(p.coeff(1)) || !is_integer(p.coeff(0)))
    throw std::invalid_argument("non-integer curve polynomial: " + p.str());
  i64 d = static_cast<i64>(to_integer(p.coeff(1)));
  i64 chi = static_cast<i64>(to_integer(p.coeff(0)));
  if (d < 1) throw std::invalid_argument("split_planar needs positive degree");
  i64 floor = min_euler(d);
  if (chi < floor) throw std::invalid_argument("unrealizable euler characteristic: " + p.str());
  return {d, floor, chi - floor};
}

i64 planar_relhilb_dim(i64 d, i64 n) {
  if (d < 1) throw std::invalid_argument("planar_relhilb_dim needs degree >= 1");
  if (n < 0) throw std::invalid_argument("negative point count");
  return 3 + (binomial_i64(d + 2, 2) - 1) + 2 * n;
}

i64 stratum_dim(const SchemeClass& c) {
  if (c.dim < 0) return 0;
  if (c.dim == 0) return 3 * c.euler;
  i64 pure = (c.degree == 1) ? 4 : 3 + (binomial_i64(c.degree + 2, 2) - 1);
  return pure + 3 * c.points;
}

RatPoly CurveDesc::total_hilbert() const {
  return RatPoly::from_coeffs({Rat(planar_euler + off_plane_points), Rat(planar_degree)});
}

std::string StratumLabel::str() const {
  if (kind == Kind::OutsideFamily) return "outside family (survives)";
  return "Z" + std::to_string(index);
}

StratumLabel classify_stratum(const CurveDesc& y, const RatPoly& curve_poly, i64 l) {
  if (y.total_hilbert() != curve_poly)
    throw std::invalid_argument("curve description has Hilbert polynomial " + y.total_hilbert().str() +
                                ", expected " + curve_poly.str());
  if (y.nonplanar) return {StratumLabel::Kind::OutsideFamily, 0};
  if (y.off_plane_points > l)
    throw std::domain_error("off-plane point count " + std::to_string(y.off_plane_points) +
                            " exceeds the family length " + std::to_string(l));
  return {StratumLabel::Kind::Stratum, y.off_plane_points};
}

}  // namespace pairwalls
