#include "pairwalls/cohom.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace pairwalls {

StdSheaf StdSheaf::line_bundle(i64 a) { return {Kind::LineBundle, a, 0, 0, {}}; }
StdSheaf StdSheaf::plane(i64 a) { return {Kind::Plane, a, 0, 0, {}}; }
StdSheaf StdSheaf::line(i64 a) { return {Kind::Line, a, 0, 0, {}}; }

StdSheaf StdSheaf::planar_curve(i64 d, i64 a) {
  if (d < 1) throw std::invalid_argument("planar curve needs degree >= 1");
  return {Kind::PlanarCurve, a, d, 0, {}};
}

StdSheaf StdSheaf::points(i64 n) {
  if (n < 0) throw std::invalid_argument("negative length");
  return {Kind::Points, 0, 0, n, {}};
}

StdSheaf StdSheaf::ideal_of(SchemeClass z, i64 a) {
  if (!realizable(z)) throw std::invalid_argument("ideal of an unrealizable scheme");
  if (z.dim == 1 && !z.planar_pure)
    throw std::invalid_argument("ideal cohomology supported for planar-with-points schemes only");
  return {Kind::Ideal, a, 0, 0, z};
}

StdSheaf StdSheaf::twisted(i64 extra) const {
  StdSheaf f = *this;
  if (kind != Kind::Points) f.a += extra;
  return f;
}

std::string StdSheaf::str() const {
  switch (kind) {
    case Kind::LineBundle: return "O(" + std::to_string(a) + ")";
    case Kind::Plane: return "O_H(" + std::to_string(a) + ")";
    case Kind::Line: return "O_L(" + std::to_string(a) + ")";
    case Kind::PlanarCurve: return "O_C" + std::to_string(d) + "(" + std::to_string(a) + ")";
    case Kind::Points: return "O_Z, |Z|=" + std::to_string(n);
    case Kind::Ideal: return "I[" + z.str() + "](" + std::to_string(a) + ")";
  }
  return "?";
}

namespace {

Hdims h_line_bundle(i64 a) {
  Hdims r;
  if (a >= 0) r.h0 = binomial_i64(a + 3, 3);
  if (a <= -4) r.h3 = binomial_i64(-a - 1, 3);
  return r;
}

Hdims h_plane(i64 a) {
  Hdims r;
  if (a >= 0) r.h0 = binomial_i64(a + 2, 2);
  if (a <= -3) r.h2 = binomial_i64(-a - 1, 2);
  return r;
}

Hdims h_line(i64 a) {
  Hdims r;
  if (a >= 0) r.h0 = a + 1;
  if (a <= -2) r.h1 = -a - 1;
  return r;
}

// 0 -> O_H(a-d) -> O_H(a) -> O_C(a) -> 0
Hdims h_planar_curve(i64 d, i64 a) {
  Hdims r;
  r.h0 = h_plane(a).h0 - h_plane(a - d).h0;
  r.h1 = h_plane(a - d).h2 - h_plane(a).h2;
  return r;
}

// 0 -> I_Z(a) -> O(a) -> O_Z(a) -> 0 with general-position points. The pure
// planar part is arithmetically Cohen-Macaulay, so its ideal has no middle
// cohomology; only the points can fail to impose independent conditions.
Hdims h_ideal(const SchemeClass& z, i64 a) {
  Hdims amb = h_line_bundle(a);
  Hdims r;
  i64 h0_curve_ideal = amb.h0;
  if (z.dim == 1) {
    Hdims curve = h_planar_curve(z.degree, a);
    h0_curve_ideal = amb.h0 - curve.h0;
    r.h2 = curve.h1;
  } else if (z.dim == 0) {
    r.h2 = 0;
  }
  i64 pts = (z.dim == 1) ? z.points : z.euler;
  r.h0 = std::max<i64>(0, h0_curve_ideal - pts);
  r.h1 = std::max<i64>(0, pts - h0_curve_ideal);
  r.h3 = amb.h3;
  return r;
}

}  // namespace

Hdims h(const StdSheaf& f) {
  switch (f.kind) {
    case StdSheaf::Kind::LineBundle: return h_line_bundle(f.a);
    case StdSheaf::Kind::Plane: return h_plane(f.a);
    case StdSheaf::Kind::Line: return h_line(f.a);
    case StdSheaf::Kind::PlanarCurve: return h_planar_curve(f.d, f.a);
    case StdSheaf::Kind::Points: {
      Hdims r;
      r.h0 = f.n;
      return r;
    }
    case StdSheaf::Kind::Ideal: return h_ideal(f.z, f.a);
  }
  throw std::logic_error("unreachable sheaf kind");
}

NumClass chern_character(const StdSheaf& f) {
  switch (f.kind) {
    case StdSheaf::Kind::LineBundle: return NumClass::line_bundle(f.a);
    case StdSheaf::Kind::Plane: return NumClass::plane_sheaf(f.a);
    case StdSheaf::Kind::Line: return NumClass::line_sheaf(f.a);
    case StdSheaf::Kind::PlanarCurve:
      return NumClass::one_dim_sheaf(f.d, min_euler(f.d)).twist(f.a);
    case StdSheaf::Kind::Points: return NumClass::points_sheaf(f.n);
    case StdSheaf::Kind::Ideal: {
      i64 d = (f.z.dim == 1) ? f.z.degree : 0;
      i64 chi = f.z.euler;
      return NumClass::ideal_sheaf(d, chi, f.a);
    }
  }
  throw std::logic_error("unreachable sheaf kind");
}

std::string incidence_str(Incidence c) {
  switch (c) {
    case Incidence::Disjoint: return "disjoint";
    case Incidence::PointOnPureCurve: return "point on curve";
    case Incidence::PointEqualsEmbedded: return "point = embedded point";
    case Incidence::PointEqualsEmbeddedOnCurve: return "point = embedded point on curve";
    case Incidence::EmbeddedOffPlane: return "embedded point off the plane";
  }
  return "?";
}

i64 ext_plus(const SchemeClass& a, i64 l, Incidence) {
  if (l < 1) throw std::invalid_argument("ext_plus needs twist l >= 1");
  if (a.dim != 1 || !realizable(a)) throw std::invalid_argument("ext_plus needs a realizable curve");
  // the value only sees the pure part; configuration and points drop out
  return (l + 2) * (l + 1) / 2 + h(StdSheaf::planar_curve(a.degree, -3 - l)).h1;
}

namespace {

struct MinusKey {
  i64 pts_a;
  i64 len_p;
  Incidence cfg;
  bool operator<(const MinusKey& o) const {
    return std::tie(pts_a, len_p, cfg) < std::tie(o.pts_a, o.len_p, o.cfg);
  }
};

const std::map<MinusKey, i64>& minus_table() {
  static const std::map<MinusKey, i64> table = {
      {{0, 1, Incidence::PointOnPureCurve}, 1},
      {{1, 1, Incidence::PointEqualsEmbedded}, 3},
      {{1, 1, Incidence::PointOnPureCurve}, 1},
      {{1, 1, Incidence::PointEqualsEmbeddedOnCurve}, 6},
      {{0, 2, Incidence::PointOnPureCurve}, 1},
      {{0, 2, Incidence::EmbeddedOffPlane}, 2},
  };
  return table;
}

}  // namespace

i64 ext_minus(const SchemeClass& a, const SchemeClass& p, i64 l, Incidence cfg) {
  if (l < 1) throw std::invalid_argument("ext_minus needs twist l >= 1");
  if (a.dim != 1) throw std::invalid_argument("ext_minus needs a 1-dimensional sub-scheme");
  if (p.dim > 0) throw std::invalid_argument("ext_minus needs a 0-dimensional (or empty) quotient");
  if (cfg == Incidence::Disjoint || p.dim < 0) return a.points;
  auto it = minus_table().find({a.points, p.euler, cfg});
  if (it == minus_table().end())
    throw std::domain_error("no formula for ext_minus with A=" + a.str() + ", P=" + p.str() + ", " +
                            incidence_str(cfg));
  return it->second;
}

std::vector<std::pair<Incidence, i64>> ext_minus_cases(const SchemeClass& a, const SchemeClass& p, i64 l) {
  std::vector<std::pair<Incidence, i64>> out;
  out.emplace_back(Incidence::Disjoint, ext_minus(a, p, l, Incidence::Disjoint));
  if (p.dim == 0) {
    for (auto cfg : {Incidence::PointEqualsEmbedded, Incidence::PointOnPureCurve,
                     Incidence::PointEqualsEmbeddedOnCurve, Incidence::EmbeddedOffPlane}) {
      auto it = minus_table().find({a.points, p.euler, cfg});
      if (it != minus_table().end()) out.emplace_back(cfg, it->second);
    }
  }
  return out;
}

i64 hilbert_fiber_dim(const std::vector<StdSheaf>& parts, i64 m) {
  i64 total = 0;
  for (const auto& part : parts) {
    switch (part.kind) {
      case StdSheaf::Kind::PlanarCurve:
      case StdSheaf::Kind::Line:
      case StdSheaf::Kind::Points:
        total += h(part.twisted(m)).h1;
        break;
      default:
        throw std::invalid_argument("unsupported curve component: " + part.str());
    }
  }
  return total;
}

i64 hilbert_fiber_dim_cm(const RatPoly& curve_hilb, i64 m) {
  if (m >= 0) throw std::invalid_argument("CM fiber dimension needs a negative twist");
  Rat chi = curve_hilb.eval(Rat(m));
  if (!is_integer(chi) || chi > 0)
    throw std::invalid_argument("not a valid CM curve twist: chi = " + rat_str(chi));
  return static_cast<i64>(-to_integer(chi));
}

PairExtPair ext_group1_pair(const SchemeClass& sub, const SchemeClass& quot) {
  // conic sub over line quot: h^0(I_L(1)) + ext^1(I_C(1), I_L(1)) = 2 + 7,
  // and 3 in the reverse direction
  if (sub.dim == 1 && sub.degree == 2 && sub.points == 0 && quot.dim == 1 && quot.degree == 1 &&
      quot.points == 0)
    return {9, 3};
  throw std::domain_error("no wall-fiber table for sub=" + sub.str() + ", quot=" + quot.str());
}

i64 points_in_plane_h1(i64 n, i64 m) {
  if (n < 0) throw std::invalid_argument("negative length");
  return std::max<i64>(0, n - binomial_i64(m + 2, 2));
}

bool family_wall_saturated(i64 pts_on_plane, i64 pure_degree, i64 k, i64 c1) {
  return points_in_plane_h1(pts_on_plane, pure_degree + 2 * k - 1 + c1) == 0;
}

}  // namespace pairwalls
