#pragma once

#include <map>
#include <string>
#include <vector>

#include "pairwalls/numclass.hpp"
#include "pairwalls/subscheme.hpp"

namespace pairwalls {

struct Hdims {
  i64 h0 = 0, h1 = 0, h2 = 0, h3 = 0;
  i64 alternating_sum() const { return h0 - h1 + h2 - h3; }
};

/// The standard sheaf family on P^3 with closed-form cohomology.
struct StdSheaf {
  enum class Kind { LineBundle, Plane, Line, PlanarCurve, Points, Ideal };
  Kind kind;
  i64 a = 0;       // twist
  i64 d = 0;       // degree for PlanarCurve
  i64 n = 0;       // length for Points
  SchemeClass z{}; // subscheme for Ideal

  static StdSheaf line_bundle(i64 a);        // O(a)
  static StdSheaf plane(i64 a);              // O_H(a)
  static StdSheaf line(i64 a);               // O_L(a)
  static StdSheaf planar_curve(i64 d, i64 a);// O_C(a), C a plane curve of degree d
  static StdSheaf points(i64 n);             // O_Z, |Z| = n
  static StdSheaf ideal_of(SchemeClass z, i64 a);  // I_Z(a), Z planar-with-points or points

  StdSheaf twisted(i64 extra) const;
  std::string str() const;
};

/// Cohomology dimensions. Points in ideal-sheaf composites are taken in
/// general position (maximal-rank restriction maps).
Hdims h(const StdSheaf& f);

/// Chern character of the same sheaf, for HRR cross-checks.
NumClass chern_character(const StdSheaf& f);

/// Incidence configuration between the 0-dimensional quotient scheme and the
/// planar sub-curve at a wall in the 0-dimensional family.
enum class Incidence {
  Disjoint,
  PointOnPureCurve,
  PointEqualsEmbedded,
  PointEqualsEmbeddedOnCurve,
  EmbeddedOffPlane,
};

std::string incidence_str(Incidence c);

/// Pair-extension dimension ext^1((I_A(1),1), (I_P(l),0)) for planar A and
/// 0-dimensional P: (l+2)(l+1)/2 + h^1(O_{A''}(-3-l)), A'' the pure part.
/// Independent of the incidence configuration. Requires l >= 1, deg A >= 1.
i64 ext_plus(const SchemeClass& a, i64 l, Incidence cfg = Incidence::Disjoint);

/// Pair-extension dimension ext^1((I_P(l),0), (I_A(1),1)). Disjoint supports
/// give the length of the maximal 0-dimensional subscheme of A; the
/// non-disjoint cases come from fixed case tables keyed on
/// (points of A, length of P, configuration). Throws std::domain_error
/// ("no formula") outside the tables.
i64 ext_minus(const SchemeClass& a, const SchemeClass& p, i64 l, Incidence cfg);

/// All configurations with a formula for this (A, P) shape, disjoint first.
std::vector<std::pair<Incidence, i64>> ext_minus_cases(const SchemeClass& a, const SchemeClass& p, i64 l);

/// h^1(O_Y(m)) for Y a disjoint-support union of the listed pieces
/// (planar curves, lines, points; give the pieces untwisted).
i64 hilbert_fiber_dim(const std::vector<StdSheaf>& parts, i64 m);

/// Same for an irreducible non-planar (CM) curve with Hilbert polynomial p:
/// h^0(O_Y(m)) = 0 for m < 0, so h^1 = -p(m). Requires m < 0 and p(m) <= 0.
i64 hilbert_fiber_dim_cm(const RatPoly& curve_hilb, i64 m);

struct PairExtPair {
  i64 forward;  // ext^1((I_sub(s),1), (I_quot(s),0))
  i64 reverse;  // ext^1((I_quot(s),0), (I_sub(s),1))
};

/// Wall fibers for group-1 decompositions with a 1-dimensional quotient.
/// Table-backed; currently the conic/line configuration at twist 1.
/// Throws std::domain_error outside the table.
PairExtPair ext_group1_pair(const SchemeClass& sub, const SchemeClass& quot);

/// h^1 of the ideal sheaf of n general points inside a plane, twisted by m:
/// max(0, n - binom(m+2, 2)).
i64 points_in_plane_h1(i64 n, i64 m);

/// Saturation check for a wall in the 0-dimensional family: extensions over
/// the configuration with pts_on_plane quotient points on the sub-curve's
/// plane are saturated iff h^1(I_{P_H|H}(d + 2k - 1 + c1)) = 0.
bool family_wall_saturated(i64 pts_on_plane, i64 pure_degree, i64 k, i64 c1);

}  // namespace pairwalls
