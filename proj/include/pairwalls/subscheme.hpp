#pragma once

#include <string>

#include "pairwalls/ratpoly.hpp"

namespace pairwalls {

/// Numerical description of a subscheme of P^3 of dimension <= 1.
/// dim: -1 empty, 0 points, 1 curve (possibly with embedded/isolated points).
struct SchemeClass {
  int dim = -1;
  i64 degree = 0;        // 0 unless dim == 1
  i64 euler = 0;         // chi(O_Z); equals the length when dim == 0
  bool planar_pure = false;  // pure 1-dimensional part lies in a plane
  i64 points = 0;        // length of the maximal 0-dimensional subscheme, when decomposed

  static SchemeClass empty();
  static SchemeClass points_of(i64 n);
  /// Curve of degree d with chi(O_C(t)) = d t + chi. When planar, the point
  /// count of the maximal 0-dimensional subscheme is chi - min_euler(d).
  static SchemeClass curve(i64 d, i64 chi, bool planar);

  RatPoly hilbert() const;  // d*t + chi, or the length, or 0
  bool operator==(const SchemeClass& o) const = default;
  std::string str() const;
};

/// Euler characteristic of a plane curve of degree d: 1 - binom(d-1, 2);
/// the minimum over all 1-dimensional schemes of that degree.
i64 min_euler(i64 d);

/// Numerical realizability: empty iff degree = euler = 0; dim 0 needs euler >= 1;
/// dim 1 needs degree >= 1 and euler >= min_euler(degree).
bool realizable(const SchemeClass& c);

struct PlanarSplit {
  i64 degree;      // pure planar part
  i64 pure_euler;  // = min_euler(degree)
  i64 points;      // leftover 0-dimensional length
};

/// Splits a linear Hilbert polynomial d*t + chi into the chi-minimal planar
/// decomposition (plane curve of degree d) + points. Throws for non-linear or
/// unrealizable input.
PlanarSplit split_planar(const RatPoly& p);

/// Dimension of the relative Hilbert scheme of (degree-d planar curve + n
/// points in the moving plane) over the dual P^3: 3 + (binom(d+2,2) - 1) + 2n.
i64 planar_relhilb_dim(i64 d, i64 n);

/// Dimension of the Hilbert-scheme locus of schemes of the given numerical
/// type with unconstrained supports (points roam P^3; a line does not fix its
/// plane). Used for the section-free side of a wall decomposition.
i64 stratum_dim(const SchemeClass& c);

/// Input for the stratum classifier: a planar curve of degree d with
/// in-plane Euler characteristic chi, plus points off the plane. For a
/// non-planar pure curve set nonplanar and give its total degree/euler.
struct CurveDesc {
  i64 planar_degree = 0;
  i64 planar_euler = 0;
  i64 off_plane_points = 0;
  bool nonplanar = false;

  RatPoly total_hilbert() const;
  bool operator==(const CurveDesc& o) const = default;
};

struct StratumLabel {
  enum class Kind { Stratum, OutsideFamily };
  Kind kind = Kind::Stratum;
  i64 index = 0;  // meaningful for Kind::Stratum, 0 <= index <= l
  std::string str() const;
  bool operator==(const StratumLabel& o) const = default;
};

/// Places a curve in the stratification Z_0..Z_l of the planar-family locus.
/// Non-planar pure part => outside the family (survives the 0-dimensional
/// walls). Throws if the total Hilbert polynomial mismatches or the off-plane
/// point count exceeds l.
StratumLabel classify_stratum(const CurveDesc& y, const RatPoly& curve_poly, i64 l);

}  // namespace pairwalls
