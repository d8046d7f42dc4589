#include "pairwalls/walls.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace pairwalls {

namespace {

// d*t + chi (or a constant) as a scheme class; nullopt when unrealizable.
std::optional<SchemeClass> scheme_from_poly(const RatPoly& p, bool planar) {
  if (p.degree() > 1) return std::nullopt;
  if (!is_integer(p.coeff(0)) || !is_integer(p.coeff(1))) return std::nullopt;
  i64 d = static_cast<i64>(to_integer(p.coeff(1)));
  i64 chi = static_cast<i64>(to_integer(p.coeff(0)));
  if (d < 0) return std::nullopt;
  if (d == 0) {
    if (chi == 0) return SchemeClass::empty();
    if (chi < 0) return std::nullopt;
    return SchemeClass::points_of(chi);
  }
  if (chi < min_euler(d)) return std::nullopt;
  return SchemeClass::curve(d, chi, planar);
}

RatPoly wall_delta(const RatPoly& p_vk, const RatPoly& p_o, i64 s, const RatPoly& p_a) {
  // delta = P_{v_k} - 2 (P_O(t+s) - P_A(t+s))
  return p_vk - (p_o.shift(s) - p_a.shift(s)).scaled(Rat(2));
}

bool is_family_record(const WallRecord& w) {
  return w.group == 1 && w.sub_scheme.dim == 1 && w.sub_scheme.planar_pure && w.quot_scheme.dim <= 0;
}

}  // namespace

std::vector<WallRecord> enumerate_walls(const NumClass& v, i64 k, std::optional<i64> max_group) {
  if (v.rank() != 2) throw std::invalid_argument("wall enumeration needs a rank-2 class");
  if (!integral_euler(v))
    throw std::invalid_argument("class has non-integral Euler characteristics: " + v.str());
  const i64 c1 = v.c1();
  const RatPoly p_vk = hilbert_polynomial(v.twist(k));
  const RatPoly p_o = hilbert_polynomial(NumClass::structure_sheaf());
  const RatPoly w_empty = collapsing_wall(v, k);
  if (!lex_positive(w_empty))
    throw std::invalid_argument("collapsing wall is not positive for twist k=" + std::to_string(k));

  const i64 s_max = max_group.value_or(k);
  std::vector<WallRecord> out;

  for (i64 s = 0; s <= s_max; ++s) {
    const i64 b = 2 * k + c1 - s;
    // P_A(t+s) + P_B(t+b) = P_O(t+s) + P_O(t+b) - P_{v_k}(t), linear in t
    const RatPoly budget = p_o.shift(s) + p_o.shift(b) - p_vk;
    if (budget.degree() > 1) throw std::logic_error("wall budget is not linear");

    auto emit = [&](i64 d_a, i64 chi_a) {
      RatPoly p_a = (d_a == 0 && chi_a == 0) ? RatPoly()
                                             : RatPoly::from_coeffs({Rat(chi_a), Rat(d_a)});
      auto a = scheme_from_poly(p_a, s == 1);
      if (!a) return;
      RatPoly p_b_shifted = budget - p_a.shift(s);      // = P_B(t+b)
      RatPoly p_b = p_b_shifted.shift(-b);
      auto bs = scheme_from_poly(p_b, false);
      RatPoly delta = wall_delta(p_vk, p_o, s, p_a);
      if (!lex_positive(delta)) return;
      Ord vs_empty = lex_cmp(delta, w_empty);
      if (vs_empty == Ord::greater) return;
      WallRecord w;
      w.delta = std::move(delta);
      w.group = s;
      w.sub_twist = s;
      w.quot_twist = b;
      w.sub_scheme = *a;
      if (bs) {
        w.quot_scheme = *bs;
      } else {
        if (s == 0) {  // keep the collapsing record even for an odd quotient budget
          w.quot_scheme.dim = (p_b.degree() == 1) ? 1 : 0;
          w.quot_scheme.degree = p_b.degree() == 1 ? static_cast<i64>(to_integer(p_b.coeff(1))) : 0;
          w.quot_scheme.euler = static_cast<i64>(to_integer(p_b.coeff(0)));
        } else {
          return;
        }
      }
      w.kind = (s == 0) ? WallRecord::Kind::Collapsing : WallRecord::Kind::Interior;
      w.actual = WallRecord::Actuality::Numerical;
      if (w.kind == WallRecord::Kind::Collapsing && bs)
        w.actual = WallRecord::Actuality::Verified;
      out.push_back(std::move(w));
    };

    if (s == 0) {
      emit(0, 0);  // section of I_A with twist 0 forces A empty: the collapsing wall
      continue;
    }

    if (budget.degree() < 0) continue;
    if (!is_integer(budget.coeff(0)) || !is_integer(budget.coeff(1))) continue;
    const i64 rho = static_cast<i64>(to_integer(budget.coeff(1)));
    const i64 sigma = static_cast<i64>(to_integer(budget.coeff(0)));
    if (rho < 0) continue;

    for (i64 d_a = 0; d_a <= rho; ++d_a) {
      const i64 d_b = rho - d_a;
      const i64 chi_floor_b = (d_b == 0) ? 0 : min_euler(d_b);
      const i64 chi_hi = sigma - d_a * s - d_b * b - chi_floor_b;
      const i64 chi_lo = (d_a == 0) ? 0 : min_euler(d_a);
      for (i64 chi_a = chi_lo; chi_a <= chi_hi; ++chi_a) emit(d_a, chi_a);
    }
  }

  // family annotation: group-1 records with a 0-dimensional quotient
  for (auto& w : out)
    if (is_family_record(w)) w.family_index = (w.quot_scheme.dim < 0) ? 0 : w.quot_scheme.euler;

  for (auto& w : out) {
    if (w.actual == WallRecord::Actuality::Verified) continue;
    if (w.family_index) {
      w.actual = WallRecord::Actuality::Verified;  // backed by the family existence argument
      continue;
    }
    if (w.kind == WallRecord::Kind::Interior) {
      try {
        if (ext_group1_pair(w.sub_scheme, w.quot_scheme).forward > 0)
          w.actual = WallRecord::Actuality::Verified;
      } catch (const std::domain_error&) {
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const WallRecord& x, const WallRecord& y) {
    Ord o = lex_cmp(x.delta, y.delta);
    if (o != Ord::equal) return o == Ord::greater;
    return std::tie(x.group, x.sub_scheme.degree, x.sub_scheme.euler) <
           std::tie(y.group, y.sub_scheme.degree, y.sub_scheme.euler);
  });
  return out;
}

ZeroDimFamily zero_dim_family(const NumClass& v, i64 k) {
  if (v.rank() != 2) throw std::invalid_argument("wall family needs a rank-2 class");
  const i64 c1 = v.c1();
  const RatPoly p_o = hilbert_polynomial(NumClass::structure_sheaf());
  ZeroDimFamily fam;
  fam.budget = p_o + twisted_structure_hilb(2 * k - 2 + c1) - hilbert_polynomial(v.twist(k - 1));
  PlanarSplit split = split_planar(fam.budget);  // throws when not realizable
  fam.l = split.points;

  const RatPoly p_vk = hilbert_polynomial(v.twist(k));
  const i64 b = 2 * k - 1 + c1;
  for (i64 i = 0; i <= fam.l; ++i) {
    WallRecord w;
    w.group = 1;
    w.sub_twist = 1;
    w.quot_twist = b;
    w.sub_scheme = SchemeClass::curve(split.degree, split.pure_euler + (fam.l - i), true);
    w.quot_scheme = (i == 0) ? SchemeClass::empty() : SchemeClass::points_of(i);
    w.delta = wall_delta(p_vk, p_o, 1, w.sub_scheme.hilbert());
    w.family_index = i;
    w.kind = WallRecord::Kind::Interior;
    w.actual = WallRecord::Actuality::Verified;
    if (!lex_positive(w.delta)) return fam;  // positivity fails for all indices at once
    fam.walls.push_back(std::move(w));
  }
  return fam;
}

W0Existence w0_exists(const NumClass& v, i64 k) {
  RatPoly ptilde = curve_polynomial(v, k);
  if (ptilde.degree() != 1 || !is_integer(ptilde.coeff(0)) || !is_integer(ptilde.coeff(1)))
    throw std::invalid_argument("degenerate curve polynomial: " + ptilde.str());
  const i64 c1 = v.c1();
  const i64 d_y = static_cast<i64>(to_integer(ptilde.coeff(1)));
  const i64 chi_y = static_cast<i64>(to_integer(ptilde.coeff(0)));
  W0Existence r;
  r.d_a = d_y - 2 * k + 1 - c1;
  r.chi_a = d_y * (2 * k - 1 + c1) + chi_y - (2 * k + 1 + c1) * (2 * k + c1) / 2 + 1;
  r.exists = r.d_a > 0;
  return r;
}

NamedWalls named_walls(const std::vector<WallRecord>& walls, const NumClass& v, i64 k) {
  if (walls.empty()) throw std::invalid_argument("named_walls needs a nonempty enumeration");
  NamedWalls n;
  const WallRecord* collapse = nullptr;
  const WallRecord* smallest = &walls.back();
  const WallRecord* top_interior = nullptr;
  for (const auto& w : walls) {
    if (w.kind == WallRecord::Kind::Collapsing) collapse = &w;
    else if (!top_interior) top_interior = &w;  // walls are sorted descending
  }
  if (!collapse) throw std::invalid_argument("enumeration has no collapsing record");
  n.collapse = collapse->delta;
  n.top = top_interior ? top_interior->delta : n.collapse;
  n.first = smallest->delta;
  if (v.c1() == -1)
    n.w1_shape_checked = smallest->sub_scheme.dim < 0 && smallest->sub_twist == k - 1;
  return n;
}

std::string transition_str(TransitionType t) {
  switch (t) {
    case TransitionType::Flip: return "flip";
    case TransitionType::DivisorialContraction: return "divisorial contraction";
    case TransitionType::Removal: return "removal";
    case TransitionType::Unclassified: return "unclassified";
  }
  return "?";
}

Transition classify_transition(const WallRecord& w, const FamilyContext& ctx) {
  Transition t;
  if (w.kind == WallRecord::Kind::Collapsing) return t;

  auto fill_dims = [&](i64 plus, std::optional<i64> minus) {
    t.ext_plus_dim = plus;
    t.ext_minus_dim = minus;
    if (w.group == 1 && w.sub_scheme.dim == 1 && w.sub_scheme.planar_pure) {
      t.dim_ss = planar_relhilb_dim(w.sub_scheme.degree, w.sub_scheme.points) +
                 stratum_dim(w.quot_scheme);
      t.dim_plus = *t.dim_ss + plus - 1;
      if (minus && *minus > 0) t.dim_minus = *t.dim_ss + *minus - 1;
    }
  };

  if (w.family_index) {
    const i64 i = *w.family_index;
    if (i <= ctx.l - 2) t.type = TransitionType::Flip;
    else if (i == ctx.l - 1) t.type = TransitionType::DivisorialContraction;
    else t.type = TransitionType::Removal;
    try {
      fill_dims(ext_plus(w.sub_scheme, w.quot_twist),
                ext_minus(w.sub_scheme, w.quot_scheme, w.quot_twist, Incidence::Disjoint));
      t.ext_minus_case_table = ext_minus_cases(w.sub_scheme, w.quot_scheme, w.quot_twist);
    } catch (const std::exception&) {
      // malformed record: keep the index-based type, drop the fiber data
    }
    return t;
  }

  try {
    PairExtPair pe = ext_group1_pair(w.sub_scheme, w.quot_scheme);
    fill_dims(pe.forward, pe.reverse);
    if (pe.forward >= 2 && pe.reverse >= 2) t.type = TransitionType::Flip;
    else if (pe.reverse == 0) t.type = TransitionType::Removal;
  } catch (const std::domain_error&) {
    // no formula: leave unclassified
  }
  return t;
}

bool wall_record_consistent(const WallRecord& w, const NumClass& v, i64 k) {
  const RatPoly p_o = hilbert_polynomial(NumClass::structure_sheaf());
  RatPoly lhs = w.sub_scheme.hilbert().shift(w.sub_twist) + w.quot_scheme.hilbert().shift(w.quot_twist) +
                hilbert_polynomial(v.twist(k));
  RatPoly rhs = p_o.shift(w.sub_twist) + p_o.shift(w.quot_twist);
  if (lhs != rhs) return false;
  RatPoly delta = wall_delta(hilbert_polynomial(v.twist(k)), p_o, w.sub_twist, w.sub_scheme.hilbert());
  return delta == w.delta;
}

}  // namespace pairwalls
