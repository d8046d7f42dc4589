#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "pairwalls/walls.hpp"

using namespace pairwalls;

namespace {

RatPoly P(const std::string& s) { return parse_poly(s); }

const NumClass kFlag(2, -1, Rat(-1, 2), Rat(5, 6));
const NumClass kNullCor(2, 0, -1, 0);
const NumClass kQuartic(2, 0, -3, 4);
const NumClass kC2Even(2, 0, -2, 0);
const NumClass kC2Odd(2, 0, -2, 1);

using Row = std::tuple<i64, std::string, std::string>;  // (group, P_A, P_B)

std::multiset<Row> rows_of(const std::vector<WallRecord>& walls) {
  std::multiset<Row> rows;
  for (const auto& w : walls)
    rows.insert({w.group, w.sub_scheme.hilbert().str(), w.quot_scheme.hilbert().str()});
  return rows;
}

std::multiset<std::string> deltas_of(const std::vector<WallRecord>& walls, bool interior_only) {
  std::multiset<std::string> out;
  for (const auto& w : walls)
    if (!interior_only || w.kind == WallRecord::Kind::Interior) out.insert(w.delta.str());
  return out;
}

// Independent enumeration: scan the whole (group, d_A, chi_A) grid, build the
// ideal-sheaf classes directly, and keep every decomposition whose quotient is
// realizable and whose critical value lies in (0, W_empty]. The quotient is
// reconstructed from the Chern character of E(k) minus the sub.
std::multiset<Row> oracle_rows(const NumClass& v, i64 k) {
  std::multiset<Row> rows;
  const i64 c1 = v.c1();
  const RatPoly p_vk = hilbert_polynomial(v.twist(k));
  const RatPoly w_empty = collapsing_wall(v, k);
  auto realizable_linear = [](const RatPoly& p) {
    if (p.is_zero()) return true;
    if (p.degree() > 1 || !is_integer(p.coeff(0)) || !is_integer(p.coeff(1))) return false;
    i64 d = static_cast<i64>(to_integer(p.coeff(1)));
    i64 chi = static_cast<i64>(to_integer(p.coeff(0)));
    if (d < 0) return false;
    if (d == 0) return chi >= 1;
    return chi >= (3 * d - d * d) / 2;  // plane-curve Euler characteristic bound
  };
  for (i64 s = 0; s <= k; ++s) {
    const i64 b = 2 * k + c1 - s;
    for (i64 d_a = 0; d_a <= 10; ++d_a) {
      for (i64 chi_a = -40; chi_a <= 40; ++chi_a) {
        if (d_a == 0 && chi_a < 0) continue;
        if (s == 0 && (d_a != 0 || chi_a != 0)) continue;  // a section of I_A needs A = empty
        RatPoly p_a = (d_a == 0 && chi_a == 0) ? RatPoly()
                                               : RatPoly::from_coeffs({Rat(chi_a), Rat(d_a)});
        if (!realizable_linear(p_a)) continue;
        RatPoly p_sub = hilbert_polynomial(NumClass::ideal_sheaf(d_a, chi_a, s));
        RatPoly delta = p_vk - p_sub.scaled(Rat(2));
        if (!lex_positive(delta) || lex_cmp(delta, w_empty) == Ord::greater) continue;
        // quotient: P_B(t + b) = P_O(t + b) - (P_{v_k} - P_sub)
        RatPoly p_quot_sheaf = p_vk - p_sub;
        RatPoly p_b = (twisted_structure_hilb(b) - p_quot_sheaf).shift(-b);
        if (!realizable_linear(p_b)) continue;
        rows.insert({s, p_a.str(), p_b.str()});
      }
    }
  }
  return rows;
}

void check_class(const NumClass& v, size_t expected_walls) {
  auto walls = enumerate_walls(v, 1);
  CHECK(walls.size() == expected_walls);
  CHECK(rows_of(walls) == oracle_rows(v, 1));
  // descending, all in (0, W_empty], collapsing exactly at W_empty
  RatPoly w_empty = collapsing_wall(v, 1);
  for (size_t i = 0; i + 1 < walls.size(); ++i)
    CHECK(lex_cmp(walls[i].delta, walls[i + 1].delta) != Ord::less);
  for (const auto& w : walls) {
    CHECK(lex_positive(w.delta));
    Ord vs = lex_cmp(w.delta, w_empty);
    CHECK(vs != Ord::greater);
    CHECK((vs == Ord::equal) == (w.kind == WallRecord::Kind::Collapsing));
    CHECK(wall_record_consistent(w, v, 1));
    CHECK(w.delta.degree() < 3);
    // round trip: the record's own decomposition is strictly semistable at its delta
    i64 d = w.sub_scheme.dim == 1 ? w.sub_scheme.degree : 0;
    PairClass sub = PairClass::with_section(NumClass::ideal_sheaf(d, w.sub_scheme.euler, w.sub_twist));
    PairClass whole = PairClass::with_section(v.twist(1));
    CompareResult res = compare_pairs(sub, whole, w.delta);
    CHECK(res.destabilizes);
    CHECK(res.strictly);
  }
}

}  // namespace

TEST_CASE("unique wall for the flag-variety class") {
  auto walls = enumerate_walls(kFlag, 1);
  REQUIRE(walls.size() == 1);
  CHECK(walls[0].kind == WallRecord::Kind::Collapsing);
  CHECK(walls[0].delta == P("1/2*t^2+3/2*t+1"));
  CHECK(walls[0].quot_scheme.hilbert() == P("t+1"));
  check_class(kFlag, 1);
}

TEST_CASE("null-correlation class: three walls") {
  auto walls = enumerate_walls(kNullCor, 1);
  REQUIRE(walls.size() == 3);
  std::multiset<Row> expect = {{0, "0", "2*t+2"}, {1, "t+2", "0"}, {1, "t+1", "1"}};
  CHECK(rows_of(walls) == expect);
  CHECK(deltas_of(walls, true) == std::multiset<std::string>{"t+1", "t+3"});
  check_class(kNullCor, 3);
}

TEST_CASE("quartic class: five walls with the four-row chart") {
  auto walls = enumerate_walls(kQuartic, 1);
  REQUIRE(walls.size() == 5);
  std::multiset<Row> expect = {
      {0, "0", "4*t"}, {1, "3*t+2", "0"}, {1, "3*t+1", "1"}, {1, "3*t", "2"}, {1, "2*t+1", "t+1"}};
  CHECK(rows_of(walls) == expect);
  CHECK(deltas_of(walls, true) ==
        std::multiset<std::string>{"t+1", "3*t+1", "3*t+3", "3*t+5"});
  check_class(kQuartic, 5);
}

TEST_CASE("c2=2 classes: six and five walls") {
  auto even = enumerate_walls(kC2Even, 1);
  REQUIRE(even.size() == 6);
  std::multiset<Row> expect_even = {{0, "0", "3*t+3"}, {1, "2*t+4", "0"}, {1, "2*t+3", "1"},
                                    {1, "2*t+2", "2"}, {1, "2*t+1", "3"}, {1, "t+3", "t+1"}};
  CHECK(rows_of(even) == expect_even);
  CHECK(deltas_of(even, true) ==
        std::multiset<std::string>{"2", "2*t", "2*t+2", "2*t+4", "2*t+6"});
  check_class(kC2Even, 6);

  auto odd = enumerate_walls(kC2Odd, 1);
  REQUIRE(odd.size() == 5);
  std::multiset<Row> expect_odd = {{0, "0", "3*t+2"}, {1, "2*t+3", "0"}, {1, "2*t+2", "1"},
                                   {1, "2*t+1", "2"}, {1, "t+2", "t+1"}};
  CHECK(rows_of(odd) == expect_odd);
  CHECK(deltas_of(odd, true) == std::multiset<std::string>{"1", "2*t+1", "2*t+3", "2*t+5"});
  check_class(kC2Odd, 5);
}

TEST_CASE("zero-dimensional wall families") {
  ZeroDimFamily f = zero_dim_family(kNullCor, 1);
  CHECK(f.budget == P("t+2"));
  CHECK(f.l == 1);
  REQUIRE(f.walls.size() == 2);
  CHECK(f.walls[0].sub_scheme.hilbert() == P("t+2"));
  CHECK(f.walls[1].quot_scheme.hilbert() == P("1"));

  f = zero_dim_family(kQuartic, 1);
  CHECK(f.budget == P("3*t+2"));
  CHECK(f.l == 2);
  CHECK(f.walls.size() == 3);

  f = zero_dim_family(kC2Even, 1);
  CHECK(f.budget == P("2*t+4"));
  CHECK(f.l == 3);
  CHECK(f.walls.size() == 4);

  f = zero_dim_family(kC2Odd, 1);
  CHECK(f.budget == P("2*t+3"));
  CHECK(f.l == 2);

  // c1 = -1 at k = 1: budget realizable but every family delta is negative
  f = zero_dim_family(kFlag, 1);
  CHECK(f.budget == P("t+1"));
  CHECK(f.l == 0);
  CHECK(f.walls.empty());

  // negative-degree budget: no group-1 walls at all
  CHECK_THROWS_AS(zero_dim_family(NumClass(2, 0, 1, 0), 1), std::invalid_argument);
}

TEST_CASE("family walls sit inside the enumeration and decrease strictly") {
  for (const NumClass& v : {kNullCor, kQuartic, kC2Even, kC2Odd}) {
    auto walls = enumerate_walls(v, 1);
    ZeroDimFamily f = zero_dim_family(v, 1);
    REQUIRE(static_cast<i64>(f.walls.size()) == f.l + 1);
    for (size_t i = 0; i + 1 < f.walls.size(); ++i)
      CHECK(lex_cmp(f.walls[i].delta, f.walls[i + 1].delta) == Ord::greater);
    for (const auto& fw : f.walls) {
      bool found = false;
      for (const auto& w : walls)
        found |= w.family_index == fw.family_index && w.delta == fw.delta &&
                 w.sub_scheme == fw.sub_scheme && w.quot_scheme == fw.quot_scheme;
      CHECK(found);
    }
  }
}

TEST_CASE("w0 existence formulas") {
  W0Existence w = w0_exists(kNullCor, 1);
  CHECK(w.exists);
  CHECK(w.d_a == 1);
  CHECK(w.chi_a == 2);
  w = w0_exists(kQuartic, 1);
  CHECK(w.exists);
  CHECK(w.d_a == 3);
  CHECK(w.chi_a == 2);
  // boundary: d_Y = 2k - 1 + c1 leaves no curve part
  w = w0_exists(NumClass(2, 0, 0, 0), 1);
  CHECK(!w.exists);
  CHECK(w.d_a == 0);
  // degenerate curve polynomial (constant)
  CHECK_THROWS_AS(w0_exists(NumClass(2, 0, 1, 0), 1), std::invalid_argument);
}

TEST_CASE("named walls") {
  auto quartic = enumerate_walls(kQuartic, 1);
  NamedWalls n = named_walls(quartic, kQuartic, 1);
  CHECK(n.collapse == P("t^2+2*t+1"));
  CHECK(n.top == P("3*t+5"));
  CHECK(n.first == P("t+1"));

  auto flag = enumerate_walls(kFlag, 1);
  n = named_walls(flag, kFlag, 1);
  CHECK(n.top == n.collapse);
  CHECK(n.first == n.collapse);
  CHECK(n.w1_shape_checked);  // c1 = -1: smallest wall cut out by (O(k-1), 1)

  auto odd = enumerate_walls(kC2Odd, 1);
  n = named_walls(odd, kC2Odd, 1);
  CHECK(n.first == P("1"));
  CHECK_THROWS_AS(named_walls({}, kQuartic, 1), std::invalid_argument);
}

TEST_CASE("transition classification") {
  auto walls = enumerate_walls(kQuartic, 1);
  FamilyContext ctx{2, 1, 0};
  // descending: W_empty, W0, W1, W2, W3
  REQUIRE(walls.size() == 5);
  Transition t0 = classify_transition(walls[1], ctx);
  CHECK(t0.type == TransitionType::Flip);
  CHECK(*t0.ext_plus_dim == 15);
  CHECK(*t0.ext_minus_dim == 2);
  CHECK(*t0.dim_ss == 16);
  Transition t1 = classify_transition(walls[2], ctx);
  CHECK(t1.type == TransitionType::DivisorialContraction);
  CHECK(*t1.dim_ss == 17);
  Transition t2 = classify_transition(walls[3], ctx);
  CHECK(t2.type == TransitionType::Removal);
  CHECK(*t2.dim_ss == 18);
  CHECK(*t2.ext_minus_dim == 0);
  Transition t3 = classify_transition(walls[4], ctx);
  CHECK(t3.type == TransitionType::Flip);
  CHECK(*t3.ext_plus_dim == 9);
  CHECK(*t3.ext_minus_dim == 3);
  CHECK(*t3.dim_ss == 12);
  CHECK(*t3.dim_plus == 20);
  CHECK(*t3.dim_minus == 14);
  // removal happens only at the last family index
  for (const NumClass& v : {kNullCor, kQuartic, kC2Even, kC2Odd}) {
    auto ws = enumerate_walls(v, 1);
    ZeroDimFamily f = zero_dim_family(v, 1);
    for (const auto& w : ws)
      if (w.family_index) {
        Transition t = classify_transition(w, {f.l, 1, v.c1()});
        CHECK((t.type == TransitionType::Removal) == (*w.family_index == f.l));
      }
  }
}

TEST_CASE("actuality tags") {
  auto even = enumerate_walls(kC2Even, 1);
  int numerical = 0;
  for (const auto& w : even) {
    if (w.actual == WallRecord::Actuality::Numerical) {
      ++numerical;
      CHECK(w.quot_scheme.dim == 1);  // the line|line wall has no stored certificate
    }
  }
  CHECK(numerical == 1);
  auto quartic = enumerate_walls(kQuartic, 1);
  for (const auto& w : quartic) CHECK(w.actual == WallRecord::Actuality::Verified);
}

TEST_CASE("twist 2: quadratic walls stay consistent") {
  auto walls = enumerate_walls(kNullCor, 2);
  ZeroDimFamily f = zero_dim_family(kNullCor, 2);
  CHECK(f.l == 5);
  CHECK(collapsing_wall(kNullCor, 2) == walls.front().delta);
  i64 family_records = 0;
  for (const auto& w : walls) {
    CHECK(wall_record_consistent(w, kNullCor, 2));
    CHECK(lex_positive(w.delta));
    i64 d = w.sub_scheme.dim == 1 ? w.sub_scheme.degree : 0;
    PairClass sub = PairClass::with_section(NumClass::ideal_sheaf(d, w.sub_scheme.euler, w.sub_twist));
    CompareResult res = compare_pairs(sub, PairClass::with_section(kNullCor.twist(2)), w.delta);
    CHECK(res.strictly);
    if (w.family_index) {
      ++family_records;
      Transition t = classify_transition(w, {f.l, 2, 0});
      CHECK((t.type == TransitionType::Removal) == (*w.family_index == f.l));
      CHECK(*t.ext_plus_dim >= 3);
    }
    if (w.group == 2) CHECK(w.actual == WallRecord::Actuality::Numerical);
  }
  CHECK(family_records == f.l + 1);
}

TEST_CASE("classify_transition never throws on malformed records") {
  WallRecord bad;
  bad.kind = WallRecord::Kind::Interior;
  bad.family_index = 0;
  bad.group = 1;
  bad.quot_twist = 0;  // outside the ext formulas
  bad.sub_scheme = SchemeClass::curve(1, 1, true);
  bad.quot_scheme = SchemeClass::empty();
  Transition t = classify_transition(bad, {0, 1, -1});
  CHECK(t.type == TransitionType::Removal);
  CHECK(!t.ext_plus_dim.has_value());
}

TEST_CASE("errors and bounds") {
  CHECK_THROWS_AS(enumerate_walls(NumClass(1, 0, 0, 0), 1), std::invalid_argument);
  // max_group = 0 keeps only the collapsing record
  auto only_collapse = enumerate_walls(kQuartic, 1, i64{0});
  CHECK(only_collapse.size() == 1);
  CHECK(only_collapse[0].kind == WallRecord::Kind::Collapsing);
}
