#include <doctest.h>

#include "oracles.hpp"
#include "tenstab/errors.hpp"
#include "tenstab/poly.hpp"

using namespace tenstab;

namespace {
EvPoly poly(std::vector<Rat> c) { return EvPoly(std::move(c)); }
}

TEST_CASE("rationals are canonical and parse round-trips") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(6, 4).numerator() == 3);
  CHECK(Rat(6, 4).denominator() == 2);
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK(Rat(1, -2).denominator() == 2);
  CHECK(Rat::parse("149/100").str() == "149/100");
  CHECK(Rat::parse("-7").str() == "-7");
  CHECK(Rat::parse(" 3 / 2 ") == Rat(3, 2));
  CHECK_THROWS_AS(Rat(1, 0), Error);
  CHECK_THROWS_AS(Rat::parse("x"), Error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
}

TEST_CASE("eventual comparison on the spec instances") {
  // t^2 vs t^2+1
  CHECK(poly_cmp_eventual(poly({Rat(1), Rat(0), Rat(0)}), poly({Rat(1), Rat(0), Rat(1)})) ==
        Ordering::Less);
  // 3-2t vs 0
  CHECK(poly_cmp_eventual(poly({Rat(-2), Rat(3)}), EvPoly()) == Ordering::Less);
  // t/2+100 vs t/3
  CHECK(poly_cmp_eventual(poly({Rat(1, 2), Rat(100)}), poly({Rat(1, 3), Rat(0)})) ==
        Ordering::Greater);
  CHECK(poly_cmp_eventual(poly({Rat(1), Rat(2)}), poly({Rat(1), Rat(2)})) == Ordering::Equal);
}

TEST_CASE("eventual comparison is a total order") {
  oracles::Rng rng(7);
  auto random_poly = [&] {
    std::vector<Rat> c;
    int deg = rng.uniform(0, 2);
    for (int i = 0; i <= deg; ++i) c.emplace_back(rng.uniform(-4, 4), rng.uniform(1, 3));
    return EvPoly(std::move(c));
  };
  for (int it = 0; it < 300; ++it) {
    EvPoly a = random_poly(), b = random_poly(), c = random_poly();
    Ordering ab = poly_cmp_eventual(a, b), ba = poly_cmp_eventual(b, a);
    // antisymmetry and totality
    if (ab == Ordering::Equal) {
      CHECK(ba == Ordering::Equal);
      CHECK(a == b);
    } else {
      CHECK(ab != ba);
    }
    // transitivity
    if (poly_cmp_eventual(a, b) != Ordering::Greater &&
        poly_cmp_eventual(b, c) != Ordering::Greater)
      CHECK(poly_cmp_eventual(a, c) != Ordering::Greater);
  }
}

TEST_CASE("hilbert polynomials from Chern data") {
  // ideal sheaf of two points, checked against the evaluation-rank oracle
  EvPoly two_points = oracles::chi_points_oracle({{Rat(1), Rat(1)}, {Rat(2), Rat(4)}});
  CHECK(hilbert_from_chern(Space::P2, 1, 0, 2) == two_points);
  CHECK(two_points == structure_sheaf_poly(Space::P2) - EvPoly::constant(Rat(2)));

  // line bundle O(a): (t+a+1)(t+a+2)/2
  for (int a : {-2, 0, 1, 3}) {
    Rat ar(a);
    EvPoly expect({Rat(1, 2), (Rat(2) * ar + Rat(3)) / Rat(2),
                   (ar + Rat(1)) * (ar + Rat(2)) / Rat(2)});
    CHECK(hilbert_from_chern(Space::P2, 1, a, 0) == expect);
  }

  // the built-in example: summand additivity against the oracle
  EvPoly one_point = oracles::chi_points_oracle({{Rat(3), Rat(9)}});
  EvPoly sum = hilbert_from_chern(Space::P2, 1, 0, 2) + one_point +
               hilbert_from_chern(Space::P2, 1, 0, 0);
  CHECK(hilbert_from_chern(Space::P2, 3, 0, 3) == sum);
  CHECK(sum == Rat(3) * structure_sheaf_poly(Space::P2) - EvPoly::constant(Rat(3)));

  CHECK(hilbert_from_chern(Space::P1, 1, 4, 0) == poly({Rat(1), Rat(5)}));
  CHECK(hilbert_from_chern(Space::P1, 2, 0, 0) == poly({Rat(2), Rat(2)}));
  CHECK_THROWS_AS(hilbert_from_chern(Space::P1, 1, 0, 1), Error);
}

TEST_CASE("additivity on direct sums with trivial determinant summands") {
  for (int c21 : {0, 1, 3})
    for (int c22 : {0, 2}) {
      EvPoly lhs = hilbert_from_chern(Space::P2, 3, 0, c21 + c22);
      EvPoly rhs = hilbert_from_chern(Space::P2, 1, 0, c21) + hilbert_from_chern(Space::P2, 2, 0, c22);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("degree recovery from the Hilbert polynomial") {
  CHECK(degree_of(hilbert_from_chern(Space::P2, 1, 2, 0), 1, Space::P2) == Rat(2));
  CHECK(degree_of(hilbert_from_chern(Space::P2, 1, 0, 1), 1, Space::P2) == Rat(0));
  CHECK(degree_of(hilbert_from_chern(Space::P2, 3, 0, 3), 3, Space::P2) == Rat(0));
  CHECK(degree_of(hilbert_from_chern(Space::P1, 1, -3, 0), 1, Space::P1) == Rat(-3));
  for (int a = -5; a <= 5; ++a)
    for (int l = 0; l <= 5; ++l)
      CHECK(degree_of(hilbert_from_chern(Space::P2, 1, a, l), 1, Space::P2) == Rat(a));
  CHECK_THROWS_AS(degree_of(EvPoly::constant(Rat(1)), 1, Space::P2), Error);
}

TEST_CASE("delta polynomials") {
  DeltaPoly d(poly({Rat(0), Rat(3, 2)}), Space::P2);
  CHECK(d.poly().is_constant());
  CHECK(d.tau() == Rat(0));
  DeltaPoly t(poly({Rat(1), Rat(0)}), Space::P2);
  CHECK(t.tau() == Rat(1));
  DeltaPoly c1(poly({Rat(1)}), Space::P1);
  CHECK(c1.tau() == Rat(1));
  CHECK_THROWS_AS(DeltaPoly(EvPoly(), Space::P2), Error);
  CHECK_THROWS_AS(DeltaPoly(poly({Rat(-1), Rat(5)}), Space::P2), Error);
  // degree must stay below the space dimension
  CHECK_THROWS_AS(DeltaPoly(poly({Rat(1), Rat(0)}), Space::P1), Error);
}

// P_{E1} + P_{E2} - P collapses to a constant once ranks and twists cancel.
// The coefficient of the colength terms is one; the evaluation-rank oracle
// pins it down independently of the closed-form constructor.
TEST_CASE("second Chern class coefficient in the stability constant") {
  oracles::Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    int a = rng.uniform(0, 4), b = rng.uniform(0, 4), c = rng.uniform(0, 4);
    EvPoly diff = hilbert_from_chern(Space::P2, 1, 0, a) + hilbert_from_chern(Space::P2, 2, 0, b) -
                  hilbert_from_chern(Space::P2, 3, 0, c);
    CHECK(diff == EvPoly::constant(Rat(c - a - b)));
  }
  // and once more with the oracle for the rank-one pieces
  EvPoly p1 = oracles::chi_points_oracle({{Rat(1), Rat(1)}});
  EvPoly p2 = oracles::chi_points_oracle({{Rat(2), Rat(4)}, {Rat(-1), Rat(1)}});
  EvPoly diff = p1 + (p2 + structure_sheaf_poly(Space::P2)) -
                hilbert_from_chern(Space::P2, 3, 0, 3);
  CHECK(diff == EvPoly::constant(Rat(3 - 1 - 2)));
}
