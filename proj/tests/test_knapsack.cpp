#include <doctest.h>

#include <random>

#include "knapgap/knapsack.hpp"
#include "oracles.hpp"

using namespace knapgap;

TEST_CASE("instance construction validates") {
  CHECK_THROWS_AS(KnapsackInstance({Int(3), Int(0)}, Int(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(KnapsackInstance({Int(2), Int(4)}, Int(1)),
                  std::invalid_argument);
  CHECK_NOTHROW(KnapsackInstance({Int(3), Int(-2)}, Int(-5)));
}

TEST_CASE("vertices") {
  KnapsackInstance inst({Int(3), Int(5), Int(7)}, Int(15));
  auto verts = vertices(inst);
  REQUIRE(verts.size() == 3);
  CHECK(verts[0].index == 0);
  CHECK(verts[0].value == 5);
  CHECK(verts[1].value == 3);
  CHECK(verts[2].value == make_rat(15, 7));

  auto origin = vertices(KnapsackInstance({Int(3), Int(5)}, Int(0)));
  REQUIRE(origin.size() == 1);
  CHECK(origin[0].value == 0);
  CHECK(origin[0].point(2) == RatVec{Rat(0), Rat(0)});

  auto mixed = vertices(KnapsackInstance({Int(3), Int(-2)}, Int(1)));
  REQUIRE(mixed.size() == 1);
  CHECK(mixed[0].index == 0);
  CHECK(mixed[0].value == make_rat(1, 3));

  auto empty = vertices(KnapsackInstance({Int(3), Int(5)}, Int(-1)));
  CHECK(empty.empty());
}

TEST_CASE("classification") {
  CHECK(classify(KnapsackInstance({Int(3), Int(5), Int(7)}, Int(4))) ==
        Shape::Bounded);
  CHECK(classify(KnapsackInstance({Int(3), Int(5)}, Int(-1))) == Shape::Empty);
  CHECK(classify(KnapsackInstance({Int(3), Int(-2)}, Int(100))) ==
        Shape::Unbounded);
  CHECK(classify(KnapsackInstance({Int(-3), Int(-5)}, Int(-6))) ==
        Shape::Bounded);
  CHECK(classify(KnapsackInstance({Int(3), Int(5)}, Int(0))) == Shape::Bounded);

  SUBCASE("vertices nonempty exactly when nonempty") {
    for (long a0 : {-4, -1, 2, 5}) {
      for (long a1 : {-3, 1, 7}) {
        if (std::gcd(std::labs(a0), std::labs(a1)) != 1) continue;
        for (long b = -9; b <= 9; ++b) {
          KnapsackInstance inst({Int(a0), Int(a1)}, Int(b));
          CHECK(vertices(inst).empty() == (classify(inst) == Shape::Empty));
        }
      }
    }
  }
}

TEST_CASE("integer feasibility examples") {
  CHECK_FALSE(is_integer_feasible(KnapsackInstance({Int(2), Int(3)}, Int(1))));
  CHECK(is_integer_feasible(KnapsackInstance({Int(3), Int(5)}, Int(8))));
  CHECK(is_integer_feasible(KnapsackInstance({Int(3), Int(-2)}, Int(1))));
  CHECK_FALSE(is_integer_feasible(KnapsackInstance({Int(3), Int(5)}, Int(-2))));
  CHECK(is_integer_feasible(KnapsackInstance({Int(-3), Int(-5)}, Int(-8))));
}

TEST_CASE("feasibility routes agree") {
  SUBCASE("exhaustively at small scale") {
    for (size_t n : {2u, 3u}) {
      std::vector<long> v(n, -6);
      while (true) {
        bool zero = false;
        long g = 0;
        for (long x : v) {
          if (x == 0) zero = true;
          g = std::gcd(g, std::labs(x));
        }
        if (!zero && g == 1) {
          IntVec a(n);
          for (size_t i = 0; i < n; ++i) a[i] = Int(v[i]);
          for (long b = -25; b <= 25; ++b) {
            KnapsackInstance inst(a, Int(b));
            CHECK(is_integer_feasible(inst) == is_integer_feasible_oracle(inst));
          }
        }
        bool advanced = false;
        for (size_t i = n; i-- > 0;) {
          if (v[i] < 6) {
            v[i] += 1;
            advanced = true;
            break;
          }
          v[i] = -6;
        }
        if (!advanced) break;
      }
    }
  }

  SUBCASE("randomized at the stated bounds") {
    std::mt19937_64 rng(2024);
    int mixed_feasible = 0;
    for (int trial = 0; trial < 1500; ++trial) {
      size_t n = 2 + rng() % 3;
      IntVec a(n);
      while (true) {
        for (size_t i = 0; i < n; ++i) {
          long x = 0;
          while (x == 0) x = static_cast<long>(rng() % 25) - 12;
          a[i] = Int(x);
        }
        if (gcd_vector(a) == 1) break;
      }
      long b = static_cast<long>(rng() % 121) - 60;
      KnapsackInstance inst(a, Int(b));
      bool fast = is_integer_feasible(inst);
      CHECK(fast == is_integer_feasible_oracle(inst));
      if (classify(inst) == Shape::Unbounded) {
        CHECK(fast);  // mixed signs with gcd 1 always reach b
        ++mixed_feasible;
      }
    }
    CHECK(mixed_feasible > 100);
  }
}

TEST_CASE("fiber enumeration in a box") {
  KnapsackInstance pinned({Int(5), Int(5), Int(1)}, Int(4));
  auto unique_pt =
      enumerate_fiber_in_box(pinned, {Rat(0), Rat(0), Rat(4)}, Int(0));
  CHECK(unique_pt.points == std::vector<IntVec>{{Int(0), Int(0), Int(4)}});
  CHECK(unique_pt.exhaustive);

  KnapsackInstance small({Int(2), Int(3)}, Int(6));
  auto two = enumerate_fiber_in_box(small, {Rat(0), Rat(2)}, Int(3));
  CHECK(two.points ==
        std::vector<IntVec>{{Int(0), Int(2)}, {Int(3), Int(0)}});

  KnapsackInstance infeasible({Int(3), Int(5)}, Int(1));
  CHECK(enumerate_fiber_in_box(infeasible, {Rat(0), Rat(0)}, Int(9))
            .points.empty());

  SUBCASE("matches the plain-loop oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      size_t n = 2 + rng() % 2;
      IntVec a(n);
      while (true) {
        for (size_t i = 0; i < n; ++i) {
          long x = 0;
          while (x == 0) x = static_cast<long>(rng() % 15) - 7;
          a[i] = Int(x);
        }
        if (gcd_vector(a) == 1) break;
      }
      long b = static_cast<long>(rng() % 31) - 15;
      long hi = 8;
      KnapsackInstance inst(a, Int(b));
      // center the box at hi/2 with radius hi/2 so it covers [0, hi]^n
      auto fast = enumerate_fiber_in_box(
          inst, RatVec(n, make_rat(hi, 2)), Int(hi / 2));
      auto slow = oracle::brute_fiber(a, Int(b), hi);
      CHECK(fast.points == slow);
    }
  }

  SUBCASE("cap refusal") {
    Caps tight;
    tight.fiber_tuple_cap = 10;
    KnapsackInstance inst({Int(1), Int(1), Int(1)}, Int(10));
    CHECK_THROWS_AS(
        enumerate_fiber_in_box(inst, RatVec(3, Rat(5)), Int(5), tight),
        ScaleRefusal);
  }
}

TEST_CASE("bounded fiber covers the whole polytope") {
  KnapsackInstance inst({Int(3), Int(5), Int(7)}, Int(15));
  auto fiber = enumerate_bounded_fiber(inst);
  CHECK(fiber.points == std::vector<IntVec>{{Int(0), Int(3), Int(0)},
                                            {Int(1), Int(1), Int(1)},
                                            {Int(5), Int(0), Int(0)}});
  // every feasible point sits in the cube of side b / min_i a_i
  for (const auto& p : fiber.points)
    for (const Int& x : p) CHECK(x <= 5);

  CHECK_THROWS_AS(enumerate_bounded_fiber(
                      KnapsackInstance({Int(3), Int(-2)}, Int(1))),
                  std::invalid_argument);

  auto negated = enumerate_bounded_fiber(
      KnapsackInstance({Int(-3), Int(-5), Int(-7)}, Int(-15)));
  CHECK(negated.points == fiber.points);
}

TEST_CASE("semigroup representation") {
  auto rep = semigroup_representation({Int(3), Int(5)}, Int(8));
  REQUIRE(rep.has_value());
  CHECK(dot({Int(3), Int(5)}, *rep) == 8);
  CHECK_FALSE(semigroup_representation({Int(2), Int(3)}, Int(1)).has_value());
  CHECK_FALSE(semigroup_representation({Int(3), Int(5)}, Int(-4)).has_value());
  auto zero = semigroup_representation({Int(3), Int(5)}, Int(0));
  REQUIRE(zero.has_value());
  CHECK(*zero == IntVec{Int(0), Int(0)});
}
