#include <doctest.h>

#include <random>

#include "knapgap/distance.hpp"
#include "knapgap/verify.hpp"

using namespace knapgap;

namespace {

Vertex vertex_at(const KnapsackInstance& inst, size_t index) {
  for (const Vertex& v : vertices(inst))
    if (v.index == index) return v;
  REQUIRE(false);
  return Vertex{0, Rat(0)};
}

}  // namespace

TEST_CASE("nearest feasible point per vertex") {
  KnapsackInstance pinned({Int(5), Int(5), Int(1)}, Int(4));
  auto vd = nearest_feasible_linf(pinned, vertex_at(pinned, 0));
  CHECK(vd.nearest == IntVec{Int(0), Int(0), Int(4)});
  CHECK(vd.distance == 4);

  KnapsackInstance integral({Int(2), Int(3)}, Int(6));
  auto at_vertex = nearest_feasible_linf(integral, vertex_at(integral, 0));
  CHECK(at_vertex.nearest == IntVec{Int(3), Int(0)});
  CHECK(at_vertex.distance == 0);

  KnapsackInstance mixed({Int(3), Int(-2)}, Int(1));
  auto near = nearest_feasible_linf(mixed, vertex_at(mixed, 0));
  CHECK(near.nearest == IntVec{Int(1), Int(1)});
  CHECK(near.distance == 1);

  KnapsackInstance infeasible({Int(3), Int(5)}, Int(1));
  CHECK_THROWS_AS(nearest_feasible_linf(infeasible, Vertex{0, make_rat(1, 3)}),
                  std::invalid_argument);
}

TEST_CASE("vertex distance") {
  auto witness = vertex_distance(KnapsackInstance({Int(5), Int(5), Int(1)}, Int(4)));
  REQUIRE(witness.value.has_value());
  CHECK(*witness.value == 4);
  REQUIRE(witness.per_vertex.size() == 3);

  auto integral = vertex_distance(KnapsackInstance({Int(2), Int(3)}, Int(6)));
  CHECK(*integral.value == 0);

  auto infeasible = vertex_distance(KnapsackInstance({Int(3), Int(5)}, Int(1)));
  CHECK_FALSE(infeasible.value.has_value());
  CHECK(infeasible.per_vertex.empty());

  // fractional distance: single vertex (0, 1/2), nearest point (1, 2)
  auto fractional = vertex_distance(KnapsackInstance({Int(3), Int(-2)}, Int(-1)));
  REQUIRE(fractional.value.has_value());
  CHECK(*fractional.value == make_rat(3, 2));
}

TEST_CASE("vertex distance symmetries") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    IntVec a(3);
    while (true) {
      for (size_t i = 0; i < 3; ++i) {
        long x = 0;
        while (x == 0) x = static_cast<long>(rng() % 13) - 6;
        a[i] = Int(x);
      }
      if (gcd_vector(a) == 1) break;
    }
    long b = static_cast<long>(rng() % 31) - 15;
    auto base = vertex_distance(KnapsackInstance(a, Int(b)));

    IntVec neg(3);
    for (size_t i = 0; i < 3; ++i) neg[i] = -a[i];
    auto negated = vertex_distance(KnapsackInstance(neg, Int(-b)));
    CHECK((base.value == negated.value));

    IntVec perm{a[2], a[0], a[1]};
    auto permuted = vertex_distance(KnapsackInstance(perm, Int(b)));
    CHECK((base.value == permuted.value));
  }
}

TEST_CASE("proof-guided point construction") {
  KnapsackInstance pinned({Int(5), Int(5), Int(1)}, Int(4));
  CHECK(proof_guided_point(pinned, vertex_at(pinned, 0)) ==
        IntVec{Int(0), Int(0), Int(4)});

  KnapsackInstance integral({Int(2), Int(3)}, Int(6));
  CHECK(proof_guided_point(integral, vertex_at(integral, 1)) ==
        IntVec{Int(0), Int(2)});

  KnapsackInstance mixed({Int(3), Int(-2)}, Int(1));
  IntVec z = proof_guided_point(mixed, vertex_at(mixed, 0));
  CHECK(dot(mixed.a(), z) == 1);
  Rat dist = rat_abs(Rat(z[0]) - make_rat(1, 3));
  if (Rat(z[1]) > dist) dist = Rat(z[1]);
  CHECK(dist <= 2);

  CHECK_THROWS_AS(proof_guided_point(KnapsackInstance({Int(3), Int(5)}, Int(1)),
                                     Vertex{0, make_rat(1, 3)}),
                  std::invalid_argument);
}

TEST_CASE("constructive sweep stays within the bound") {
  auto result = sweep_proof_construction(4, {2, 3}, 10);
  CHECK(result.pass);
  CHECK(result.checked > 500);
  CHECK(result.violations == 0);
}

TEST_CASE("l1 refinement") {
  auto pinned = l1_nearest_check(KnapsackInstance({Int(5), Int(5), Int(1)}, Int(4)));
  CHECK(pinned.value == make_rat(24, 5));
  CHECK(pinned.bound == 8);
  CHECK(pinned.ok);

  auto integral = l1_nearest_check(KnapsackInstance({Int(2), Int(3)}, Int(6)));
  CHECK(integral.value == 0);

  // fiber {(0,3,0),(1,1,1),(5,0,0)}; farthest vertex is (0,0,15/7)
  auto simplex = l1_nearest_check(KnapsackInstance({Int(3), Int(5), Int(7)}, Int(15)));
  CHECK(simplex.value == make_rat(22, 7));
  CHECK(simplex.bound == 12);
  CHECK(simplex.ok);
  CHECK(simplex.argmax == 2);

  CHECK_THROWS_AS(l1_nearest_check(KnapsackInstance({Int(3), Int(-2)}, Int(1))),
                  std::invalid_argument);
}

TEST_CASE("tight witness family") {
  auto w3 = tight_witness(3, Int(5));
  CHECK(w3.instance.a() == IntVec{Int(5), Int(5), Int(1)});
  CHECK(w3.instance.b() == 4);
  CHECK(w3.expected_distance == 4);

  auto w2 = tight_witness(2, Int(1));
  CHECK(w2.instance.a() == IntVec{Int(1), Int(1)});
  CHECK(w2.instance.b() == 0);
  CHECK(w2.expected_distance == 0);

  auto w4 = tight_witness(4, Int(3));
  CHECK(w4.instance.a() == IntVec{Int(3), Int(3), Int(3), Int(1)});
  CHECK(*vertex_distance(w4.instance).value == 2);

  CHECK_THROWS_AS(tight_witness(1, Int(2)), std::invalid_argument);
  CHECK_THROWS_AS(tight_witness(3, Int(0)), std::invalid_argument);
}

TEST_CASE("reference bounds") {
  auto b1 = reference_bounds({Int(3), Int(5), Int(7)});
  CHECK(b1.cook_linf == 21);
  CHECK(b1.ew_l1 == 15);
  CHECK(b1.vertex_linf == 6);

  auto b2 = reference_bounds({Int(1), Int(1)});
  CHECK(b2.cook_linf == 2);
  CHECK(b2.ew_l1 == 3);
  CHECK(b2.vertex_linf == 0);

  auto b3 = reference_bounds({Int(9), Int(-4)});
  CHECK(b3.cook_linf == 18);
  CHECK(b3.ew_l1 == 19);
  CHECK(b3.vertex_linf == 8);

  CHECK_THROWS_AS(reference_bounds({Int(2), Int(4)}), std::invalid_argument);
}

TEST_CASE("batched scanner equals the box search") {
  for (size_t n : {2u, 3u}) {
    std::vector<long> v(n, -5);
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
        DistanceScanner scanner(a);
        for (long b = -15; b <= 15; ++b) {
          auto batched = scanner.distance(Int(b));
          auto reference = vertex_distance(KnapsackInstance(a, Int(b)));
          CHECK(batched.has_value() == reference.value.has_value());
          if (batched && reference.value) CHECK(*batched == *reference.value);
        }
      }
      bool advanced = false;
      for (size_t i = n; i-- > 0;) {
        if (v[i] < 5) {
          v[i] += 1;
          advanced = true;
          break;
        }
        v[i] = -5;
      }
      if (!advanced) break;
    }
  }
}
