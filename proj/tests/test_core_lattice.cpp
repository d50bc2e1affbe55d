#include <doctest.h>

#include <random>

#include "knapgap/core_lattice.hpp"

using namespace knapgap;

TEST_CASE("knapsack vector validation") {
  CHECK(validate_knapsack_vector({Int(3), Int(5), Int(7)}).ok);
  auto zero = validate_knapsack_vector({Int(3), Int(0), Int(7)});
  CHECK_FALSE(zero.ok);
  CHECK(zero.defect == VectorDefect::ZeroEntry);
  CHECK(zero.index == 1);
  auto gcd2 = validate_knapsack_vector({Int(2), Int(4)});
  CHECK_FALSE(gcd2.ok);
  CHECK(gcd2.defect == VectorDefect::NotPrimitive);
  CHECK(gcd2.gcd == 2);
  CHECK_FALSE(validate_knapsack_vector({Int(5)}).ok);
}

TEST_CASE("hnf basis on frozen examples") {
  // minimal positive k with 3k == 0 mod 7 is 7, then the lift 3*3+5*1=14
  auto basis = hnf_basis({{Int(3), Int(5)}, Int(7)});
  REQUIRE(basis.dim() == 2);
  CHECK(basis.rows[0] == IntVec{Int(7), Int(0)});
  CHECK(basis.rows[1] == IntVec{Int(3), Int(1)});
  CHECK(basis.det == 7);

  auto one_dim = hnf_basis({{Int(1)}, Int(5)});
  CHECK(one_dim.rows[0] == IntVec{Int(5)});

  auto full = hnf_basis({{Int(0), Int(1)}, Int(1)});
  CHECK(full.rows[0] == IntVec{Int(1), Int(0)});
  CHECK(full.rows[1] == IntVec{Int(0), Int(1)});

  auto reduced = hnf_basis({{Int(2), Int(3)}, Int(4)});
  CHECK(reduced.rows[0] == IntVec{Int(2), Int(0)});
  CHECK(reduced.rows[1] == IntVec{Int(1), Int(2)});
}

TEST_CASE("hnf rejects rank-deficient input") {
  CHECK_THROWS_AS(hnf_basis({{Int(2), Int(4)}, Int(4)}), std::invalid_argument);
}

TEST_CASE("hnf invariants over random congruence lattices") {
  // membership of every row plus det == modulus proves the rows span the
  // lattice exactly
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    size_t d = 1 + rng() % 3;
    long m = 1 + static_cast<long>(rng() % 40);
    IntVec w(d);
    bool primitive = false;
    while (!primitive) {
      long g = m;
      for (size_t i = 0; i < d; ++i) {
        long wi = static_cast<long>(rng() % (2 * 50 + 1)) - 50;
        w[i] = Int(wi);
        g = std::gcd(g, std::labs(wi));
      }
      primitive = g == 1;
    }
    CongruenceLattice lattice{w, Int(m)};
    auto basis = hnf_basis(lattice);
    Int prod = 1;
    for (size_t i = 0; i < d; ++i) {
      CHECK(basis.rows[i][i] > 0);
      prod *= basis.rows[i][i];
      for (size_t j = 0; j < d; ++j) {
        if (j > i) CHECK(basis.rows[i][j] == 0);
        if (j < i) {
          CHECK(basis.rows[i][j] >= 0);
          CHECK(basis.rows[i][j] < basis.rows[j][j]);
        }
      }
      CHECK(lattice.contains(basis.rows[i]));
    }
    CHECK(prod == m);
    CHECK(basis.det == m);
  }
}

namespace {

// independent exact Gram-Schmidt for the re-expansion check
std::vector<RatVec> gram_schmidt_rows(const HnfBasis& basis) {
  const size_t d = basis.dim();
  std::vector<RatVec> gs(d, RatVec(d, Rat(0)));
  for (size_t i = 0; i < d; ++i) {
    for (size_t k = 0; k < d; ++k) gs[i][k] = Rat(basis.rows[i][k]);
    for (size_t j = 0; j < i; ++j) {
      Rat ip = 0, nn = 0;
      for (size_t k = 0; k < d; ++k) {
        ip += Rat(basis.rows[i][k]) * gs[j][k];
        nn += gs[j][k] * gs[j][k];
      }
      Rat mu = ip / nn;
      for (size_t k = 0; k < d; ++k) gs[i][k] -= mu * gs[j][k];
    }
  }
  return gs;
}

}  // namespace

TEST_CASE("gram-schmidt box representative examples") {
  auto basis = hnf_basis({{Int(3), Int(5)}, Int(7)});

  auto at_origin = gs_box_representative(basis, {Int(0), Int(0)});
  CHECK(at_origin.lattice_point == IntVec{Int(0), Int(0)});
  CHECK(at_origin.coefficients == RatVec{Rat(0), Rat(0)});

  // back-substitution by hand gives y = (-4, 1), coefficients (5/7, 0)
  auto rep = gs_box_representative(basis, {Int(1), Int(1)});
  CHECK(rep.lattice_point == IntVec{Int(-4), Int(1)});
  CHECK(rep.coefficients == RatVec{make_rat(5, 7), Rat(0)});
  CHECK(mod_nonneg(3 * Int(-4) + 5 * Int(1), Int(7)) == 0);

  auto one_dim = gs_box_representative(hnf_basis({{Int(1)}, Int(5)}), {Int(12)});
  CHECK(one_dim.lattice_point == IntVec{Int(10)});
  CHECK(one_dim.coefficients == RatVec{make_rat(2, 5)});
}

TEST_CASE("box representative reproduces the input exactly") {
  CongruenceLattice lattice{{Int(3), Int(5)}, Int(7)};
  auto basis = hnf_basis(lattice);
  auto gs = gram_schmidt_rows(basis);
  for (long x0 = -6; x0 <= 6; ++x0) {
    for (long x1 = -6; x1 <= 6; ++x1) {
      IntVec x{Int(x0), Int(x1)};
      auto rep = gs_box_representative(basis, x);
      CHECK(lattice.contains(rep.lattice_point));
      RatVec recon(2, Rat(0));
      for (size_t i = 0; i < 2; ++i) {
        CHECK(sgn(rep.coefficients[i]) >= 0);
        CHECK(rep.coefficients[i] < 1);
        for (size_t k = 0; k < 2; ++k)
          recon[k] += rep.coefficients[i] * gs[i][k];
      }
      for (size_t k = 0; k < 2; ++k)
        CHECK(recon[k] + Rat(rep.lattice_point[k]) == Rat(x[k]));
    }
  }
}

TEST_CASE("residue classes") {
  auto classes = residue_classes({{Int(3), Int(5)}, Int(7)});
  REQUIRE(classes.size() == 7);
  for (size_t k = 0; k < 7; ++k) {
    CHECK(classes[k][0] == Int(static_cast<long>(k)));
    CHECK(classes[k][1] == 0);
  }

  CHECK(residue_classes({{Int(4), Int(9)}, Int(1)}) ==
        std::vector<IntVec>{IntVec{Int(0), Int(0)}});

  SUBCASE("pairwise incongruent and complete") {
    for (CongruenceLattice lattice :
         {CongruenceLattice{{Int(2), Int(3)}, Int(5)},
          CongruenceLattice{{Int(2), Int(3)}, Int(4)},
          CongruenceLattice{{Int(6), Int(10), Int(15)}, Int(12)}}) {
      auto reps = residue_classes(lattice);
      REQUIRE(reps.size() == lattice.modulus.get_ui());
      for (size_t i = 0; i < reps.size(); ++i) {
        for (const Int& entry : reps[i]) CHECK(entry >= 0);
        for (size_t j = i + 1; j < reps.size(); ++j) {
          IntVec diff(reps[i].size());
          for (size_t k = 0; k < diff.size(); ++k)
            diff[k] = reps[i][k] - reps[j][k];
          CHECK_FALSE(lattice.contains(diff));
        }
      }
    }
  }
}

TEST_CASE("simplex covering check") {
  CHECK(check_simplex_covering({{Int(3), Int(5)}, Int(7)}).covered);
  CHECK(check_simplex_covering({{Int(9), Int(4)}, Int(1)}).covered);
  CHECK(check_simplex_covering({{Int(1), Int(1)}, Int(4)}).covered);

  SUBCASE("sweep stays covered") {
    for (long m = 1; m <= 30; ++m) {
      const long hi = m > 1 ? m - 1 : 0;
      for (long w0 = 0; w0 <= hi; ++w0) {
        for (long w1 = 0; w1 <= hi; ++w1) {
          CongruenceLattice lattice{{Int(w0), Int(w1)}, Int(m)};
          if (!lattice.is_primitive()) continue;
          CHECK(check_simplex_covering(lattice).covered);
        }
      }
    }
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 150; ++trial) {
      long m = 1 + static_cast<long>(rng() % 30);
      IntVec w{Int(static_cast<long>(rng() % 60) - 30),
               Int(static_cast<long>(rng() % 60) - 30),
               Int(static_cast<long>(rng() % 60) - 30)};
      CongruenceLattice lattice{w, Int(m)};
      if (!lattice.is_primitive()) continue;
      CHECK(check_simplex_covering(lattice).covered);
    }
  }

  SUBCASE("scale refusal above caps") {
    CHECK_THROWS_AS(check_simplex_covering({{Int(1), Int(1)}, Int(101)}),
                    ScaleRefusal);
  }
}
