#include "knapgap/core_lattice.hpp"

#include <cassert>
#include <stdexcept>

namespace knapgap {

bool CongruenceLattice::contains(const IntVec& x) const {
  return mod_nonneg(dot(weights, x), modulus) == 0;
}

bool CongruenceLattice::is_primitive() const {
  Int g = gcd_vector(weights);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), modulus.get_mpz_t());
  return g == 1;
}

VectorVerdict validate_knapsack_vector(const IntVec& a) {
  VectorVerdict v;
  if (a.size() < 2) {
    v.defect = VectorDefect::TooShort;
    v.message = "invalid knapsack vector: need at least 2 entries";
    return v;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      v.defect = VectorDefect::ZeroEntry;
      v.index = i;
      v.message =
          "invalid knapsack vector: zero entry at index " + std::to_string(i);
      return v;
    }
  }
  v.gcd = gcd_vector(a);
  if (v.gcd != 1) {
    v.defect = VectorDefect::NotPrimitive;
    v.message = "invalid knapsack vector: gcd = " + to_decimal(v.gcd) +
                ", expected a primitive vector";
    return v;
  }
  v.ok = true;
  return v;
}

namespace {

// Any integer solution of sum_j w_j x_j == t (mod m); requires
// gcd(m, w_0..w_{k-1}) | t. Entries are reduced mod m.
IntVec solve_multi_congruence(const IntVec& w, size_t k, const Int& t,
                              const Int& m) {
  IntVec chain(k + 1);  // chain[j] = gcd(m, w_0..w_{j-1})
  chain[0] = m;
  for (size_t j = 0; j < k; ++j) {
    mpz_gcd(chain[j + 1].get_mpz_t(), chain[j].get_mpz_t(),
            w[j].get_mpz_t());
  }
  IntVec x(k, 0);
  Int target = t;
  for (size_t j = k; j >= 1; --j) {
    Int g, u, s;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), s.get_mpz_t(),
               chain[j - 1].get_mpz_t(), w[j - 1].get_mpz_t());
    assert(g == chain[j]);
    assert(mpz_divisible_p(target.get_mpz_t(), g.get_mpz_t()));
    Int q = target / g;
    x[j - 1] = mod_nonneg(s * q, m);
    target -= w[j - 1] * x[j - 1];
  }
  assert(mpz_divisible_p(target.get_mpz_t(), m.get_mpz_t()));
  return x;
}

}  // namespace

HnfBasis hnf_basis(const CongruenceLattice& lattice) {
  if (lattice.modulus < 1)
    throw std::invalid_argument("hnf_basis: modulus must be >= 1");
  if (!lattice.is_primitive())
    throw std::invalid_argument(
        "hnf_basis: lattice is not full rank with determinant = modulus");
  const size_t d = lattice.dim();
  const Int& m = lattice.modulus;
  const IntVec& w = lattice.weights;

  HnfBasis basis;
  basis.rows.assign(d, IntVec(d, 0));
  basis.det = 1;

  // chain of gcds g_i = gcd(m, w_0..w_{i-1}); diagonal v_ii = g_i / g_{i+1}
  Int g_prev = m;
  for (size_t i = 0; i < d; ++i) {
    Int g_next;
    mpz_gcd(g_next.get_mpz_t(), g_prev.get_mpz_t(), w[i].get_mpz_t());
    Int diag = g_prev / g_next;
    basis.rows[i][i] = diag;
    basis.det *= diag;

    // off-diagonal entries solve w_0 x_0 + .. + w_{i-1} x_{i-1}
    // == -w_i * diag (mod m)
    if (i > 0) {
      IntVec x = solve_multi_congruence(w, i, -(w[i] * diag), m);
      for (size_t j = 0; j < i; ++j) basis.rows[i][j] = x[j];
      // reduce below earlier rows so 0 <= v_ij < v_jj
      for (size_t j = i; j-- > 0;) {
        Int q = floor_div(basis.rows[i][j], basis.rows[j][j]);
        if (q != 0) {
          for (size_t col = 0; col <= j; ++col)
            basis.rows[i][col] -= q * basis.rows[j][col];
        }
      }
    }
    g_prev = g_next;
  }
  assert(g_prev == 1);
  assert(basis.det == m);
  for (size_t i = 0; i < d; ++i) assert(lattice.contains(basis.rows[i]));
  return basis;
}

BoxRepresentative gs_box_representative(const HnfBasis& basis,
                                        const IntVec& x) {
  const size_t d = basis.dim();
  if (x.size() != d)
    throw std::invalid_argument("gs_box_representative: dimension mismatch");

  // Gram-Schmidt vectors of the rows, exact rationals.
  std::vector<RatVec> gs(d, RatVec(d, Rat(0)));
  std::vector<Rat> norm2(d);
  for (size_t i = 0; i < d; ++i) {
    for (size_t k = 0; k < d; ++k) gs[i][k] = Rat(basis.rows[i][k]);
    for (size_t j = 0; j < i; ++j) {
      Rat ip = 0;
      for (size_t k = 0; k < d; ++k) ip += Rat(basis.rows[i][k]) * gs[j][k];
      Rat mu = ip / norm2[j];
      for (size_t k = 0; k < d; ++k) gs[i][k] -= mu * gs[j][k];
    }
    norm2[i] = 0;
    for (size_t k = 0; k < d; ++k) norm2[i] += gs[i][k] * gs[i][k];
  }

  RatVec cur(d);
  for (size_t k = 0; k < d; ++k) cur[k] = Rat(x[k]);
  IntVec y(d, 0);
  for (size_t i = d; i-- > 0;) {
    Rat lambda = 0;
    for (size_t k = 0; k < d; ++k) lambda += cur[k] * gs[i][k];
    lambda /= norm2[i];
    Int steps = floor_rat(lambda);
    if (steps != 0) {
      for (size_t k = 0; k < d; ++k) {
        cur[k] -= Rat(steps * basis.rows[i][k]);
        y[k] += steps * basis.rows[i][k];
      }
    }
  }

  BoxRepresentative rep;
  rep.lattice_point = std::move(y);
  rep.coefficients.assign(d, Rat(0));
  for (size_t i = 0; i < d; ++i) {
    Rat lambda = 0;
    for (size_t k = 0; k < d; ++k) lambda += cur[k] * gs[i][k];
    lambda /= norm2[i];
    assert(sgn(lambda) >= 0 && lambda < 1);
    rep.coefficients[i] = lambda;
  }
  return rep;
}

std::vector<IntVec> residue_classes(const CongruenceLattice& lattice) {
  if (lattice.modulus < 1)
    throw std::invalid_argument("residue_classes: modulus must be >= 1");
  if (!lattice.is_primitive())
    throw std::invalid_argument(
        "residue_classes: lattice determinant differs from modulus");
  const Int& m = lattice.modulus;
  const size_t d = lattice.dim();
  if (!m.fits_ulong_p())
    throw ScaleRefusal("residue_classes: modulus too large to enumerate");
  size_t count = m.get_ui();

  std::vector<IntVec> reps;
  reps.reserve(count);

  Int g0;
  mpz_gcd(g0.get_mpz_t(), lattice.weights[0].get_mpz_t(), m.get_mpz_t());
  if (g0 == 1) {
    for (size_t k = 0; k < count; ++k) {
      IntVec r(d, 0);
      r[0] = Int(static_cast<unsigned long>(k));
      reps.push_back(std::move(r));
    }
    return reps;
  }

  // lexicographically smallest nonnegative representative, per class value
  IntVec suffix_gcd(d + 1);  // gcd(m, w_i..w_{d-1})
  suffix_gcd[d] = m;
  for (size_t i = d; i-- > 0;) {
    mpz_gcd(suffix_gcd[i].get_mpz_t(), suffix_gcd[i + 1].get_mpz_t(),
            lattice.weights[i].get_mpz_t());
  }
  for (size_t rho = 0; rho < count; ++rho) {
    IntVec r(d, 0);
    Int rest(static_cast<unsigned long>(rho));
    for (size_t i = 0; i < d; ++i) {
      const Int& mod_i = (i + 1 < d) ? suffix_gcd[i + 1] : m;
      auto xi = solve_congruence(lattice.weights[i], rest, mod_i);
      assert(xi.has_value());
      r[i] = *xi;
      rest -= lattice.weights[i] * r[i];
    }
    assert(mpz_divisible_p(rest.get_mpz_t(), m.get_mpz_t()));
    reps.push_back(std::move(r));
  }
  return reps;
}

CoveringCheck check_simplex_covering(const CongruenceLattice& lattice,
                                     const Caps& caps) {
  if (!lattice.is_primitive())
    throw std::invalid_argument("check_simplex_covering: non-primitive lattice");
  const size_t d = lattice.dim();
  if (d > caps.simplex_dim_cap ||
      lattice.modulus > static_cast<unsigned long>(caps.simplex_det_cap))
    throw ScaleRefusal("check_simplex_covering: instance above configured caps");
  size_t m = lattice.modulus.get_ui();

  std::vector<char> covered(m, 0);
  size_t remaining = m;

  // odometer over z >= 0 with sum <= m - 1
  IntVec z(d, 0);
  Int budget = lattice.modulus - 1;
  Int used = 0;
  while (true) {
    Int value = mod_nonneg(dot(lattice.weights, z), lattice.modulus);
    size_t slot = value.get_ui();
    if (!covered[slot]) {
      covered[slot] = 1;
      if (--remaining == 0) break;
    }
    // advance
    size_t i = 0;
    for (; i < d; ++i) {
      if (used < budget) {
        z[i] += 1;
        used += 1;
        break;
      }
      used -= z[i];
      z[i] = 0;
    }
    if (i == d) break;
  }

  CoveringCheck result;
  if (remaining == 0) return result;
  for (size_t rho = 0; rho < m; ++rho) {
    if (!covered[rho]) {
      result.covered = false;
      result.uncovered_class = Int(static_cast<unsigned long>(rho));
      auto reps = residue_classes(lattice);
      // reps are ordered by k or by class value; find the matching class
      for (const auto& r : reps) {
        if (mod_nonneg(dot(lattice.weights, r), lattice.modulus) ==
            result.uncovered_class) {
          result.uncovered_rep = r;
          break;
        }
      }
      break;
    }
  }
  return result;
}

}  // namespace knapgap
