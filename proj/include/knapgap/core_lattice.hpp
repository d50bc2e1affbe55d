#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knapgap/config.hpp"
#include "knapgap/numeric.hpp"

namespace knapgap {

/// Sublattice of Z^d given by a single congruence:
///   Lambda = { x in Z^d : weights . x == 0 (mod modulus) }.
/// Full rank with determinant `modulus` exactly when
/// gcd(gcd(weights), modulus) == 1.
struct CongruenceLattice {
  IntVec weights;
  Int modulus;  // >= 1

  size_t dim() const { return weights.size(); }
  bool contains(const IntVec& x) const;
  /// true iff the lattice has determinant `modulus`
  bool is_primitive() const;
};

/// Lower-triangular basis with positive diagonal and reduced subdiagonal
/// entries: rows[i][i] > 0, 0 <= rows[i][j] < rows[j][j] for j < i, and
/// det == product of the diagonal.
struct HnfBasis {
  std::vector<IntVec> rows;
  Int det;

  size_t dim() const { return rows.size(); }
};

/// Lattice point y together with the coefficients of x - y in the
/// half-open Gram-Schmidt box of the basis: x - y = sum lambda_i bhat_i,
/// 0 <= lambda_i < 1.
struct BoxRepresentative {
  IntVec lattice_point;
  RatVec coefficients;
};

enum class VectorDefect { None, TooShort, ZeroEntry, NotPrimitive };

struct VectorVerdict {
  bool ok = false;
  VectorDefect defect = VectorDefect::None;
  size_t index = 0;  // offending entry for ZeroEntry
  Int gcd;
  std::string message;
};

/// Accepts iff dim >= 2, all entries nonzero and gcd == 1. The verdict
/// names the violated clause.
VectorVerdict validate_knapsack_vector(const IntVec& a);

/// Unique lower-triangular basis of a full-rank congruence lattice,
/// computed by column-style reduction on the congruence description.
/// Throws std::invalid_argument when gcd(gcd(weights), modulus) != 1.
HnfBasis hnf_basis(const CongruenceLattice& lattice);

/// Back-substitution into the half-open Gram-Schmidt box: returns y in the
/// lattice spanned by `basis` with x - y = sum lambda_i bhat_i, all
/// lambda_i in [0,1). Exact rational arithmetic throughout.
BoxRepresentative gs_box_representative(const HnfBasis& basis, const IntVec& x);

/// Exactly det(Lambda) coset representatives of Z^d / Lambda. Canonical
/// choice: (k,0,...,0) for k = 0..m-1 when gcd(weights[0], m) == 1,
/// otherwise the lexicographically smallest nonnegative representative per
/// class, listed by class value weights.x mod m.
std::vector<IntVec> residue_classes(const CongruenceLattice& lattice);

struct CoveringCheck {
  bool covered = true;
  Int uncovered_class;        // class value when covered == false
  IntVec uncovered_rep;       // canonical representative of that class
};

/// Brute-force check that the (det-1)-dilated standard simplex translated
/// by the lattice covers Z^d: every residue class must contain a
/// nonnegative point with coordinate sum <= det - 1.
CoveringCheck check_simplex_covering(const CongruenceLattice& lattice,
                                     const Caps& caps = Caps{});

}  // namespace knapgap
