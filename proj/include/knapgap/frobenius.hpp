#pragma once

#include "knapgap/config.hpp"
#include "knapgap/numeric.hpp"

namespace knapgap {

/// g together with the table of minimal semigroup elements per residue
/// class mod the smallest generator. g = max(table) - min_i a_i, with the
/// convention g = -1 when some a_i = 1.
struct FrobeniusResult {
  Int g;
  std::vector<Int> apery;  // indexed by residue mod the pivot entry
  size_t pivot;            // index of the smallest entry
};

struct CoveringRadii {
  Int continuous;  // g + a_1 + ... + a_n
  Int discrete;    // g + a_n, a_n = designated last coordinate
};

/// Largest integer not representable as a nonnegative combination of the
/// (all-positive, primitive) entries. Residue shortest path over the
/// smallest entry; ties broken by lowest index.
FrobeniusResult frobenius_number(const IntVec& a, const Caps& caps = Caps{});

/// g(|a_1|,...,|a_n|) + sum |a_i| for primitive nonzero-entry `a`.
Int f_plus(const IntVec& a, const Caps& caps = Caps{});

/// (min a) * (max a) - min a - max a.
Int schur_bound(const IntVec& a);

/// Covering radii of the scaled simplex with respect to the projection
/// lattice via the closed-form identities; no brute force.
CoveringRadii kannan_radii(const IntVec& a, const Caps& caps = Caps{});

/// Independent oracle for the discrete radius: maximum over the residue
/// classes mod a_n of the minimal value a_1 x_1 + ... + a_{n-1} x_{n-1}
/// over nonnegative class members, by direct enumeration of x in
/// [0, a_n)^{n-1}. Desk scale only.
Int discrete_radius_bruteforce(const IntVec& a, const Caps& caps = Caps{});

}  // namespace knapgap
