#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace knapgap {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// gcd of absolute values; 0 only if every entry is 0.
Int gcd_vector(const IntVec& v);

Int linf_norm(const IntVec& v);
Int l1_norm(const IntVec& v);
Rat l1_norm(const RatVec& v);

Int dot(const IntVec& a, const IntVec& b);
Rat dot_rat(const RatVec& c, const IntVec& x);

inline int sign(const Int& x) { return sgn(x); }

/// Floor division (quotient rounded toward -inf); b != 0.
Int floor_div(const Int& a, const Int& b);

/// Representative of a mod m in [0, m); m >= 1.
Int mod_nonneg(const Int& a, const Int& m);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

/// Canonicalized rational from a numerator/denominator pair.
Rat make_rat(const Int& num, const Int& den);

Rat rat_pow(const Rat& base, unsigned long e);
Int int_pow(const Int& base, unsigned long e);

Rat rat_abs(const Rat& q);

/// Smallest nonnegative x with w*x == t (mod m), if solvable. m >= 1.
std::optional<Int> solve_congruence(const Int& w, const Int& t, const Int& m);

std::string to_decimal(const Int& v);
/// Canonical "p/q", or plain "p" for integers.
std::string to_decimal(const Rat& v);

std::optional<Int> parse_int(const std::string& s);
std::optional<Rat> parse_rat(const std::string& s);
/// Comma-separated signed integers, e.g. "3,5,-7".
std::optional<IntVec> parse_int_vector(const std::string& s);
std::optional<RatVec> parse_rat_vector(const std::string& s);

// Exact nonnegative k-th root expression: value = radicand^(1/degree).
// Irrational quantities are kept in this form and compared by raising the
// rational side to the k-th power; floating output happens only at the
// reporting boundary.
struct RootVal {
  Rat radicand;     // >= 0
  unsigned degree;  // >= 1

  static RootVal exact(const Rat& value) { return RootVal{value, 1}; }

  /// sign of (value - q)
  int compare(const Rat& q) const;
  bool operator>(const Rat& q) const { return compare(q) > 0; }
  bool operator<=(const Rat& q) const { return compare(q) <= 0; }

  double to_double() const;
  /// Decimal rendering with 12 significant digits.
  std::string decimal() const;
};

/// value^(1/1) ratios of the form num / den^eps with eps = p/q:
/// returns RootVal{ num^q / den^p, q }. Requires eps >= 0 with small
/// numerator/denominator (guarded).
RootVal scaled_power_ratio(const Rat& num, const Int& den, const Rat& eps);

std::string format_double(double v);

}  // namespace knapgap
