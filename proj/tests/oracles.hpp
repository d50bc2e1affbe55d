#pragma once

// Independent brute-force oracles for the unit tests. These deliberately
// avoid the library's pivot-solving and shortest-path machinery so that
// agreement between the two routes is meaningful.

#include <numeric>
#include <optional>
#include <vector>

#include "knapgap/numeric.hpp"

namespace knapgap::oracle {

// All nonnegative integer points of a.x == b inside [0, hi]^n, by a plain
// n-dimensional loop.
inline std::vector<IntVec> brute_fiber(const IntVec& a, const Int& b, long hi) {
  std::vector<IntVec> out;
  const size_t n = a.size();
  std::vector<long> x(n, 0);
  while (true) {
    Int s = 0;
    for (size_t i = 0; i < n; ++i) s += a[i] * Int(x[i]);
    if (s == b) {
      IntVec p(n);
      for (size_t i = 0; i < n; ++i) p[i] = Int(x[i]);
      out.push_back(p);
    }
    bool advanced = false;
    for (size_t i = n; i-- > 0;) {
      if (x[i] < hi) {
        x[i] += 1;
        advanced = true;
        break;
      }
      x[i] = 0;
    }
    if (!advanced) break;
  }
  return out;
}

// Frobenius number via a representability table on [0, limit]; the caller
// must pick limit comfortably above the answer (a run of min(a) consecutive
// representable values certifies termination).
inline std::optional<Int> brute_frobenius(const std::vector<long>& a,
                                          long limit) {
  std::vector<char> rep(static_cast<size_t>(limit) + 1, 0);
  rep[0] = 1;
  for (long v = 1; v <= limit; ++v) {
    for (long g : a) {
      if (v - g >= 0 && rep[static_cast<size_t>(v - g)]) {
        rep[static_cast<size_t>(v)] = 1;
        break;
      }
    }
  }
  long run = 0;
  long amin = a[0];
  for (long g : a) amin = std::min(amin, g);
  long frob = -1;
  for (long v = limit; v >= 1; --v) {
    if (!rep[static_cast<size_t>(v)]) {
      frob = v;
      break;
    }
    ++run;
  }
  if (run < amin) return std::nullopt;  // limit too small to certify
  return Int(frob);
}

// Minimal cost over x in [0, xmax]^k with weights.x == rho (mod modulus).
inline std::optional<Rat> brute_group_min(const IntVec& weights,
                                          const Int& modulus,
                                          const RatVec& costs, const Int& rho,
                                          long xmax) {
  const size_t k = weights.size();
  std::vector<long> x(k, 0);
  std::optional<Rat> best;
  while (true) {
    Int value = 0;
    for (size_t i = 0; i < k; ++i) value += weights[i] * Int(x[i]);
    if (mod_nonneg(value - rho, modulus) == 0) {
      Rat cost = 0;
      for (size_t i = 0; i < k; ++i) cost += costs[i] * Rat(Int(x[i]));
      if (!best || cost < *best) best = cost;
    }
    bool advanced = false;
    for (size_t i = k; i-- > 0;) {
      if (x[i] < xmax) {
        x[i] += 1;
        advanced = true;
        break;
      }
      x[i] = 0;
    }
    if (!advanced) break;
  }
  return best;
}

// Count of primitive nonzero-entry vectors in [-H, H]^n, by enumeration.
inline unsigned long count_Q(size_t n, long H) {
  std::vector<long> v(n, -H);
  unsigned long count = 0;
  while (true) {
    bool zero = false;
    for (long x : v)
      if (x == 0) zero = true;
    if (!zero) {
      long g = 0;
      for (long x : v) g = std::gcd(g, std::labs(x));
      if (g == 1) ++count;
    }
    bool advanced = false;
    for (size_t i = n; i-- > 0;) {
      if (v[i] < H) {
        v[i] += 1;
        advanced = true;
        break;
      }
      v[i] = -H;
    }
    if (!advanced) break;
  }
  return count;
}

}  // namespace knapgap::oracle
