#include "knapgap/frobenius.hpp"

#include <stdexcept>

#include "knapgap/detail/modular_paths.hpp"

namespace knapgap {

namespace {

void require_positive_primitive(const IntVec& a, const char* who) {
  if (a.empty()) throw std::invalid_argument(std::string(who) + ": empty vector");
  for (const Int& x : a)
    if (sgn(x) <= 0)
      throw std::invalid_argument(std::string(who) + ": entries must be positive");
  if (gcd_vector(a) != 1)
    throw std::invalid_argument(std::string(who) + ": gcd must be 1");
}

}  // namespace

FrobeniusResult frobenius_number(const IntVec& a, const Caps& caps) {
  require_positive_primitive(a, "frobenius_number");
  size_t piv = 0;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] < a[piv]) piv = i;
  const Int& p = a[piv];
  if (p > static_cast<unsigned long>(caps.residue_table_cap))
    throw ScaleRefusal("frobenius_number: residue count above cap");
  size_t m = p.get_ui();

  std::vector<size_t> steps;
  std::vector<Int> costs;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i == piv) continue;
    steps.push_back(mod_nonneg(a[i], p).get_ui());
    costs.push_back(a[i]);
  }
  auto paths = detail::modular_shortest_paths<Int>(m, steps, costs);

  FrobeniusResult out;
  out.pivot = piv;
  out.apery = std::move(paths.dist);
  out.g = out.apery[0];
  for (const Int& v : out.apery)
    if (v > out.g) out.g = v;
  out.g -= p;
  return out;
}

Int f_plus(const IntVec& a, const Caps& caps) {
  IntVec plus(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      throw std::invalid_argument("f_plus: entries must be nonzero");
    plus[i] = abs(a[i]);
  }
  if (gcd_vector(plus) != 1)
    throw std::invalid_argument("f_plus: gcd must be 1");
  return frobenius_number(plus, caps).g + l1_norm(a);
}

Int schur_bound(const IntVec& a) {
  require_positive_primitive(a, "schur_bound");
  Int amin = a[0], amax = a[0];
  for (const Int& x : a) {
    if (x < amin) amin = x;
    if (x > amax) amax = x;
  }
  return amin * amax - amin - amax;
}

CoveringRadii kannan_radii(const IntVec& a, const Caps& caps) {
  require_positive_primitive(a, "kannan_radii");
  if (a.size() < 2)
    throw std::invalid_argument("kannan_radii: need at least 2 entries");
  Int g = frobenius_number(a, caps).g;
  CoveringRadii radii;
  radii.continuous = g + l1_norm(a);
  radii.discrete = g + a.back();
  return radii;
}

Int discrete_radius_bruteforce(const IntVec& a, const Caps& caps) {
  require_positive_primitive(a, "discrete_radius_bruteforce");
  if (a.size() < 2)
    throw std::invalid_argument("discrete_radius_bruteforce: need n >= 2");
  const Int& an = a.back();
  const size_t d = a.size() - 1;
  if (d > caps.simplex_dim_cap ||
      an > static_cast<unsigned long>(caps.simplex_det_cap))
    throw ScaleRefusal("discrete_radius_bruteforce: above configured caps");
  size_t m = an.get_ui();

  // per-residue minima of a_1 x_1 + .. + a_{n-1} x_{n-1}; each x_i can be
  // reduced mod a_n without leaving its class, so [0, a_n)^{n-1} suffices
  std::vector<Int> best(m);
  std::vector<char> seen(m, 0);
  const IntVec prefix(a.begin(), a.end() - 1);
  IntVec x(d, 0);
  while (true) {
    Int value = dot(prefix, x);
    size_t rho = mod_nonneg(value, an).get_ui();
    if (!seen[rho] || value < best[rho]) {
      seen[rho] = 1;
      best[rho] = value;
    }
    bool advanced = false;
    for (size_t i = d; i-- > 0;) {
      if (x[i] + 1 < an) {
        x[i] += 1;
        advanced = true;
        break;
      }
      x[i] = 0;
    }
    if (!advanced) break;
  }
  Int radius = 0;
  for (size_t rho = 0; rho < m; ++rho) {
    // primitivity of a guarantees every class is hit
    if (!seen[rho])
      throw std::logic_error("discrete_radius_bruteforce: unreached class");
    if (best[rho] > radius) radius = best[rho];
  }
  return radius;
}

}  // namespace knapgap
