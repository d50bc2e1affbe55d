#include "knapgap/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace knapgap {

Int gcd_vector(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Int linf_norm(const IntVec& v) {
  Int m = 0;
  for (const Int& x : v) {
    Int a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

Int l1_norm(const IntVec& v) {
  Int s = 0;
  for (const Int& x : v) s += abs(x);
  return s;
}

Rat l1_norm(const RatVec& v) {
  Rat s = 0;
  for (const Rat& x : v) s += rat_abs(x);
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot_rat(const RatVec& c, const IntVec& x) {
  Rat s = 0;
  for (size_t i = 0; i < c.size(); ++i) s += c[i] * Rat(x[i]);
  return s;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  if (sgn(b) > 0) {
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  } else {
    Int na = -a, nb = -b;
    mpz_fdiv_q(q.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
  }
  return q;
}

Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (sgn(r) < 0) r += abs(m);
  return r;
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
  // canonical base stays canonical under coordinatewise powers
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_abs(const Rat& q) { return sgn(q) < 0 ? Rat(-q) : q; }

std::optional<Int> solve_congruence(const Int& w, const Int& t, const Int& m) {
  if (m == 1) return Int(0);
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), w.get_mpz_t(),
             m.get_mpz_t());
  if (!mpz_divisible_p(t.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
  Int mg = m / g;
  Int x = mod_nonneg(u * (t / g), abs(mg));
  return x;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

std::string to_decimal(const Rat& v) { return v.get_str(); }

std::optional<Int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
  return Int(s);
}

std::optional<Rat> parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    auto n = parse_int(s);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto num = parse_int(s.substr(0, slash));
  auto den = parse_int(s.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return make_rat(*num, *den);
}

namespace {
template <typename T, typename Parse>
std::optional<std::vector<T>> parse_list(const std::string& s, Parse parse) {
  std::vector<T> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto v = parse(item);
    if (!v) return std::nullopt;
    out.push_back(*v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) return std::nullopt;
  return out;
}
}  // namespace

std::optional<IntVec> parse_int_vector(const std::string& s) {
  return parse_list<Int>(s, parse_int);
}

std::optional<RatVec> parse_rat_vector(const std::string& s) {
  return parse_list<Rat>(s, parse_rat);
}

int RootVal::compare(const Rat& q) const {
  if (sgn(q) < 0) return 1;  // value >= 0 > q
  if (degree == 1) return cmp(radicand, q);
  return cmp(radicand, rat_pow(q, degree));
}

double RootVal::to_double() const {
  double base = radicand.get_d();
  if (degree == 1) return base;
  return std::pow(base, 1.0 / static_cast<double>(degree));
}

std::string RootVal::decimal() const { return format_double(to_double()); }

RootVal scaled_power_ratio(const Rat& num, const Int& den, const Rat& eps) {
  if (sgn(eps) < 0) throw std::invalid_argument("exponent must be nonnegative");
  if (!eps.get_den().fits_ulong_p() || !eps.get_num().fits_ulong_p() ||
      eps.get_den().get_ui() > 64 || eps.get_num().get_ui() > 64)
    throw std::invalid_argument("exponent numerator/denominator too large");
  unsigned long q = eps.get_den().get_ui();
  unsigned long p = eps.get_num().get_ui();
  Rat radicand = rat_pow(num, q) / Rat(int_pow(den, p));
  radicand.canonicalize();
  return RootVal{radicand, static_cast<unsigned>(q)};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

}  // namespace knapgap
