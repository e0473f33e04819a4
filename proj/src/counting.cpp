#include "signedfam/counting.hpp"

#include <algorithm>
#include <string>

namespace signedfam {

namespace {

std::string s(long v) { return std::to_string(v); }

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// |N_b(M_a, M_t)| without range checks; zero outside the meaningful range.
BigInt n_count(long b, long a, long n, long r, long k, long t) {
  if (b < t || b > a || b > r || a > n) return 0;
  BigInt tail = 0;
  // j of the a-b unmatched prefix columns carry a sign other than 1
  for (long j = 0; j <= a - b; ++j)
    tail += binomial(a - b, j) * power(k - 1, j) * extensions(n - a, r - b - j, k);
  return binomial(a - t, b - t) * tail;
}

// C(n-t-2, r-t-2) k^{r-t-2}: the common scale of the phi and mu ratios.
BigInt second_scale(const Params& p) {
  return extensions(p.n() - p.t() - 2, p.r() - p.t() - 2, p.k());
}

} // namespace

BigInt binomial(long m, long j) {
  if (m < 0 || j < 0 || j > m) return 0;
  j = std::min(j, m - j);
  BigInt c = 1;
  for (long i = 1; i <= j; ++i) c = c * (m - j + i) / i;
  return c;
}

BigInt power(long k, long e) {
  if (e < 0) throw RangeError("negative exponent " + s(e));
  return boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(e));
}

BigInt extensions(long m, long j, long k) {
  if (j < 0 || j > m) return 0;
  return binomial(m, j) * power(k, j);
}

BigInt ceil(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;
  if (quot * den < num) ++quot;
  return quot;
}

BigInt f_value(const Params& p, int d) {
  const long n = p.n(), r = p.r(), k = p.k(), t = p.t();
  if (d < t || d > n) throw RangeError("f(n,r,k,d,t) needs t <= d <= n, got d = " + s(d));
  return BigInt(d - t) * extensions(n - t - 1, r - t - 1, k) -
         binomial(d - t, 2) * extensions(n - t - 2, r - t - 2, k);
}

Rational g_value(int n, int r, int t) {
  if (n <= t + 1) throw DomainError("g(n,r,t) needs n >= t+2, got n = " + s(n) + ", t = " + s(t));
  if (r < t + 1) throw RangeError("g(n,r,t) needs r >= t+1");
  Rational lead(BigInt((r - t + 3) * (r - t - 1)), BigInt(n - t - 1));
  Rational a(binomial(t + 2, 2));
  Rational b(BigInt(r - t + 1), BigInt(2));
  return lead * std::max(a, b);
}

bool k_meets_threshold(const Params& p) {
  return Rational(p.k()) >= g_value(p.n(), p.r(), p.t());
}

BigInt k_threshold(int n, int r, int t) {
  return std::max(BigInt(2), ceil(g_value(n, r, t)));
}

BigInt count_supersets(int s_size, const Params& p) {
  if (s_size < 0 || s_size > p.r())
    throw RangeError("superset count needs |s| <= r, got |s| = " + s(s_size));
  return extensions(p.n() - s_size, p.r() - s_size, p.k());
}

BigInt count_supersets(const SignedSet& set, const Params& p) {
  if (!set.valid_for(p.n(), p.k())) throw ParameterError("signed set is not valid for " + p.to_string());
  return count_supersets(set.size(), p);
}

BigInt count_N(int b, int a, const Params& p) {
  const int t = p.t();
  if (a < t + 1 || a > p.n()) throw RangeError("N_b(M_a,M_t) needs t+1 <= a <= n, got a = " + s(a));
  if (b < t + 1 || b > std::min(a, p.r()))
    throw RangeError("N_b(M_a,M_t) needs t+1 <= b <= min(a,r), got b = " + s(b));
  return n_count(b, a, p.n(), p.r(), p.k(), t);
}

SlcCheck check_slc_identity(const Params& p, int a) {
  const int t = p.t();
  if (a < t + 1 || a > p.p()) throw RangeError("identity check needs t+1 <= a <= min(r+1,n), got a = " + s(a));
  SlcCheck out;
  out.lhs = f_value(p, a);
  for (long i = 1; i <= a - t; ++i)
    out.rhs += BigInt((3 * i - i * i) / 2) * n_count(t + i, a, p.n(), p.r(), p.k(), t);
  out.equal = out.lhs == out.rhs;
  return out;
}

BigInt size_h1_closed(const Params& p, int ell) {
  const long n = p.n(), r = p.r(), k = p.k(), t = p.t();
  if (r < t + 1) throw RangeError("H1 needs r >= t+1");
  if (ell < t + 2 || ell > p.p())
    throw RangeError("H1 needs t+2 <= ell <= min(r+1,n), got ell = " + s(ell));
  BigInt through_prefix = 0;
  for (long b = t + 1; b <= std::min<long>(ell, r); ++b) through_prefix += n_count(b, ell, n, r, k, t);
  // one point of M_t is missing from F: its column is either unused or carries another sign
  BigInt near_miss = BigInt(t) * (extensions(n - ell, r - ell + 1, k) + BigInt(k - 1) * extensions(n - ell, r - ell, k));
  return through_prefix + near_miss;
}

H2Branches size_h2_branches(const Params& p, int c) {
  const long n = p.n(), r = p.r(), k = p.k(), t = p.t();
  if (r < t + 2) throw RangeError("H2 needs r >= t+2");
  if (n < r + 2) throw RangeError("H2 needs n >= r+2");
  if (c < r + 2 || c > std::min<long>(2 * r - t, n))
    throw RangeError("H2 needs r+2 <= c <= min(2r-t,n), got c = " + s(c));
  H2Branches out;
  for (long b = t + 1; b <= r; ++b) out.through_prefix += n_count(b, r, n, r, k, t);
  const long fixed = t + (c - r);
  for (long j = 0; j <= r - t; ++j)
    out.tail += binomial(r - t, j) * power(k - 1, j) * extensions(n - c, r - fixed - j, k);
  out.near_miss = BigInt(t) * BigInt(c - r);
  return out;
}

BigInt size_h2_closed(const Params& p, int c) {
  auto b = size_h2_branches(p, c);
  return b.through_prefix + b.tail + b.near_miss;
}

BigInt bound_unique_cover(const Params& p) {
  const long n = p.n(), r = p.r(), k = p.k(), t = p.t();
  if (r < t + 1) throw RangeError("bound needs r >= t+1");
  return extensions(n - t - 1, r - t - 1, k) + BigInt((t + 1) * (r - t) * (r - t)) * extensions(n - t - 2, r - t - 2, k);
}

BigInt bound_multi_cover(const Params& p, int ell) {
  const long n = p.n(), r = p.r(), k = p.k(), t = p.t();
  if (ell < t + 2) throw RangeError("bound needs ell >= t+2, got ell = " + s(ell));
  const BigInt first = extensions(n - t - 1, r - t - 1, k);
  const BigInt second = extensions(n - t - 2, r - t - 2, k);
  if (ell == t + 2) return 2 * first + BigInt((r - 1) * (r - t + 1)) * second;
  return BigInt(ell - t) * first + BigInt((r - ell + 1) * (r - t + 1) + t) * second;
}

BigInt bound_large_tau(const Params& p) {
  const long n = p.n(), r = p.r(), k = p.k(), t = p.t();
  if (r < t + 2) throw RangeError("bound needs r >= t+2");
  return BigInt((r - t + 1) * (r - t + 1)) * binomial(t + 2, 2) * extensions(n - t - 2, r - t - 2, k);
}

SignedValue mu_sign(const Params& p) {
  if (p.r() < p.t() + 2) throw DomainError("mu is undefined for r = t+1");
  if (p.n() < p.t() + 3) throw DomainError("mu needs n >= t+3");
  Rational value(size_h1_closed(p, p.t() + 2) - size_h1_closed(p, p.p()), second_scale(p));
  return {sign_of(value), value};
}

SignedValue phi_sign(const Params& p, const BigInt& family_size) {
  if (p.r() < p.t() + 2) throw DomainError("phi is undefined for r = t+1");
  Rational value(f_value(p, p.r()) - family_size, second_scale(p));
  return {sign_of(value), value};
}

} // namespace signedfam
