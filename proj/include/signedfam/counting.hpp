#pragma once

// Exact evaluation of the size formulas, bounds and sign quantities for
// non-trivial t-intersecting families of signed sets.
//
// Binomials follow the combinatorial convention C(m, j) = 0 whenever j < 0,
// j > m or m < 0, so boundary cases such as r = t+1 zero out the
// k^{r-t-2} terms without special-casing.

#include <boost/multiprecision/cpp_int.hpp>

#include "signedfam/core.hpp"

namespace signedfam {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(m, j) with the zero convention above.
BigInt binomial(long m, long j);
/// k^e for e >= 0.
BigInt power(long k, long e);
/// C(m, j) k^j: the number of ways to extend a signed set by j points
/// drawn from m free columns. Zero when j < 0.
BigInt extensions(long m, long j, long k);
/// Smallest integer >= q.
BigInt ceil(const Rational& q);

struct SignedValue {
  int sign = 0; // -1, 0 or +1
  Rational value;
};

struct SlcCheck {
  bool equal = false;
  BigInt lhs; // f(n,r,k,a,t)
  BigInt rhs; // sum_i (3i - i^2)/2 |N_{t+i}(M_a, M_t)|
};

/// f(n,r,k,d,t) = (d-t) C(n-t-1,r-t-1) k^{r-t-1} - C(d-t,2) C(n-t-2,r-t-2) k^{r-t-2}.
/// Signed: the second term dominates for large d. RangeError unless t <= d <= n.
BigInt f_value(const Params& params, int d);

/// g(n,r,t) = ((r-t+3)(r-t-1)/(n-t-1)) max{C(t+2,2), (r-t+1)/2}.
/// DomainError when n <= t+1; RangeError when r < t+1.
Rational g_value(int n, int r, int t);
/// k >= max{2, g(n,r,t)}, compared exactly.
bool k_meets_threshold(const Params& params);
/// ceil(max{2, g(n,r,t)}).
BigInt k_threshold(int n, int r, int t);

/// Members of L_{n,r,k} containing a fixed s-point signed set. RangeError when |s| > r.
BigInt count_supersets(int s_size, const Params& params);
BigInt count_supersets(const SignedSet& s, const Params& params);

/// |N_b(M_a, M_t)| = |{F : M_t ⊆ F, |F ∩ M_a| = b}|.
/// RangeError unless t+1 <= b <= min(a, r) and t+1 <= a <= n.
BigInt count_N(int b, int a, const Params& params);

/// Double-counting identity f(a) = sum_{i=1}^{a-t} ((3i-i^2)/2) |N_{t+i}(M_a, M_t)|.
/// RangeError unless t+1 <= a <= min(r+1, n).
SlcCheck check_slc_identity(const Params& params, int a);

/// |H1(n,r,k,ell,t)|. RangeError unless r >= t+1 and t+2 <= ell <= min(r+1, n).
BigInt size_h1_closed(const Params& params, int ell);
/// |H2(n,r,k,c,t)|. RangeError unless r >= t+2 and r+2 <= c <= min(2r-t, n).
BigInt size_h2_closed(const Params& params, int c);
/// The branch sizes of H2, in definition order.
struct H2Branches {
  BigInt through_prefix; // M_t ⊆ F, |F ∩ M_r| >= t+1
  BigInt tail;           // F ∩ M_r = M_t, M_c \ M_r ⊆ F
  BigInt near_miss;      // M_t ⊄ F, |F ∩ M_r| = r-1, |F ∩ (M_c \ M_r)| = 1
};
H2Branches size_h2_branches(const Params& params, int c);

/// Upper bound for maximal families with covering number t+1 and a unique minimum cover.
BigInt bound_unique_cover(const Params& params);
/// Upper bound for covering number t+1, several minimum covers whose own
/// covering number is t, and cover union of size ell. RangeError when ell < t+2.
BigInt bound_multi_cover(const Params& params, int ell);
/// Upper bound for covering number >= t+2. RangeError when r < t+2.
BigInt bound_large_tau(const Params& params);

/// (|H1(t+2)| - |H1(p)|) / (C(n-t-2,r-t-2) k^{r-t-2}).
/// DomainError when r = t+1 or n < t+3.
SignedValue mu_sign(const Params& params);
/// (f(n,r,k,r,t) - family_size) / (C(n-t-2,r-t-2) k^{r-t-2}). DomainError when r = t+1.
SignedValue phi_sign(const Params& params, const BigInt& family_size);

} // namespace signedfam
