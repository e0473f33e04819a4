#include "doctest.h"
#include "oracles.hpp"
#include "signedfam/counting.hpp"

using namespace signedfam;

namespace {

// |{F : M_t ⊆ F, |F ∩ M_a| = b}| by listing the universe.
BigInt n_by_listing(int n, int r, int k, int t, int a, int b) {
  BigInt c = 0;
  for (const auto& f : oracle::universe(n, r, k))
    if (oracle::contains(f, oracle::prefix(t)) && oracle::meet(f, oracle::prefix(a)) == b) ++c;
  return c;
}

} // namespace

TEST_CASE("binomials and powers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  CHECK(power(3, 0) == 1);
  CHECK(power(2, 100) == BigInt("1267650600228229401496703205376"));
  CHECK(extensions(4, 2, 3) == 54);
  CHECK(extensions(4, -1, 3) == 0);
  CHECK(ceil(Rational(15, 2)) == 8);
  CHECK(ceil(Rational(15)) == 15);
  CHECK(ceil(Rational(-3, 2)) == -1);
}

TEST_CASE("f(n,r,k,d,t)") {
  CHECK(f_value(Params(4, 3, 2, 1), 3) == 7);
  for (int n = 3; n <= 8; ++n)
    for (int t = 1; t + 1 <= n; ++t) {
      CHECK(f_value(Params(n, t + 1, 3, t), t + 1) == 1);
      CHECK(f_value(Params(n, t + 1, 3, t), t) == 0);
    }
  CHECK_THROWS_AS(f_value(Params(4, 3, 2, 2), 1), RangeError);
  CHECK_THROWS_AS(f_value(Params(4, 3, 2, 2), 5), RangeError);
  // signed: the quadratic term wins for large d
  CHECK(f_value(Params(20, 20, 2, 1), 20) < 0);
}

TEST_CASE("g(n,r,t)") {
  CHECK(g_value(4, 3, 1) == Rational(15, 2));
  CHECK(g_value(5, 4, 2) == 15);
  CHECK(g_value(6, 5, 2) == 24);
  CHECK(g_value(7, 3, 2) == 0);
  CHECK_THROWS_AS(g_value(3, 3, 2), DomainError);
  CHECK_THROWS_AS(g_value(6, 2, 2), RangeError);
  CHECK(k_threshold(4, 3, 1) == 8);
  CHECK(k_threshold(7, 3, 2) == 2);
  CHECK(k_meets_threshold(Params(4, 3, 8, 1)));
  CHECK_FALSE(k_meets_threshold(Params(4, 3, 7, 1)));
  CHECK(k_meets_threshold(Params(5, 4, 2, 3)));
  // the second argument of the max decides once r - t is large
  CHECK(g_value(20, 14, 1) == Rational(16 * 12, 18) * Rational(14, 2));
}

TEST_CASE("superset counts agree with listing") {
  CHECK(count_supersets(0, Params(4, 2, 3, 1)) == 54);
  CHECK(count_supersets(SignedSet{{1, 1}}, Params(3, 2, 2, 1)) == 4);
  CHECK_THROWS_AS(count_supersets(3, Params(3, 2, 2, 1)), RangeError);
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 0; s <= r; ++s) {
        BigInt listed = 0;
        for (const auto& f : oracle::universe(n, r, 3)) listed += oracle::contains(f, oracle::prefix(s));
        CHECK(count_supersets(s, Params(n, r, 3, 1)) == listed);
      }
}

TEST_CASE("N_b(M_a, M_t) agrees with listing on the small grid") {
  CHECK(count_N(2, 3, Params(4, 3, 2, 1)) == 6);
  CHECK(count_N(3, 3, Params(4, 3, 2, 1)) == 1);
  CHECK_THROWS_AS(count_N(1, 3, Params(4, 3, 2, 1)), RangeError);
  CHECK_THROWS_AS(count_N(4, 3, Params(4, 3, 2, 1)), RangeError);
  CHECK_THROWS_AS(count_N(2, 5, Params(4, 3, 2, 1)), RangeError);
  for (int n = 2; n <= 6; ++n)
    for (int r = 2; r <= n; ++r)
      for (int k = 2; k <= 3; ++k)
        for (int t = 1; t < r; ++t) {
          const Params p(n, r, k, t);
          CHECK(count_N(t + 1, t + 1, p) == count_supersets(t + 1, p));
          for (int a = t + 1; a <= n; ++a)
            for (int b = t + 1; b <= std::min(a, r); ++b) CHECK(count_N(b, a, p) == n_by_listing(n, r, k, t, a, b));
        }
}

TEST_CASE("double-counting identity for f") {
  const auto s = check_slc_identity(Params(4, 3, 2, 1), 3);
  CHECK(s.equal);
  CHECK(s.lhs == 7);
  CHECK(s.rhs == 7);
  for (int n = 2; n <= 9; ++n)
    for (int r = 2; r <= n; ++r)
      for (int k = 2; k <= 5; ++k)
        for (int t = 1; t < r; ++t) {
          const Params p(n, r, k, t);
          for (int a = t + 1; a <= p.p(); ++a) CHECK(check_slc_identity(p, a).equal);
          CHECK(check_slc_identity(p, t + 1).lhs == extensions(n - t - 1, r - t - 1, k));
        }
  CHECK_THROWS_AS(check_slc_identity(Params(4, 3, 2, 1), 1), RangeError);
  CHECK_THROWS_AS(check_slc_identity(Params(5, 3, 2, 1), 5), RangeError);
}

TEST_CASE("H1 and H2 closed forms agree with the membership predicates") {
  CHECK(size_h1_closed(Params(4, 3, 2, 1), 3) == 10);
  CHECK(size_h1_closed(Params(3, 2, 2, 1), 3) == 3);
  CHECK(size_h2_closed(Params(5, 3, 2, 1), 5) == 14);
  CHECK(size_h2_closed(Params(6, 4, 2, 2), 6) == 16);
  CHECK_THROWS_AS(size_h1_closed(Params(4, 3, 2, 1), 2), RangeError);
  CHECK_THROWS_AS(size_h1_closed(Params(4, 3, 2, 1), 5), RangeError);
  CHECK_THROWS_AS(size_h1_closed(Params(4, 3, 2, 3), 5), RangeError);
  CHECK_THROWS_AS(size_h2_closed(Params(5, 3, 2, 1), 6), RangeError);
  CHECK_THROWS_AS(size_h2_closed(Params(4, 3, 2, 1), 5), RangeError);
  CHECK_THROWS_AS(size_h2_closed(Params(6, 3, 2, 2), 5), RangeError);

  for (int n = 3; n <= 6; ++n)
    for (int r = 2; r <= n; ++r)
      for (int k = 2; k <= 3; ++k)
        for (int t = 1; t < r; ++t) {
          const Params p(n, r, k, t);
          const auto all = oracle::universe(n, r, k);
          for (int ell = t + 2; ell <= p.p(); ++ell) {
            BigInt c = 0;
            for (const auto& f : all) c += oracle::in_h1(f, t, ell);
            CHECK(size_h1_closed(p, ell) == c);
          }
          if (r >= t + 2 && n >= r + 2)
            for (int c = r + 2; c <= std::min(2 * r - t, n); ++c) {
              BigInt total = 0, tail = 0;
              for (const auto& f : all) {
                total += oracle::in_h2(f, r, t, c);
                tail += oracle::in_h2(f, r, t, c) && oracle::contains(f, oracle::prefix(t)) &&
                        oracle::meet(f, oracle::prefix(r)) == t;
              }
              CHECK(size_h2_closed(p, c) == total);
              const auto br = size_h2_branches(p, c);
              CHECK(br.tail == tail);
              CHECK(br.near_miss == BigInt(t) * (c - r));
              CHECK(br.through_prefix + br.tail + br.near_miss == total);
            }
        }
}

TEST_CASE("closed-form H1 special cases") {
  for (int t = 1; t <= 5; ++t)
    for (int n = t + 3; n <= t + 9; ++n)
      for (int k = 2; k <= 6; ++k) {
        const Params p(n, t + 2, k, t);
        CHECK(size_h1_closed(p, t + 3) == BigInt(3) * (n - t - 1) * k + t - 3);
        CHECK(size_h1_closed(p, t + 2) ==
              (t + 2) * extensions(n - t - 1, 1, k) - (t + 1) * extensions(n - t - 2, 0, k));
      }
  for (int t = 1; t <= 4; ++t)
    for (int n = t + 2; n <= t + 6; ++n) CHECK(size_h1_closed(Params(n, t + 1, 3, t), t + 2) == t + 2);
}

TEST_CASE("bounds") {
  CHECK(bound_unique_cover(Params(4, 3, 2, 1)) == 12);
  CHECK(bound_unique_cover(Params(6, 3, 5, 2)) == 1);
  CHECK(bound_large_tau(Params(4, 3, 2, 1)) == 27);
  CHECK_THROWS_AS(bound_large_tau(Params(4, 3, 2, 2)), RangeError);
  const Params p(7, 5, 3, 1);
  const BigInt a = extensions(5, 3, 3), b = extensions(4, 2, 3);
  CHECK(bound_multi_cover(p, 3) == 2 * a + BigInt(4 * 5) * b);
  CHECK(bound_multi_cover(p, 4) == 3 * a + BigInt(2 * 5 + 1) * b);
  CHECK(bound_multi_cover(p, 6) == 5 * a + BigInt(0 * 5 + 1) * b);
  CHECK_THROWS_AS(bound_multi_cover(p, 2), RangeError);
}

TEST_CASE("mu and phi") {
  // p = t+2 would need n = t+2, outside the domain
  CHECK_THROWS_AS(mu_sign(Params(5, 5, 3, 3)), DomainError);
  // below the alphabet threshold the sign is not forced: |H1(4)| = 1216 > |H1(10)| = 1018 by listing
  CHECK(mu_sign(Params(10, 9, 2, 2)).sign == 1);
  CHECK(size_h1_closed(Params(10, 9, 2, 2), 4) == 1216);
  CHECK(size_h1_closed(Params(10, 9, 2, 2), 10) == 1018);
  const int g = k_threshold(10, 9, 2).convert_to<int>();
  CHECK(mu_sign(Params(10, 9, g, 2)).sign == -1);
  const Params q(6, 5, 24, 2);
  CHECK(mu_sign(q).sign == 1);
  const auto mu = mu_sign(q);
  CHECK(mu.value == Rational(size_h1_closed(q, 4) - size_h1_closed(q, 6), extensions(2, 1, 24)));
  CHECK_THROWS_AS(mu_sign(Params(6, 3, 2, 2)), DomainError);
  CHECK_THROWS_AS(mu_sign(Params(4, 4, 2, 2)), DomainError);

  const Params p(8, 5, 40, 1);
  REQUIRE(k_meets_threshold(p));
  CHECK(phi_sign(p, f_value(p, 5)).sign == 0);
  CHECK(phi_sign(p, size_h1_closed(p, p.p())).sign < 0);
  CHECK(phi_sign(p, bound_large_tau(p)).sign > 0);
  CHECK(phi_sign(p, 0).value == Rational(f_value(p, 5), extensions(5, 2, 40)));
  CHECK_THROWS_AS(phi_sign(Params(8, 3, 2, 2), 1), DomainError);
}
