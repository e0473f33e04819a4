#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "signedfam/core.hpp"
#include "signedfam/family_io.hpp"
#include "signedfam/wreath.hpp"

using namespace signedfam;

TEST_CASE("signed sets reject repeated columns and bad coordinates") {
  CHECK_THROWS_AS((SignedSet{{1, 1}, {1, 2}}), ValidityError);
  CHECK_THROWS_AS((SignedSet{{0, 1}}), ValidityError);
  CHECK_THROWS_AS((SignedSet{{1, 0}}), ValidityError);
  CHECK_THROWS_AS(SignedSet::from_mask(0b11), ValidityError);
  SignedSet s{{3, 2}, {1, 1}};
  CHECK(s.size() == 2);
  CHECK(s.sign_at(3) == 2);
  CHECK(s.sign_at(2) == 0);
  CHECK(s.to_string() == "{(1,1),(3,2)}");
  CHECK(s.valid_for(3, 2));
  CHECK_FALSE(s.valid_for(2, 2));
  CHECK_FALSE(s.valid_for(3, 1));
}

TEST_CASE("intersection counts points agreeing in column and sign") {
  SignedSet a{{1, 1}, {2, 1}}, b{{1, 1}, {2, 2}}, c{{1, 2}, {2, 2}}, m{{1, 1}, {2, 1}, {3, 1}};
  CHECK(intersect_size(a, b) == 1);
  CHECK(intersect_size(m, m) == 3);
  CHECK(intersect_size(a, c) == 0);
  CHECK(intersect_size(Params(3, 2, 2, 1), a, b) == 1);
  CHECK_THROWS_AS(intersect_size(Params(3, 2, 2, 1), a, SignedSet{{4, 1}}), ParameterError);
  CHECK_THROWS_AS(intersect_size(Params(3, 2, 2, 1), a, SignedSet{{1, 3}}), ParameterError);
}

TEST_CASE("intersection is symmetric and bounded on a whole universe") {
  const auto all = oracle::universe(3, -1, 3);
  for (const auto& a : all)
    for (const auto& b : all) {
      const int m = intersect_size(oracle::to_set(a), oracle::to_set(b));
      CHECK(m == oracle::meet(a, b));
      CHECK(m <= static_cast<int>(std::min(a.size(), b.size())));
    }
}

TEST_CASE("union and compatibility") {
  SignedSet a{{1, 1}}, b{{2, 2}}, c{{1, 2}};
  CHECK(a.compatible_with(b));
  CHECK_FALSE(a.compatible_with(c));
  CHECK(a.union_with(b) == SignedSet{{1, 1}, {2, 2}});
  CHECK_THROWS_AS(a.union_with(c), ValidityError);
  CHECK(SignedSet{{1, 1}, {2, 2}}.contains(b));
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS(Params(3, 2, 1, 1), ParameterError);
  CHECK_THROWS_AS(Params(2, 3, 2, 1), ParameterError);
  CHECK_THROWS_AS(Params(3, 2, 2, 3), ParameterError);
  CHECK_THROWS_AS(Params(3, 2, 2, 0), ParameterError);
  CHECK(Params(5, 3, 2, 1).p() == 4);
  CHECK(Params(4, 4, 2, 1).p() == 4);
}

TEST_CASE("prefix sets") {
  const Params p(4, 3, 2, 1);
  CHECK(prefix_set(0, p).empty());
  CHECK(prefix_set(3, p) == SignedSet{{1, 1}, {2, 1}, {3, 1}});
  CHECK(prefix_set(4, p).size() == 4);
  CHECK_THROWS_AS(prefix_set(5, p), RangeError);
  CHECK_THROWS_AS(prefix_set(-1, p), RangeError);
}

TEST_CASE("universe enumeration matches the point-list oracle") {
  CHECK(enumerate_universe(Params(3, 2, 2, 1)).size() == 12);
  CHECK(enumerate_universe(Params(2, 2, 2, 1)).size() == 4);
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= n; ++r)
      for (int k = 2; k <= 3; ++k) {
        const Params p(n, r, k, 1);
        const auto got = enumerate_universe(p);
        CHECK(got.size() == universe_size(p));
        std::set<SignedSet> seen(got.begin(), got.end());
        CHECK(seen.size() == got.size());
        std::set<SignedSet> want;
        for (const auto& pts : oracle::universe(n, r, k)) want.insert(oracle::to_set(pts));
        CHECK(seen == want);
      }
}

TEST_CASE("universe order: column combinations, then signs with the last column fastest") {
  const auto got = enumerate_universe(Params(3, 2, 2, 1));
  CHECK(got[0] == SignedSet{{1, 1}, {2, 1}});
  CHECK(got[1] == SignedSet{{1, 1}, {2, 2}});
  CHECK(got[2] == SignedSet{{1, 2}, {2, 1}});
  CHECK(got[4] == SignedSet{{1, 1}, {3, 1}});
  CHECK(got.back() == SignedSet{{2, 2}, {3, 2}});
}

TEST_CASE("families validate, sort and deduplicate") {
  const Params p(3, 2, 2, 1);
  Family f(p, {SignedSet{{2, 1}, {3, 1}}, SignedSet{{1, 1}, {2, 1}}, SignedSet{{2, 1}, {3, 1}}});
  CHECK(f.size() == 2);
  CHECK(f.members()[0] == SignedSet{{1, 1}, {2, 1}});
  CHECK(f.contains(SignedSet{{2, 1}, {3, 1}}));
  CHECK_FALSE(f.contains(SignedSet{{1, 2}, {2, 1}}));
  CHECK_THROWS_AS(Family(p, {SignedSet{{1, 1}}}), ValidityError);
  CHECK_THROWS_AS(Family(p, {SignedSet{{1, 1}, {4, 1}}}), ValidityError);
  CHECK_THROWS_AS(Family(p, {SignedSet{{1, 1}, {2, 3}}}), ValidityError);
}

TEST_CASE("canonical member order is lexicographic on sorted point lists") {
  const auto all = enumerate_universe(Params(4, 2, 3, 1));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      CHECK(((all[i] < all[j]) == (oracle::to_pts(all[i]) < oracle::to_pts(all[j]))));
}

TEST_CASE("family JSON round trip") {
  const Params p(3, 2, 2, 1);
  Family f(p, {SignedSet{{2, 1}, {3, 2}}, SignedSet{{1, 1}, {2, 1}}});
  CHECK(canonical_json(f) == R"({"k":2,"members":[[[1,1],[2,1]],[[2,1],[3,2]]],"n":3,"r":2,"t":1})");
  CHECK(family_from_json(to_json(f)) == f);
  CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"({"n":3,"r":2,"k":2})")), ValidityError);
  CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"({"n":3,"r":2,"k":2,"t":1,"members":[[[1,1],[1,2]]]})")),
                  ValidityError);
  CHECK_THROWS_AS(signed_set_from_json(nlohmann::json::parse(R"([[1]])")), ValidityError);
}

TEST_CASE("wreath maps: action, composition, inverse") {
  std::mt19937_64 rng(7);
  const auto all = oracle::universe(4, -1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = WreathMap::random(4, 3, rng);
    const auto b = WreathMap::random(4, 3, rng);
    CHECK(a.inverse().after(a).is_identity());
    CHECK(a.after(a.inverse()).is_identity());
    for (const auto& pts : all) {
      const SignedSet s = oracle::to_set(pts);
      // pointwise definition
      oracle::Pts img;
      for (auto [x, y] : pts) {
        const int nx = a.column_perm()[static_cast<std::size_t>(x - 1)];
        const int ny = a.sign_perms()[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)];
        img.emplace_back(nx, ny);
      }
      std::sort(img.begin(), img.end());
      CHECK(a.apply(s) == oracle::to_set(img));
      CHECK(a.apply_mask(s.mask()) == a.apply(s).mask());
      CHECK(a.after(b).apply(s) == a.apply(b.apply(s)));
    }
  }
  CHECK_THROWS_AS(WreathMap({1, 1}, {{1, 2}, {1, 2}}), ParameterError);
  CHECK_THROWS_AS(WreathMap({1, 2}, {{1, 2}, {2, 2}}), ParameterError);
  CHECK_THROWS_AS(WreathMap({1, 2}, {{1, 2}}), ParameterError);
}

TEST_CASE("normalize_to_prefix sends q onto M_|q|") {
  const Params p(3, 2, 2, 1);
  CHECK(normalize_to_prefix(prefix_set(2, p), p).is_identity());
  const auto m = normalize_to_prefix(SignedSet{{3, 2}}, p);
  CHECK(m.apply(Point{3, 2}) == Point{1, 1});

  const Params q(5, 3, 3, 1);
  for (const auto& pts : oracle::universe(5, -1, 3)) {
    const SignedSet s = oracle::to_set(pts);
    const auto map = normalize_to_prefix(s, q);
    CHECK(map.apply(s) == prefix_set(s.size(), q));
    CHECK(intersect_size(map.apply(s), prefix_set(s.size(), q)) == s.size());
  }
  CHECK_THROWS_AS(normalize_to_prefix(SignedSet{{6, 1}}, q), ValidityError);
}
