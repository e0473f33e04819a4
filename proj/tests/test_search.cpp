#include <array>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "signedfam/canonical.hpp"
#include "signedfam/constructions.hpp"
#include "signedfam/search.hpp"

using namespace signedfam;

TEST_CASE("intersection graph") {
  const Params p(3, 2, 2, 1);
  IntersectionGraph g(p);
  CHECK(g.vertex_count() == 12);
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      CHECK(g.adjacent(u, v) == (u != v && intersect_size(g.vertices()[u], g.vertices()[v]) >= 1));
  }
  CHECK(g.index_of(SignedSet{{1, 1}, {2, 1}}) == 0);
  CHECK_FALSE(g.index_of(SignedSet{{1, 1}}).has_value());
  CHECK_THROWS_AS(IntersectionGraph(Params(8, 5, 4, 1)), CapacityError);
  CHECK_THROWS_AS(IntersectionGraph(p, 11), CapacityError);
}

TEST_CASE("bit graphs") {
  // the 5-cycle: its maximal cliques are its edges
  BitGraph c5(5);
  for (std::size_t v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  c5.add_edge(2, 2);
  CHECK_FALSE(c5.adjacent(2, 2));
  CHECK(c5.degree(0) == 2);
  std::set<std::vector<std::uint32_t>> cliques;
  const auto stats = for_each_maximal_clique(c5, {}, [&](std::span<const std::uint32_t> c) { cliques.insert({c.begin(), c.end()}); });
  CHECK(stats.families == 5);
  CHECK(cliques == std::set<std::vector<std::uint32_t>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK_THROWS_AS(c5.add_edge(0, 5), RangeError);

  BitGraph wide(130);
  for (std::size_t v = 1; v < 130; ++v) wide.add_edge(0, v);
  std::size_t count = 0;
  for_each_maximal_clique(wide, {}, [&](std::span<const std::uint32_t> c) {
    CHECK(c.size() == 2);
    CHECK(c[0] == 0);
    ++count;
  });
  CHECK(count == 129);

  BitGraph empty;
  CHECK(for_each_maximal_clique(empty, {}, [](std::span<const std::uint32_t>) {}).families == 0);
}

TEST_CASE("predicates") {
  const Params p(3, 2, 2, 1);
  CHECK(is_t_intersecting(Family(p, {SignedSet{{1, 1}, {2, 1}}})));
  CHECK_FALSE(is_t_intersecting(Family(p, {SignedSet{{1, 1}, {2, 1}}, SignedSet{{1, 2}, {2, 2}}})));
  const auto star = build_star(p, SignedSet{{2, 2}});
  const auto triv = is_trivial(star);
  CHECK(triv.trivial);
  CHECK(triv.witness == SignedSet{{2, 2}});
  CHECK_FALSE(is_trivial(build_h1(p, 3)).trivial);
  CHECK(is_trivial(Family(p, {SignedSet{{1, 1}, {3, 2}}})).trivial);
  CHECK_THROWS_AS(is_trivial(Family(p)), DomainError);
  CHECK(is_maximal(star).maximal);

  const auto h = build_h1(Params(4, 3, 2, 1), 4);
  for (const auto& removed : h.members()) {
    std::vector<SignedSet> rest;
    for (const auto& m : h.members())
      if (m != removed) rest.push_back(m);
    const auto res = is_maximal(Family(h.params(), rest));
    CHECK_FALSE(res.maximal);
    REQUIRE(res.blocking);
    CHECK_FALSE(std::find(rest.begin(), rest.end(), *res.blocking) != rest.end());
    for (const auto& m : rest) CHECK(intersect_size(*res.blocking, m) >= 1);
  }
}

TEST_CASE("census at (3,2,2,1): 6 stars of size 4 and 8 triangles") {
  const auto fams = enumerate_maximal_families(Params(3, 2, 2, 1));
  CHECK(fams.size() == 14);
  std::size_t stars = 0, triangles = 0;
  for (const auto& f : fams) {
    if (is_trivial(f).trivial) {
      stars += f.size() == 4;
    } else {
      triangles += f.size() == 3;
    }
  }
  CHECK(stars == 6);
  CHECK(triangles == 8);
}

TEST_CASE("isolated vertices are their own maximal families") {
  const auto fams = enumerate_maximal_families(Params(2, 2, 2, 2));
  CHECK(fams.size() == 4);
  for (const auto& f : fams) {
    CHECK(f.size() == 1);
    CHECK(is_trivial(f).trivial);
  }
}

TEST_CASE("largest non-trivial families") {
  const auto a = largest_nontrivial(Params(3, 2, 2, 1));
  CHECK(a.size == 3);
  CHECK(a.families.size() == 8);
  CHECK(largest_nontrivial(Params(4, 3, 2, 2)).size == 4);
  CHECK(largest_nontrivial(Params(5, 4, 2, 3)).size == 5);
  for (const auto& f : largest_nontrivial(Params(4, 3, 2, 2)).families) CHECK(f.size() == 4);
}

TEST_CASE("every emitted family is maximal and t-intersecting") {
  for (auto [n, r, k, t] : std::vector<std::array<int, 4>>{{4, 3, 2, 1}, {4, 2, 3, 1}, {5, 3, 2, 2}}) {
    for (const auto& f : enumerate_maximal_families(Params(n, r, k, t))) {
      CHECK(is_t_intersecting(f));
      CHECK(is_maximal(f).maximal);
    }
  }
}

TEST_CASE("Bron-Kerbosch agrees with the subset-growth oracle on every universe of <= 40 vertices") {
  std::size_t cells = 0;
  for (int n = 1; n <= 8; ++n)
    for (int r = 1; r <= n; ++r)
      for (int k = 2; k <= 8; ++k) {
        const Params base(n, r, k, 1);
        if (universe_size(base) > 40) continue;
        for (int t = 1; t <= r; ++t) {
          const Params p(n, r, k, t);
          CAPTURE(p.to_string());
          std::vector<oracle::Pts> verts;
          const auto want_idx = oracle::maximal_cliques(n, r, k, t, &verts);
          std::set<std::vector<SignedSet>> want;
          for (const auto& c : want_idx) {
            std::vector<SignedSet> fam;
            for (int v : c) fam.push_back(oracle::to_set(verts[static_cast<std::size_t>(v)]));
            std::sort(fam.begin(), fam.end());
            want.insert(fam);
          }
          std::set<std::vector<SignedSet>> got;
          const auto fams = enumerate_maximal_families(p);
          for (const auto& f : fams) got.insert({f.members().begin(), f.members().end()});
          CHECK(got.size() == fams.size());
          CHECK(got == want);
          ++cells;
        }
      }
  CHECK(cells > 20);
}

TEST_CASE("family counts and sizes are invariant under relabeling the universe") {
  const Params p(4, 3, 2, 1);
  std::multiset<std::size_t> sizes;
  for (const auto& f : enumerate_maximal_families(p)) sizes.insert(f.size());
  std::mt19937_64 rng(3);
  const auto sigma = WreathMap::random(4, 2, rng);
  std::multiset<std::size_t> mapped;
  for (const auto& f : enumerate_maximal_families(p)) {
    const auto g = apply_map(sigma, f);
    CHECK(is_maximal(g).maximal);
    mapped.insert(g.size());
  }
  CHECK(sizes == mapped);
}

TEST_CASE("limits raise truncation with the partial output") {
  SearchLimits limits;
  limits.max_cliques = 5;
  try {
    enumerate_maximal_families(Params(4, 3, 2, 1), limits);
    FAIL("expected truncation");
  } catch (const TruncatedError& e) {
    CHECK(e.partial().size() == 5);
    CHECK_FALSE(e.reason().empty());
  }
  limits.max_cliques = 1;
  CHECK_THROWS_AS(largest_nontrivial(Params(4, 3, 2, 1), limits), TruncatedError);
  limits = {};
  limits.time_budget = std::chrono::duration<double>(0);
  CHECK_THROWS_AS(enumerate_maximal_families(Params(5, 3, 2, 1), limits), TruncatedError);

  IntersectionGraph g(Params(4, 3, 2, 1));
  limits = {};
  limits.max_cliques = 3;
  std::size_t seen = 0;
  const auto stats = for_each_maximal_clique(g, limits, [&](std::span<const std::uint32_t>) { ++seen; });
  CHECK(stats.truncated);
  CHECK(stats.families == 3);
  CHECK(seen == 3);
}
