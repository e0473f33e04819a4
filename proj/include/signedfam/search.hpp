#pragma once

// Brute-force ground truth. t-intersecting subfamilies of L_{n,r,k} are the
// cliques of the intersection graph (edge iff |F ∩ G| >= t), so maximal
// t-intersecting families are its maximal cliques.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "signedfam/core.hpp"

namespace signedfam {

struct SearchLimits {
  std::size_t max_cliques = 5'000'000;
  std::chrono::duration<double> time_budget = std::chrono::seconds(600);
  /// Memory budget for the graph: universes above this size are refused.
  std::size_t max_vertices = 20'000;
};

/// An undirected simple graph stored as adjacency bitsets.
class BitGraph {
public:
  explicit BitGraph(std::size_t vertex_count = 0);

  std::size_t vertex_count() const noexcept { return count_; }
  /// Words per adjacency row.
  std::size_t words() const noexcept { return words_; }
  std::span<const std::uint64_t> row(std::size_t v) const noexcept {
    return {adjacency_.data() + v * words_, words_};
  }
  bool adjacent(std::size_t u, std::size_t v) const noexcept { return (row(u)[v / 64] >> (v % 64)) & 1u; }
  std::size_t degree(std::size_t v) const noexcept;
  /// Ignores loops.
  void add_edge(std::size_t u, std::size_t v);

protected:
  std::uint64_t* mutable_row(std::size_t v) noexcept { return adjacency_.data() + v * words_; }

private:
  std::size_t count_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adjacency_;
};

/// Vertices are the members of L_{n,r,k}; edges join members meeting in >= t points.
class IntersectionGraph : public BitGraph {
public:
  /// Throws CapacityError when the universe exceeds max_vertices.
  explicit IntersectionGraph(const Params& params, std::size_t max_vertices = SearchLimits{}.max_vertices);

  const Params& params() const noexcept { return params_; }
  std::span<const SignedSet> vertices() const noexcept { return vertices_; }
  std::span<const std::uint64_t> masks() const noexcept { return masks_; }
  std::optional<std::size_t> index_of(const SignedSet& s) const;

private:
  Params params_;
  std::vector<SignedSet> vertices_;
  std::vector<std::uint64_t> masks_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

struct TrivialityResult {
  bool trivial = false;
  /// A t-subset of the common intersection when trivial.
  std::optional<SignedSet> witness;
};

struct MaximalityResult {
  bool maximal = false;
  /// A member of L \ fam meeting every member in >= t points.
  std::optional<SignedSet> blocking;
};

bool is_t_intersecting(const Family& fam);
/// DomainError on an empty family.
TrivialityResult is_trivial(const Family& fam);
MaximalityResult is_maximal(const Family& fam);

/// Raised when a search cap is hit; carries everything found before the cap.
class TruncatedError : public Error {
public:
  TruncatedError(std::string reason, std::vector<Family> partial)
      : Error("search truncated: " + reason), reason_(std::move(reason)), partial_(std::move(partial)) {}
  const std::string& reason() const noexcept { return reason_; }
  const std::vector<Family>& partial() const noexcept { return partial_; }

private:
  std::string reason_;
  std::vector<Family> partial_;
};

struct EnumerationStats {
  std::size_t families = 0;
  bool truncated = false;
  std::string reason;
};

/// Streams every maximal clique once, as sorted vertex indices.
/// Pivoted Bron-Kerbosch over a degeneracy ordering; deterministic order.
/// Stops early (truncated = true) when a limit is hit.
EnumerationStats for_each_maximal_clique(const BitGraph& graph, const SearchLimits& limits,
                                         const std::function<void(std::span<const std::uint32_t>)>& emit);

Family family_from_clique(const IntersectionGraph& graph, std::span<const std::uint32_t> clique);

/// All maximal t-intersecting families. Throws TruncatedError on a cap.
std::vector<Family> enumerate_maximal_families(const Params& params, const SearchLimits& limits = {});

struct LargestNontrivial {
  std::size_t size = 0;
  std::vector<Family> families; // ties included
};

/// Throws TruncatedError on a cap.
LargestNontrivial largest_nontrivial(const Params& params, const SearchLimits& limits = {});

} // namespace signedfam
