#include "signedfam/search.hpp"

#include <algorithm>
#include <bit>

#include "signedfam/kernels.hpp"

namespace signedfam {

BitGraph::BitGraph(std::size_t vertex_count)
    : count_(vertex_count), words_((vertex_count + 63) / 64), adjacency_(words_ * vertex_count, 0) {}

std::size_t BitGraph::degree(std::size_t v) const noexcept {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

void BitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= count_ || v >= count_) throw RangeError("vertex out of range");
  if (u == v) return;
  mutable_row(u)[v / 64] |= std::uint64_t{1} << (v % 64);
  mutable_row(v)[u / 64] |= std::uint64_t{1} << (u % 64);
}

namespace {

std::uint64_t checked_universe_size(const Params& params, std::size_t max_vertices) {
  const auto size = universe_size(params);
  if (size > max_vertices)
    throw CapacityError("universe of " + params.to_string() + " has " + std::to_string(size) +
                        " members, above the budget of " + std::to_string(max_vertices));
  return size;
}

} // namespace

IntersectionGraph::IntersectionGraph(const Params& params, std::size_t max_vertices)
    : BitGraph(checked_universe_size(params, max_vertices)), params_(params) {
  vertices_ = enumerate_universe(params);
  masks_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    masks_.push_back(vertices_[i].mask());
    index_.emplace(vertices_[i].mask(), i);
  }
  const auto& k = kernels::active();
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    std::uint64_t* r = mutable_row(v);
    k.threshold_row(masks_.data(), masks_.size(), masks_[v], params.t(), r);
    r[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }
}

std::optional<std::size_t> IntersectionGraph::index_of(const SignedSet& s) const {
  auto it = index_.find(s.mask());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool is_t_intersecting(const Family& fam) {
  const auto masks = fam.masks();
  const int t = fam.params().t();
  for (std::size_t i = 0; i + 1 < masks.size(); ++i)
    if (!kernels::all_meet(std::span(masks).subspan(i + 1), masks[i], t)) return false;
  return true;
}

TrivialityResult is_trivial(const Family& fam) {
  if (fam.empty()) throw DomainError("triviality is undefined for an empty family");
  std::uint64_t common = ~std::uint64_t{0};
  for (const auto& m : fam.members()) common &= m.mask();
  const int t = fam.params().t();
  if (std::popcount(common) < t) return {false, std::nullopt};
  std::uint64_t witness = 0;
  for (int i = 0; i < t; ++i) {
    witness |= common & (~common + 1);
    common &= common - 1;
  }
  return {true, SignedSet::from_mask(witness)};
}

MaximalityResult is_maximal(const Family& fam) {
  const auto masks = fam.masks();
  const int t = fam.params().t();
  MaximalityResult out{true, std::nullopt};
  for_each_in_universe(fam.params(), [&](const SignedSet& g) {
    if (!out.maximal || fam.contains(g)) return;
    if (kernels::all_meet(masks, g.mask(), t)) out = {false, g};
  });
  return out;
}

namespace {

class CliqueSearch {
public:
  CliqueSearch(const BitGraph& g, const SearchLimits& limits,
               const std::function<void(std::span<const std::uint32_t>)>& emit)
      : g_(g), limits_(limits), emit_(emit), words_(g.words()), kern_(kernels::active()),
        start_(std::chrono::steady_clock::now()) {
    // per depth: P, X, candidates
    arena_.assign((g.vertex_count() + 2) * 3 * std::max<std::size_t>(words_, 1), 0);
  }

  EnumerationStats run() {
    const auto order = degeneracy_order();
    std::vector<std::uint64_t> later(words_, 0), done(words_, 0);
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) later[v / 64] |= std::uint64_t{1} << (v % 64);
    for (auto v : order) {
      if (stats_.truncated) break;
      later[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      std::uint64_t* p = level(0, 0);
      std::uint64_t* x = level(0, 1);
      kern_.and_into(p, g_.row(v).data(), later.data(), words_);
      kern_.and_into(x, g_.row(v).data(), done.data(), words_);
      clique_.assign(1, v);
      expand(0);
      done[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    return stats_;
  }

private:
  std::uint64_t* level(std::size_t depth, std::size_t slot) {
    return arena_.data() + (depth * 3 + slot) * words_;
  }

  static bool any(const std::uint64_t* s, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
      if (s[i]) return true;
    return false;
  }

  std::vector<std::uint32_t> degeneracy_order() const {
    const std::size_t n = g_.vertex_count();
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g_.degree(v);
    std::vector<bool> removed(n, false);
    std::vector<std::uint32_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v)
        if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
      removed[best] = true;
      order.push_back(static_cast<std::uint32_t>(best));
      for (std::size_t u = 0; u < n; ++u)
        if (!removed[u] && g_.adjacent(best, u)) --deg[u];
    }
    return order;
  }

  bool out_of_budget() {
    if (++nodes_ % 4096 != 0) return false;
    if (std::chrono::steady_clock::now() - start_ > limits_.time_budget) {
      stats_.truncated = true;
      stats_.reason = "time budget exceeded";
      return true;
    }
    return false;
  }

  void report() {
    if (stats_.families >= limits_.max_cliques) {
      stats_.truncated = true;
      stats_.reason = "more than " + std::to_string(limits_.max_cliques) + " maximal families";
      return;
    }
    ++stats_.families;
    sorted_ = clique_;
    std::sort(sorted_.begin(), sorted_.end());
    emit_(sorted_);
  }

  void expand(std::size_t depth) {
    if (stats_.truncated || out_of_budget()) return;
    std::uint64_t* p = level(depth, 0);
    std::uint64_t* x = level(depth, 1);
    std::uint64_t* cand = level(depth, 2);
    const bool p_empty = !any(p, words_);
    if (p_empty) {
      if (!any(x, words_)) report();
      return;
    }
    // Tomita pivot: u in P ∪ X maximizing |P ∩ N(u)|
    std::size_t pivot = 0, best = 0;
    bool have_pivot = false;
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = p[w] | x[w]; bits; bits &= bits - 1) {
        std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        std::size_t c = kern_.and_count(p, g_.row(u).data(), words_);
        if (!have_pivot || c > best) {
          pivot = u;
          best = c;
          have_pivot = true;
        }
      }
    }
    kern_.andnot_into(cand, p, g_.row(pivot).data(), words_);
    std::uint64_t* np = level(depth + 1, 0);
    std::uint64_t* nx = level(depth + 1, 1);
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = cand[w]; bits; bits &= bits - 1) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        const auto nv = g_.row(v).data();
        kern_.and_into(np, p, nv, words_);
        kern_.and_into(nx, x, nv, words_);
        clique_.push_back(static_cast<std::uint32_t>(v));
        expand(depth + 1);
        clique_.pop_back();
        if (stats_.truncated) return;
        p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        x[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  }

  const BitGraph& g_;
  const SearchLimits& limits_;
  const std::function<void(std::span<const std::uint32_t>)>& emit_;
  std::size_t words_;
  const kernels::KernelTable& kern_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::uint64_t> arena_;
  std::vector<std::uint32_t> clique_, sorted_;
  std::size_t nodes_ = 0;
  EnumerationStats stats_;
};

} // namespace

EnumerationStats for_each_maximal_clique(const BitGraph& graph, const SearchLimits& limits,
                                         const std::function<void(std::span<const std::uint32_t>)>& emit) {
  return CliqueSearch(graph, limits, emit).run();
}

Family family_from_clique(const IntersectionGraph& graph, std::span<const std::uint32_t> clique) {
  std::vector<SignedSet> members;
  members.reserve(clique.size());
  for (auto v : clique) members.push_back(graph.vertices()[v]);
  return Family(graph.params(), std::move(members));
}

std::vector<Family> enumerate_maximal_families(const Params& params, const SearchLimits& limits) {
  IntersectionGraph graph(params, limits.max_vertices);
  std::vector<Family> out;
  auto stats = for_each_maximal_clique(graph, limits, [&](std::span<const std::uint32_t> c) {
    out.push_back(family_from_clique(graph, c));
  });
  if (stats.truncated) throw TruncatedError(stats.reason, std::move(out));
  return out;
}

LargestNontrivial largest_nontrivial(const Params& params, const SearchLimits& limits) {
  IntersectionGraph graph(params, limits.max_vertices);
  LargestNontrivial best;
  auto stats = for_each_maximal_clique(graph, limits, [&](std::span<const std::uint32_t> c) {
    if (c.size() < best.size) return;
    Family fam = family_from_clique(graph, c);
    if (is_trivial(fam).trivial) return;
    if (c.size() > best.size) {
      best.size = c.size();
      best.families.clear();
    }
    best.families.push_back(std::move(fam));
  });
  if (stats.truncated) throw TruncatedError(stats.reason, std::move(best.families));
  return best;
}

} // namespace signedfam
