#pragma once

// Slow, independent reference implementations used as ground truth in tests.
// They work on explicit point lists and share no code paths with the library
// beyond the SignedSet/Family value types.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "signedfam/core.hpp"
#include "signedfam/wreath.hpp"

namespace oracle {

using Pts = std::vector<std::pair<int, int>>; // sorted by x

inline signedfam::SignedSet to_set(const Pts& pts) {
  std::vector<signedfam::Point> p;
  for (auto [x, y] : pts) p.push_back({x, y});
  return signedfam::SignedSet(std::span<const signedfam::Point>(p));
}

inline Pts to_pts(const signedfam::SignedSet& s) {
  Pts out;
  for (auto p : s.points()) out.emplace_back(p.x, p.y);
  return out;
}

inline int meet(const Pts& a, const Pts& b) {
  int c = 0;
  for (auto& p : a)
    for (auto& q : b) c += p == q;
  return c;
}

/// Every partial function [n] -> [k] with exactly r points (r < 0: any size).
inline std::vector<Pts> universe(int n, int r, int k) {
  std::vector<Pts> out;
  Pts cur;
  std::function<void(int)> rec = [&](int x) {
    if (x > n) {
      if (r < 0 || static_cast<int>(cur.size()) == r) out.push_back(cur);
      return;
    }
    rec(x + 1);
    for (int y = 1; y <= k; ++y) {
      cur.emplace_back(x, y);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

inline Pts prefix(int d) {
  Pts out;
  for (int x = 1; x <= d; ++x) out.emplace_back(x, 1);
  return out;
}

inline bool contains(const Pts& big, const Pts& small) { return meet(big, small) == static_cast<int>(small.size()); }

/// Membership predicates written directly from the definitions.
inline bool in_h1(const Pts& f, int t, int ell) {
  const bool star = contains(f, prefix(t));
  const int m = meet(f, prefix(ell));
  return star ? m >= t + 1 : m == ell - 1;
}

inline bool in_h2(const Pts& f, int r, int t, int c) {
  const bool star = contains(f, prefix(t));
  const int mr = meet(f, prefix(r));
  Pts tail;
  for (int x = r + 1; x <= c; ++x) tail.emplace_back(x, 1);
  const int mt = meet(f, tail);
  if (star && mr >= t + 1) return true;
  if (star && mr == t && mt == static_cast<int>(tail.size())) return true;
  return !star && mr == r - 1 && mt == 1;
}

/// Maximal cliques by growing every clique in increasing vertex order and
/// keeping those no outside vertex extends.
inline std::set<std::vector<int>> maximal_cliques(int n, int r, int k, int t, std::vector<Pts>* verts_out = nullptr) {
  const auto verts = universe(n, r, k);
  const int v = static_cast<int>(verts.size());
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(v), std::vector<char>(static_cast<std::size_t>(v), 0));
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j)
      adj[i][j] = i != j && meet(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]) >= t;
  std::set<std::vector<int>> out;
  std::vector<int> clique;
  std::function<void(int)> grow = [&](int from) {
    bool maximal = true;
    for (int u = 0; u < v && maximal; ++u) {
      if (std::find(clique.begin(), clique.end(), u) != clique.end()) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](int w) { return adj[u][w]; })) maximal = false;
    }
    if (maximal && !clique.empty()) out.insert(clique);
    for (int u = from; u < v; ++u) {
      if (!std::all_of(clique.begin(), clique.end(), [&](int w) { return adj[u][w]; })) continue;
      clique.push_back(u);
      grow(u + 1);
      clique.pop_back();
    }
  };
  grow(0);
  if (verts_out) *verts_out = verts;
  return out;
}

/// Smallest s such that some signed set of size s meets every member in >= t points.
inline int covering_number(const std::vector<Pts>& fam, int n, int k, int t) {
  auto all = universe(n, -1, k);
  std::sort(all.begin(), all.end(), [](const Pts& a, const Pts& b) { return a.size() < b.size(); });
  for (const auto& c : all)
    if (std::all_of(fam.begin(), fam.end(), [&](const Pts& f) { return meet(f, c) >= t; }))
      return static_cast<int>(c.size());
  return -1;
}

/// Every element of S_k wr S_n, by brute force.
inline std::vector<signedfam::WreathMap> whole_group(int n, int k) {
  std::vector<int> cols(static_cast<std::size_t>(n)), sign(static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < k; ++i) sign[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> sign_perms;
  do sign_perms.push_back(sign);
  while (std::next_permutation(sign.begin(), sign.end()));
  std::vector<signedfam::WreathMap> out;
  do {
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<std::vector<int>> s;
      for (auto i : idx) s.push_back(sign_perms[i]);
      out.emplace_back(cols, s);
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == sign_perms.size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  } while (std::next_permutation(cols.begin(), cols.end()));
  return out;
}

} // namespace oracle
