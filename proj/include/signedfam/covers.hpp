#pragma once

// t-covers: signed sets T with |T ∩ F| >= t for every member F.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signedfam/counting.hpp"
#include "signedfam/core.hpp"

namespace signedfam {

struct CoverProfile {
  int tau = 0;
  /// Every t-cover of size tau, canonical order.
  std::vector<SignedSet> covers;
  /// Union of the minimum covers, when it is itself a signed set.
  std::optional<SignedSet> cover_union;
  std::optional<int> ell;
  /// Covering number of the cover family itself (same t); only when tau = t+1.
  std::optional<int> cover_tau;
};

struct MinimumCovers {
  int size = -1; // -1: no cover up to max_size
  std::vector<std::uint64_t> covers;
};

/// All minimum t-covers of an arbitrary list of signed-set masks, searching
/// sizes t..max_size. Cover points are drawn from the members' own points.
MinimumCovers minimum_t_covers(std::span<const std::uint64_t> members, int t, int max_size);

/// DomainError on an empty family.
bool is_t_cover(const SignedSet& candidate, const Family& fam);

/// DomainError on an empty family, ContractError when fam is not t-intersecting.
CoverProfile covering_number(const Family& fam);

struct Assumption1Audit {
  bool pass = false;
  /// tau_t of the cover family: t (cover union of any size) or t+1 (union of size t+2).
  int cover_tau = 0;
  int ell = 0;
  /// Size-t covers of the cover family that were checked (cover_tau = t only).
  std::vector<SignedSet> checked_centres;
  std::vector<SignedSet> violators;
  std::string failure;
  CoverProfile profile;
};

/// Checks the structure of the cover union of a maximal t-intersecting family
/// with covering number t+1: either |M| = t+2 and every member meets M in
/// >= t+1 points, or t+1 <= ell <= min(r+1,n) and every member avoiding a
/// size-t cover S of the cover family meets M in exactly ell-1 points.
/// ContractError when fam is not maximal, not t-intersecting or tau != t+1.
Assumption1Audit audit_assumption1(const Family& fam);
/// Variant reusing a profile already computed for fam (maximality is still checked).
Assumption1Audit audit_assumption1(const Family& fam, const CoverProfile& profile);

struct FsCheck {
  bool pass = false;
  int shared = 0;                 // s = |u ∩ F|
  std::size_t with_u = 0;         // |fam_u|
  std::size_t best_with_r = 0;    // max |fam_R| over admissible R
  BigInt multiplier;              // C(r-s, t-s)
  std::optional<SignedSet> best_r;
};

/// Concrete check of |fam_u| <= C(r-s, t-s) |fam_R| for some R with
/// u ⊆ R ⊆ F ∪ u and |R| = |u| + t - s, where s = |u ∩ F| < t.
/// ContractError when fam is not t-intersecting, F ∉ fam or s >= t.
FsCheck fs_bound_check(const Family& fam, const SignedSet& u, const SignedSet& witness);

} // namespace signedfam
