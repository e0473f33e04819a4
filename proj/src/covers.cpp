#include "signedfam/covers.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "signedfam/kernels.hpp"
#include "signedfam/search.hpp"

namespace signedfam {

namespace {

std::uint64_t used_columns(std::uint64_t mask) {
  // 0xff in every byte that carries a point
  std::uint64_t cols = 0;
  for (int c = 0; c < 8; ++c)
    if ((mask >> (8 * c)) & 0xffu) cols |= std::uint64_t{0xff} << (8 * c);
  return cols;
}

class CoverSearch {
public:
  CoverSearch(std::span<const std::uint64_t> members, int t, int size)
      : members_(members), t_(t), size_(size) {}

  std::vector<std::uint64_t> run() {
    grow(0);
    return {found_.begin(), found_.end()};
  }

private:
  void grow(std::uint64_t cover) {
    if (!visited_.insert(cover).second) return;
    const std::size_t miss = kernels::first_below(members_, cover, t_);
    const int have = std::popcount(cover);
    if (miss == members_.size()) {
      if (have == size_) found_.insert(cover);
      return;
    }
    const int deficit = t_ - std::popcount(cover & members_[miss]);
    if (have + deficit > size_) return;
    const std::uint64_t free = members_[miss] & ~cover & ~used_columns(cover);
    for (std::uint64_t bits = free; bits; bits &= bits - 1) grow(cover | (bits & (~bits + 1)));
  }

  std::span<const std::uint64_t> members_;
  int t_;
  int size_;
  std::unordered_set<std::uint64_t> visited_;
  std::set<std::uint64_t> found_;
};

std::vector<SignedSet> to_sets(const std::vector<std::uint64_t>& masks) {
  std::vector<SignedSet> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(SignedSet::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

MinimumCovers minimum_t_covers(std::span<const std::uint64_t> members, int t, int max_size) {
  for (int size = t; size <= max_size; ++size) {
    auto covers = CoverSearch(members, t, size).run();
    if (!covers.empty()) return {size, std::move(covers)};
  }
  return {};
}

bool is_t_cover(const SignedSet& candidate, const Family& fam) {
  if (fam.empty()) throw DomainError("t-covers of an empty family are vacuous");
  const auto masks = fam.masks();
  return kernels::all_meet(masks, candidate.mask(), fam.params().t());
}

CoverProfile covering_number(const Family& fam) {
  if (fam.empty()) throw DomainError("covering number of an empty family is undefined");
  if (!is_t_intersecting(fam)) throw ContractError("covering number needs a t-intersecting family");
  const int t = fam.params().t();
  const auto masks = fam.masks();
  // any member is a cover, so tau <= r
  auto min = minimum_t_covers(masks, t, fam.params().r());
  CoverProfile out;
  out.tau = min.size;
  out.covers = to_sets(min.covers);
  std::uint64_t uni = 0;
  for (auto c : min.covers) uni |= c;
  if (is_partial_function(uni)) {
    out.cover_union = SignedSet::from_mask(uni);
    out.ell = std::popcount(uni);
  }
  if (out.tau == t + 1) {
    auto inner = minimum_t_covers(min.covers, t, std::popcount(uni));
    if (inner.size >= 0) out.cover_tau = inner.size;
  }
  return out;
}

Assumption1Audit audit_assumption1(const Family& fam) {
  if (fam.empty()) throw ContractError("audit needs a non-empty family");
  return audit_assumption1(fam, covering_number(fam));
}

Assumption1Audit audit_assumption1(const Family& fam, const CoverProfile& profile) {
  const Params& p = fam.params();
  const int t = p.t();
  if (fam.empty() || !is_t_intersecting(fam)) throw ContractError("audit needs a non-empty t-intersecting family");
  if (profile.tau != t + 1)
    throw ContractError("audit needs covering number t+1, got " + std::to_string(profile.tau));
  if (!is_maximal(fam).maximal) throw ContractError("audit needs a maximal family");

  Assumption1Audit out;
  out.profile = profile;
  if (!profile.cover_tau) {
    out.failure = "cover family has no t-cover";
    return out;
  }
  out.cover_tau = *profile.cover_tau;
  if (!profile.cover_union) {
    out.failure = "union of the minimum covers is not a signed set";
    return out;
  }
  const std::uint64_t m = profile.cover_union->mask();
  out.ell = std::popcount(m);

  if (out.cover_tau == t + 1) {
    if (out.ell != t + 2) out.failure = "cover union has " + std::to_string(out.ell) + " points, expected t+2";
    for (const auto& f : fam.members())
      if (std::popcount(f.mask() & m) < t + 1) out.violators.push_back(f);
    if (!out.violators.empty() && out.failure.empty()) out.failure = "member meets the cover union in <= t points";
  } else if (out.cover_tau == t) {
    if (out.ell < t + 1 || out.ell > p.p())
      out.failure = "cover union size " + std::to_string(out.ell) + " outside [t+1, min(r+1,n)]";
    std::vector<std::uint64_t> cover_masks;
    for (const auto& c : profile.covers) cover_masks.push_back(c.mask());
    // every size-t cover of the cover family is checked
    auto centres = minimum_t_covers(cover_masks, t, t);
    for (auto centre : centres.covers) {
      out.checked_centres.push_back(SignedSet::from_mask(centre));
      for (const auto& f : fam.members()) {
        if ((f.mask() & centre) == centre) continue;
        if (std::popcount(f.mask() & m) != out.ell - 1) out.violators.push_back(f);
      }
    }
    if (!out.violators.empty() && out.failure.empty())
      out.failure = "member avoiding a centre does not meet the cover union in ell-1 points";
  } else {
    out.failure = "cover family has covering number " + std::to_string(out.cover_tau) + ", outside [t, t+1]";
  }
  out.pass = out.failure.empty();
  return out;
}

FsCheck fs_bound_check(const Family& fam, const SignedSet& u, const SignedSet& witness) {
  const Params& p = fam.params();
  const int t = p.t();
  if (!u.valid_for(p.n(), p.k())) throw ValidityError("u is not a signed set over " + p.to_string());
  if (!fam.contains(witness)) throw ContractError("witness " + witness.to_string() + " is not a member");
  if (!is_t_intersecting(fam)) throw ContractError("superset bound needs a t-intersecting family");
  FsCheck out;
  out.shared = intersect_size(u, witness);
  if (out.shared >= t) throw ContractError("superset bound needs |u ∩ F| < t");
  out.multiplier = binomial(p.r() - out.shared, t - out.shared);

  auto count_with = [&](std::uint64_t x) {
    std::size_t c = 0;
    for (const auto& f : fam.members()) c += (f.mask() & x) == x;
    return c;
  };
  out.with_u = count_with(u.mask());
  if (out.with_u == 0) {
    out.pass = true;
    return out;
  }
  // admissible extension points: witness points outside u on columns u leaves free
  const std::uint64_t extra = witness.mask() & ~u.mask() & ~used_columns(u.mask());
  std::vector<std::uint64_t> pts;
  for (std::uint64_t b = extra; b; b &= b - 1) pts.push_back(b & (~b + 1));
  const int need = t - out.shared;
  const int avail = static_cast<int>(pts.size());
  if (need <= avail) {
    std::vector<bool> pick(static_cast<std::size_t>(avail), false);
    std::fill(pick.begin(), pick.begin() + need, true);
    do {
      std::uint64_t r = u.mask();
      for (int i = 0; i < avail; ++i)
        if (pick[static_cast<std::size_t>(i)]) r |= pts[static_cast<std::size_t>(i)];
      const auto c = count_with(r);
      if (!out.best_r || c > out.best_with_r) {
        out.best_with_r = c;
        out.best_r = SignedSet::from_mask(r);
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  out.pass = out.best_r && BigInt(out.with_u) <= out.multiplier * BigInt(out.best_with_r);
  return out;
}

} // namespace signedfam
