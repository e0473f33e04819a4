#pragma once

// Product-form bijections of [n]x[k]: (x,y) -> (columnPerm(x), signPerms[x](y)).
// These form the wreath product S_k wr S_n.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "signedfam/core.hpp"

namespace signedfam {

class WreathMap {
public:
  /// Identity on [n]x[k].
  WreathMap(int n, int k);
  /// Permutations are 1-based: column_perm[x-1] is the image of column x and
  /// sign_perms[x-1][y-1] the image of sign y on column x.
  /// Throws ParameterError when any list is not a permutation.
  WreathMap(std::vector<int> column_perm, std::vector<std::vector<int>> sign_perms);

  static WreathMap random(int n, int k, std::mt19937_64& rng);

  int n() const noexcept { return static_cast<int>(column_perm_.size()); }
  int k() const noexcept { return k_; }
  const std::vector<int>& column_perm() const noexcept { return column_perm_; }
  const std::vector<std::vector<int>>& sign_perms() const noexcept { return sign_perms_; }

  Point apply(Point p) const;
  SignedSet apply(const SignedSet& s) const;
  /// Applies the map to a raw signed-set mask.
  std::uint64_t apply_mask(std::uint64_t mask) const noexcept;

  /// (this ∘ inner)(p) = this(inner(p)).
  WreathMap after(const WreathMap& inner) const;
  WreathMap inverse() const;
  bool is_identity() const noexcept;

  std::string to_string() const;
  friend bool operator==(const WreathMap&, const WreathMap&) = default;

private:
  void build_tables();

  int k_ = 0;
  std::vector<int> column_perm_;
  std::vector<std::vector<int>> sign_perms_;
  // byte_image_[x-1][b]: image of column byte b under the sign permutation of column x
  std::vector<std::array<std::uint8_t, 256>> byte_image_;
};

/// The transposition-product map π with π(q) = M_{|q|}: π0 = (q s_q)...(1 s_1)
/// on columns and π_{s_i} = (1 t_i) on signs. Throws ValidityError when q
/// is not a signed set over params.
WreathMap normalize_to_prefix(const SignedSet& q, const Params& params);

} // namespace signedfam
