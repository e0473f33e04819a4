#pragma once

// Signed-set algebra: points, k-signed sets, ambient parameters and families.
//
// A signed set is a partial function from columns [n] to signs [k]. It is
// stored as a 64-bit mask with one byte per column: bit (x-1)*8 + (y-1) is
// set iff (x,y) belongs to the set. Ascending bit order is therefore the
// canonical (x,y) order, and |a ∩ b| is a single popcount.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "signedfam/errors.hpp"

namespace signedfam {

inline constexpr int kMaxColumns = 8;
inline constexpr int kMaxSigns = 8;

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

class SignedSet {
public:
  SignedSet() = default;
  SignedSet(std::initializer_list<Point> points);
  explicit SignedSet(std::span<const Point> points);

  /// Throws ValidityError if two bits share a column byte.
  static SignedSet from_mask(std::uint64_t mask);

  std::uint64_t mask() const noexcept { return mask_; }
  int size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }

  /// Points in ascending x order.
  std::vector<Point> points() const;

  bool contains(Point p) const noexcept;
  bool contains(const SignedSet& sub) const noexcept { return (sub.mask_ & ~mask_) == 0; }
  /// Sign at column x, or 0 when the column is unused.
  int sign_at(int x) const noexcept;
  bool valid_for(int n, int k) const noexcept;

  /// True iff the union is again a signed set (no column carries two signs).
  bool compatible_with(const SignedSet& other) const noexcept;
  SignedSet intersection(const SignedSet& other) const noexcept {
    return SignedSet(Raw{}, mask_ & other.mask_);
  }
  /// Throws ValidityError when the two sets disagree on a shared column.
  SignedSet union_with(const SignedSet& other) const;

  std::string to_string() const;

  friend bool operator==(const SignedSet& a, const SignedSet& b) noexcept { return a.mask_ == b.mask_; }
  /// Lexicographic order of the sorted point lists.
  friend std::strong_ordering operator<=>(const SignedSet& a, const SignedSet& b) noexcept;

private:
  struct Raw {};
  SignedSet(Raw, std::uint64_t mask) noexcept : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

/// Bit index of (x,y) in a signed-set mask.
constexpr int point_bit(int x, int y) noexcept { return (x - 1) * 8 + (y - 1); }

/// Checks that no column byte carries more than one sign.
bool is_partial_function(std::uint64_t mask) noexcept;

/// The quadruple (n,r,k,t) with n >= r >= t >= 1 and k >= 2.
class Params {
public:
  /// Throws ParameterError on an invalid combination.
  Params(int n, int r, int k, int t);

  static bool is_valid(int n, int r, int k, int t) noexcept;

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  int k() const noexcept { return k_; }
  int t() const noexcept { return t_; }
  /// p = min{r+1, n}.
  int p() const noexcept { return r_ + 1 < n_ ? r_ + 1 : n_; }

  std::string to_string() const;
  friend bool operator==(const Params&, const Params&) = default;

private:
  int n_, r_, k_, t_;
};

/// A deduplicated set of r-point signed sets over common parameters,
/// kept in canonical (lexicographic) member order.
class Family {
public:
  explicit Family(Params params) : params_(params) {}
  /// Validates every member; duplicates are merged.
  Family(Params params, std::vector<SignedSet> members);

  const Params& params() const noexcept { return params_; }
  std::span<const SignedSet> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const SignedSet& s) const noexcept;
  std::vector<std::uint64_t> masks() const;

  friend bool operator==(const Family&, const Family&) = default;

private:
  Params params_;
  std::vector<SignedSet> members_;
};

/// |a ∩ b|: points agreeing in both column and sign.
int intersect_size(const SignedSet& a, const SignedSet& b) noexcept;
/// As above, but throws ParameterError unless both sets are valid for params.
int intersect_size(const Params& params, const SignedSet& a, const SignedSet& b);

/// M_d = {(1,1),...,(d,1)}. Throws RangeError unless 0 <= d <= n.
SignedSet prefix_set(int d, const Params& params);

/// |L_{n,r,k}| = C(n,r) k^r as a machine integer (desk scale only).
std::uint64_t universe_size(const Params& params);

/// Visits every member of L_{n,r,k} once: column sets in increasing
/// combination order, signs in odometer order (last column fastest).
/// Throws CapacityError when n or k exceeds the mask layout.
void for_each_in_universe(const Params& params, const std::function<void(const SignedSet&)>& visit);
std::vector<SignedSet> enumerate_universe(const Params& params);

} // namespace signedfam
