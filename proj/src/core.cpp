#include "signedfam/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace signedfam {

namespace {

void check_point(Point p) {
  if (p.x < 1 || p.y < 1)
    throw ValidityError("point coordinates must be positive: (" + std::to_string(p.x) + "," +
                        std::to_string(p.y) + ")");
  if (p.x > kMaxColumns || p.y > kMaxSigns)
    throw CapacityError("signed sets support columns and signs up to 8");
}

std::uint64_t build_mask(std::span<const Point> points) {
  std::uint64_t mask = 0;
  std::uint64_t columns = 0;
  for (Point p : points) {
    check_point(p);
    std::uint64_t col = std::uint64_t{1} << (p.x - 1);
    if (columns & col)
      throw ValidityError("column " + std::to_string(p.x) + " appears twice in a signed set");
    columns |= col;
    mask |= std::uint64_t{1} << point_bit(p.x, p.y);
  }
  return mask;
}

} // namespace

bool is_partial_function(std::uint64_t mask) noexcept {
  for (int c = 0; c < kMaxColumns; ++c) {
    auto byte = static_cast<std::uint8_t>(mask >> (8 * c));
    if (std::popcount(byte) > 1) return false;
  }
  return true;
}

SignedSet::SignedSet(std::initializer_list<Point> points)
    : mask_(build_mask(std::span<const Point>(points.begin(), points.size()))) {}

SignedSet::SignedSet(std::span<const Point> points) : mask_(build_mask(points)) {}

SignedSet SignedSet::from_mask(std::uint64_t mask) {
  if (!is_partial_function(mask)) throw ValidityError("mask assigns two signs to one column");
  return SignedSet(Raw{}, mask);
}

int SignedSet::size() const noexcept { return std::popcount(mask_); }

std::vector<Point> SignedSet::points() const {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m; m &= m - 1) {
    int bit = std::countr_zero(m);
    out.push_back({bit / 8 + 1, bit % 8 + 1});
  }
  return out;
}

bool SignedSet::contains(Point p) const noexcept {
  if (p.x < 1 || p.x > kMaxColumns || p.y < 1 || p.y > kMaxSigns) return false;
  return (mask_ >> point_bit(p.x, p.y)) & 1u;
}

int SignedSet::sign_at(int x) const noexcept {
  if (x < 1 || x > kMaxColumns) return 0;
  auto byte = static_cast<std::uint8_t>(mask_ >> (8 * (x - 1)));
  return byte ? std::countr_zero(byte) + 1 : 0;
}

bool SignedSet::valid_for(int n, int k) const noexcept {
  for (std::uint64_t m = mask_; m; m &= m - 1) {
    int bit = std::countr_zero(m);
    if (bit / 8 + 1 > n || bit % 8 + 1 > k) return false;
  }
  return true;
}

bool SignedSet::compatible_with(const SignedSet& other) const noexcept {
  return is_partial_function(mask_ | other.mask_);
}

SignedSet SignedSet::union_with(const SignedSet& other) const {
  return from_mask(mask_ | other.mask_);
}

std::string SignedSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Point p : points()) {
    if (!first) os << ',';
    first = false;
    os << '(' << p.x << ',' << p.y << ')';
  }
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const SignedSet& a, const SignedSet& b) noexcept {
  std::uint64_t ma = a.mask_, mb = b.mask_;
  while (ma && mb) {
    int ba = std::countr_zero(ma), bb = std::countr_zero(mb);
    if (ba != bb) return ba <=> bb;
    ma &= ma - 1;
    mb &= mb - 1;
  }
  if (!ma && !mb) return std::strong_ordering::equal;
  return ma ? std::strong_ordering::greater : std::strong_ordering::less;
}

Params::Params(int n, int r, int k, int t) : n_(n), r_(r), k_(k), t_(t) {
  if (!is_valid(n, r, k, t))
    throw ParameterError("invalid parameters " + to_string() + ": need n >= r >= t >= 1 and k >= 2");
}

bool Params::is_valid(int n, int r, int k, int t) noexcept {
  return t >= 1 && r >= t && n >= r && k >= 2;
}

std::string Params::to_string() const {
  return "(n=" + std::to_string(n_) + ",r=" + std::to_string(r_) + ",k=" + std::to_string(k_) +
         ",t=" + std::to_string(t_) + ")";
}

Family::Family(Params params, std::vector<SignedSet> members)
    : params_(params), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.size() != params_.r())
      throw ValidityError("member " + m.to_string() + " does not have r = " +
                          std::to_string(params_.r()) + " points");
    if (!m.valid_for(params_.n(), params_.k()))
      throw ValidityError("member " + m.to_string() + " is not a signed set over " + params_.to_string());
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(const SignedSet& s) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::vector<std::uint64_t> Family::masks() const {
  std::vector<std::uint64_t> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.mask());
  return out;
}

int intersect_size(const SignedSet& a, const SignedSet& b) noexcept {
  return std::popcount(a.mask() & b.mask());
}

int intersect_size(const Params& params, const SignedSet& a, const SignedSet& b) {
  if (!a.valid_for(params.n(), params.k()) || !b.valid_for(params.n(), params.k()))
    throw ParameterError("signed sets " + a.to_string() + " and " + b.to_string() +
                         " do not share the ambient parameters " + params.to_string());
  return intersect_size(a, b);
}

SignedSet prefix_set(int d, const Params& params) {
  if (d < 0 || d > params.n())
    throw RangeError("prefix length " + std::to_string(d) + " outside [0, n]");
  if (d > kMaxColumns) throw CapacityError("signed sets support columns up to 8");
  std::uint64_t mask = 0;
  for (int x = 1; x <= d; ++x) mask |= std::uint64_t{1} << point_bit(x, 1);
  return SignedSet::from_mask(mask);
}

std::uint64_t universe_size(const Params& params) {
  std::uint64_t c = 1;
  for (int i = 1; i <= params.r(); ++i) c = c * static_cast<std::uint64_t>(params.n() - params.r() + i) / i;
  for (int i = 0; i < params.r(); ++i) c *= static_cast<std::uint64_t>(params.k());
  return c;
}

void for_each_in_universe(const Params& params, const std::function<void(const SignedSet&)>& visit) {
  const int n = params.n(), r = params.r(), k = params.k();
  if (n > kMaxColumns || k > kMaxSigns)
    throw CapacityError("universe enumeration supports n, k <= 8; got " + params.to_string());
  std::vector<int> cols(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) cols[i] = i + 1;
  std::vector<int> signs(static_cast<std::size_t>(r));
  while (true) {
    std::fill(signs.begin(), signs.end(), 1);
    while (true) {
      std::uint64_t mask = 0;
      for (int i = 0; i < r; ++i) mask |= std::uint64_t{1} << point_bit(cols[i], signs[i]);
      visit(SignedSet::from_mask(mask));
      int pos = r - 1;
      while (pos >= 0 && signs[pos] == k) signs[pos--] = 1;
      if (pos < 0) break;
      ++signs[pos];
    }
    int pos = r - 1;
    while (pos >= 0 && cols[pos] == n - r + pos + 1) --pos;
    if (pos < 0) break;
    ++cols[pos];
    for (int i = pos + 1; i < r; ++i) cols[i] = cols[i - 1] + 1;
  }
}

std::vector<SignedSet> enumerate_universe(const Params& params) {
  std::vector<SignedSet> out;
  out.reserve(static_cast<std::size_t>(universe_size(params)));
  for_each_in_universe(params, [&](const SignedSet& s) { out.push_back(s); });
  return out;
}

} // namespace signedfam
