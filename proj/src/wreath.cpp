#include "signedfam/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace signedfam {

namespace {

bool is_permutation_of_1_to(const std::vector<int>& v, int size) {
  if (static_cast<int>(v.size()) != size) return false;
  std::vector<bool> seen(static_cast<std::size_t>(size) + 1, false);
  for (int e : v) {
    if (e < 1 || e > size || seen[e]) return false;
    seen[e] = true;
  }
  return true;
}

std::vector<int> iota_vec(int size) {
  std::vector<int> v(static_cast<std::size_t>(size));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

} // namespace

WreathMap::WreathMap(int n, int k) : k_(k) {
  if (n < 1 || n > kMaxColumns || k < 1 || k > kMaxSigns)
    throw ParameterError("wreath maps support 1 <= n, k <= 8");
  column_perm_ = iota_vec(n);
  sign_perms_.assign(static_cast<std::size_t>(n), iota_vec(k));
  build_tables();
}

WreathMap::WreathMap(std::vector<int> column_perm, std::vector<std::vector<int>> sign_perms)
    : column_perm_(std::move(column_perm)), sign_perms_(std::move(sign_perms)) {
  const int n = static_cast<int>(column_perm_.size());
  if (n < 1 || n > kMaxColumns || !is_permutation_of_1_to(column_perm_, n))
    throw ParameterError("column permutation is not a permutation of [n]");
  if (static_cast<int>(sign_perms_.size()) != n)
    throw ParameterError("need one sign permutation per column");
  k_ = static_cast<int>(sign_perms_.front().size());
  if (k_ < 1 || k_ > kMaxSigns) throw ParameterError("wreath maps support k <= 8");
  for (const auto& sp : sign_perms_)
    if (!is_permutation_of_1_to(sp, k_)) throw ParameterError("sign permutation is not a permutation of [k]");
  build_tables();
}

void WreathMap::build_tables() {
  byte_image_.assign(column_perm_.size(), {});
  for (std::size_t x = 0; x < column_perm_.size(); ++x) {
    for (int b = 0; b < 256; ++b) {
      std::uint8_t img = 0;
      for (int y = 1; y <= k_; ++y)
        if (b & (1 << (y - 1))) img |= static_cast<std::uint8_t>(1u << (sign_perms_[x][y - 1] - 1));
      byte_image_[x][static_cast<std::size_t>(b)] = img;
    }
  }
}

WreathMap WreathMap::random(int n, int k, std::mt19937_64& rng) {
  std::vector<int> cols = iota_vec(n);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<std::vector<int>> signs(static_cast<std::size_t>(n), iota_vec(k));
  for (auto& s : signs) std::shuffle(s.begin(), s.end(), rng);
  return WreathMap(std::move(cols), std::move(signs));
}

Point WreathMap::apply(Point p) const {
  if (p.x < 1 || p.x > n() || p.y < 1 || p.y > k_)
    throw ParameterError("point outside [n]x[k] of the map");
  return {column_perm_[p.x - 1], sign_perms_[p.x - 1][p.y - 1]};
}

SignedSet WreathMap::apply(const SignedSet& s) const {
  if (!s.valid_for(n(), k_)) throw ParameterError("signed set " + s.to_string() + " exceeds the map's [n]x[k]");
  return SignedSet::from_mask(apply_mask(s.mask()));
}

std::uint64_t WreathMap::apply_mask(std::uint64_t mask) const noexcept {
  std::uint64_t out = 0;
  for (std::size_t x = 0; x < column_perm_.size(); ++x) {
    auto byte = static_cast<std::uint8_t>(mask >> (8 * x));
    if (!byte) continue;
    out |= static_cast<std::uint64_t>(byte_image_[x][byte]) << (8 * (column_perm_[x] - 1));
  }
  return out;
}

WreathMap WreathMap::after(const WreathMap& inner) const {
  if (inner.n() != n() || inner.k() != k_) throw ParameterError("composing wreath maps of different shape");
  std::vector<int> cols(column_perm_.size());
  std::vector<std::vector<int>> signs(column_perm_.size(), std::vector<int>(static_cast<std::size_t>(k_)));
  for (std::size_t x = 0; x < cols.size(); ++x) {
    const int mid = inner.column_perm_[x] - 1;
    cols[x] = column_perm_[static_cast<std::size_t>(mid)];
    for (int y = 0; y < k_; ++y)
      signs[x][static_cast<std::size_t>(y)] = sign_perms_[static_cast<std::size_t>(mid)][inner.sign_perms_[x][y] - 1];
  }
  return WreathMap(std::move(cols), std::move(signs));
}

WreathMap WreathMap::inverse() const {
  std::vector<int> cols(column_perm_.size());
  std::vector<std::vector<int>> signs(column_perm_.size(), std::vector<int>(static_cast<std::size_t>(k_)));
  for (std::size_t x = 0; x < cols.size(); ++x) {
    const auto img = static_cast<std::size_t>(column_perm_[x] - 1);
    cols[img] = static_cast<int>(x) + 1;
    for (int y = 0; y < k_; ++y) signs[img][static_cast<std::size_t>(sign_perms_[x][y] - 1)] = y + 1;
  }
  return WreathMap(std::move(cols), std::move(signs));
}

bool WreathMap::is_identity() const noexcept { return *this == WreathMap(n(), k_); }

std::string WreathMap::to_string() const {
  std::ostringstream os;
  os << "cols[";
  for (std::size_t i = 0; i < column_perm_.size(); ++i) os << (i ? "," : "") << column_perm_[i];
  os << "] signs[";
  for (std::size_t i = 0; i < sign_perms_.size(); ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < sign_perms_[i].size(); ++j) os << (j ? "," : "") << sign_perms_[i][j];
  }
  os << ']';
  return os.str();
}

WreathMap normalize_to_prefix(const SignedSet& q, const Params& params) {
  if (!q.valid_for(params.n(), params.k()))
    throw ValidityError("signed set " + q.to_string() + " is not valid for " + params.to_string());
  const int n = params.n(), k = params.k();
  const auto pts = q.points();
  std::vector<int> cols(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    int v = x;
    // (1 s_1) acts first, (q s_q) last
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int pos = static_cast<int>(i) + 1;
      if (v == pos)
        v = pts[i].x;
      else if (v == pts[i].x)
        v = pos;
    }
    cols[static_cast<std::size_t>(x - 1)] = v;
  }
  std::vector<std::vector<int>> signs(static_cast<std::size_t>(n), iota_vec(k));
  for (Point p : pts) std::swap(signs[static_cast<std::size_t>(p.x - 1)][0], signs[static_cast<std::size_t>(p.x - 1)][static_cast<std::size_t>(p.y - 1)]);
  return WreathMap(std::move(cols), std::move(signs));
}

} // namespace signedfam
