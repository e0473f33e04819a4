#include <bit>
#include <cstring>

#include "tables.hpp"

namespace signedfam::kernels {

namespace {

void threshold_row(const std::uint64_t* masks, std::size_t count, std::uint64_t probe, int t,
                   std::uint64_t* row) {
  std::memset(row, 0, ((count + 63) / 64) * sizeof(std::uint64_t));
  for (std::size_t j = 0; j < count; ++j)
    if (std::popcount(masks[j] & probe) >= t) row[j / 64] |= std::uint64_t{1} << (j % 64);
}

std::size_t first_below(const std::uint64_t* masks, std::size_t count, std::uint64_t probe, int t) {
  for (std::size_t j = 0; j < count; ++j)
    if (std::popcount(masks[j] & probe) < t) return j;
  return count;
}

std::size_t and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) {
    dst[i] = a[i] & b[i];
    total += static_cast<std::size_t>(std::popcount(dst[i]));
  }
  return total;
}

std::size_t andnot_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) {
    dst[i] = a[i] & ~b[i];
    total += static_cast<std::size_t>(std::popcount(dst[i]));
  }
  return total;
}

std::size_t and_count(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

constexpr KernelTable kScalar{Isa::scalar, "scalar", threshold_row, first_below, and_into, andnot_into, and_count};

} // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

} // namespace signedfam::kernels
