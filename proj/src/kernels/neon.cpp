#include "tables.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <bit>
#include <cstring>

namespace signedfam::kernels::detail {

namespace {

// Two 64-bit lane popcounts.
inline uint64x2_t popcount_u64(uint64x2_t v) {
  return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}

void threshold_row(const std::uint64_t* masks, std::size_t count, std::uint64_t probe, int t,
                   std::uint64_t* row) {
  std::memset(row, 0, ((count + 63) / 64) * sizeof(std::uint64_t));
  const uint64x2_t vprobe = vdupq_n_u64(probe);
  const uint64x2_t vt = vdupq_n_u64(static_cast<std::uint64_t>(t));
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    uint64x2_t ge = vcgeq_u64(popcount_u64(vandq_u64(vld1q_u64(masks + j), vprobe)), vt);
    std::uint64_t bits = (vgetq_lane_u64(ge, 0) & 1u) | ((vgetq_lane_u64(ge, 1) & 1u) << 1);
    row[j / 64] |= bits << (j % 64);
  }
  for (; j < count; ++j)
    if (std::popcount(masks[j] & probe) >= t) row[j / 64] |= std::uint64_t{1} << (j % 64);
}

std::size_t first_below(const std::uint64_t* masks, std::size_t count, std::uint64_t probe, int t) {
  const uint64x2_t vprobe = vdupq_n_u64(probe);
  const uint64x2_t vt = vdupq_n_u64(static_cast<std::uint64_t>(t));
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    uint64x2_t lt = vcltq_u64(popcount_u64(vandq_u64(vld1q_u64(masks + j), vprobe)), vt);
    if (vgetq_lane_u64(lt, 0)) return j;
    if (vgetq_lane_u64(lt, 1)) return j + 1;
  }
  for (; j < count; ++j)
    if (std::popcount(masks[j] & probe) < t) return j;
  return count;
}

std::size_t and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    vst1q_u64(dst + i, v);
    acc = vaddq_u64(acc, popcount_u64(v));
  }
  std::size_t total = static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
  for (; i < words; ++i) {
    dst[i] = a[i] & b[i];
    total += static_cast<std::size_t>(std::popcount(dst[i]));
  }
  return total;
}

std::size_t andnot_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    uint64x2_t v = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    vst1q_u64(dst + i, v);
    acc = vaddq_u64(acc, popcount_u64(v));
  }
  std::size_t total = static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
  for (; i < words; ++i) {
    dst[i] = a[i] & ~b[i];
    total += static_cast<std::size_t>(std::popcount(dst[i]));
  }
  return total;
}

std::size_t and_count(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) acc = vaddq_u64(acc, popcount_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i))));
  std::size_t total = static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

constexpr KernelTable kNeon{Isa::neon, "neon", threshold_row, first_below, and_into, andnot_into, and_count};

} // namespace

const KernelTable* neon_table() noexcept { return &kNeon; }

} // namespace signedfam::kernels::detail

#else

namespace signedfam::kernels::detail {
const KernelTable* neon_table() noexcept { return nullptr; }
} // namespace signedfam::kernels::detail

#endif
