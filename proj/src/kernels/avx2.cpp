#include "tables.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))

#include <immintrin.h>

#include <bit>
#include <cstring>

namespace signedfam::kernels::detail {

namespace {

#define SF_AVX2 __attribute__((target("avx2,popcnt")))

// Per-lane 64-bit popcount via the nibble lookup + SAD reduction.
SF_AVX2 inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1,
                                       2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

SF_AVX2 inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

SF_AVX2 void threshold_row(const std::uint64_t* masks, std::size_t count, std::uint64_t probe, int t,
                           std::uint64_t* row) {
  std::memset(row, 0, ((count + 63) / 64) * sizeof(std::uint64_t));
  const __m256i vprobe = _mm256_set1_epi64x(static_cast<long long>(probe));
  const __m256i below = _mm256_set1_epi64x(t - 1);
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + j));
    __m256i cnt = popcount_epi64(_mm256_and_si256(m, vprobe));
    auto bits = static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(cnt, below))));
    row[j / 64] |= bits << (j % 64);
  }
  for (; j < count; ++j)
    if (std::popcount(masks[j] & probe) >= t) row[j / 64] |= std::uint64_t{1} << (j % 64);
}

SF_AVX2 std::size_t first_below(const std::uint64_t* masks, std::size_t count, std::uint64_t probe, int t) {
  const __m256i vprobe = _mm256_set1_epi64x(static_cast<long long>(probe));
  const __m256i vt = _mm256_set1_epi64x(t);
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + j));
    __m256i cnt = popcount_epi64(_mm256_and_si256(m, vprobe));
    int bits = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(vt, cnt)));
    if (bits) return j + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(bits)));
  }
  for (; j < count; ++j)
    if (std::popcount(masks[j] & probe) < t) return j;
  return count;
}

SF_AVX2 std::size_t and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                             std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                 _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    acc = _mm256_add_epi64(acc, popcount_epi64(v));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) {
    dst[i] = a[i] & b[i];
    total += static_cast<std::size_t>(std::popcount(dst[i]));
  }
  return total;
}

SF_AVX2 std::size_t andnot_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i v = _mm256_andnot_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)),
                                    _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    acc = _mm256_add_epi64(acc, popcount_epi64(v));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) {
    dst[i] = a[i] & ~b[i];
    total += static_cast<std::size_t>(std::popcount(dst[i]));
  }
  return total;
}

SF_AVX2 std::size_t and_count(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                 _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
    acc = _mm256_add_epi64(acc, popcount_epi64(v));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

#undef SF_AVX2

constexpr KernelTable kAvx2{Isa::avx2, "avx2", threshold_row, first_below, and_into, andnot_into, and_count};

} // namespace

const KernelTable* avx2_table() noexcept {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt") ? &kAvx2 : nullptr;
}

} // namespace signedfam::kernels::detail

#else

namespace signedfam::kernels::detail {
const KernelTable* avx2_table() noexcept { return nullptr; }
} // namespace signedfam::kernels::detail

#endif
