#pragma once

// Data-parallel inner loops, with a scalar reference implementation and
// SIMD variants (AVX2 on x86-64, NEON on AArch64) chosen at runtime.
//
// Two kinds of kernel live here:
//   * mask kernels work on arrays of signed-set masks and a probe mask,
//     thresholding |probe ∩ mask| against t;
//   * bitset kernels work on word arrays (vertex sets of the clique search).
//
// Setting SIGNEDFAM_KERNELS=scalar in the environment forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace signedfam::kernels {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  std::string_view name;
  /// Sets bit j of row (cleared first, ceil(count/64) words) iff popcount(masks[j] & probe) >= t.
  void (*threshold_row)(const std::uint64_t* masks, std::size_t count, std::uint64_t probe, int t,
                        std::uint64_t* row);
  /// First index j with popcount(masks[j] & probe) < t, or count when none.
  std::size_t (*first_below)(const std::uint64_t* masks, std::size_t count, std::uint64_t probe, int t);
  /// dst = a & b over words; returns popcount(dst).
  std::size_t (*and_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  /// dst = a & ~b over words; returns popcount(dst).
  std::size_t (*andnot_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                             std::size_t words);
  /// popcount(a & b) without storing.
  std::size_t (*and_count)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the variant is not compiled in or the CPU lacks it.
const KernelTable* table_for(Isa isa) noexcept;
/// Every variant usable on this machine, scalar first.
std::vector<const KernelTable*> available() noexcept;
/// The table used by the library.
const KernelTable& active() noexcept;

inline void threshold_row(std::span<const std::uint64_t> masks, std::uint64_t probe, int t,
                          std::span<std::uint64_t> row) {
  active().threshold_row(masks.data(), masks.size(), probe, t, row.data());
}

inline std::size_t first_below(std::span<const std::uint64_t> masks, std::uint64_t probe, int t) {
  return active().first_below(masks.data(), masks.size(), probe, t);
}

inline bool all_meet(std::span<const std::uint64_t> masks, std::uint64_t probe, int t) {
  return first_below(masks, probe, t) == masks.size();
}

} // namespace signedfam::kernels
