#include <immintrin.h>

#include <bit>

#include "dcrit/simd/bitset_kernels.hpp"

namespace dcrit::simd {
namespace {

constexpr std::size_t kLane = 4;  // 64-bit words per __m256i

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void or_into_avx2(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

bool andnot_any_avx2(Word* dst, const Word* mask, std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + kLane <= words; i += kLane) {
    // _mm256_andnot_si256(a, b) computes ~a & b
    const __m256i v = _mm256_andnot_si256(load(mask + i), load(dst + i));
    store(dst + i, v);
    acc = _mm256_or_si256(acc, v);
  }
  bool any = _mm256_testz_si256(acc, acc) == 0;
  for (; i < words; ++i) {
    dst[i] &= ~mask[i];
    any = any || dst[i] != 0;
  }
  return any;
}

bool intersects_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    if (_mm256_testz_si256(load(a + i), load(b + i)) == 0) return true;
  }
  for (; i < words; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

// AVX2 has no vector popcount; unroll the 64-bit popcnt over a 256-bit block.
std::size_t popcount_avx2(const Word* a, std::size_t words) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]) + _mm_popcnt_u64(a[i + 1]) +
                                      _mm_popcnt_u64(a[i + 2]) + _mm_popcnt_u64(a[i + 3]));
  }
  for (; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::size_t and_popcount_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  std::size_t i = 0;
  alignas(32) Word lanes[kLane];
  for (; i + kLane <= words; i += kLane) {
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes),
                       _mm256_and_si256(load(a + i), load(b + i)));
    total += static_cast<std::size_t>(_mm_popcnt_u64(lanes[0]) + _mm_popcnt_u64(lanes[1]) +
                                      _mm_popcnt_u64(lanes[2]) + _mm_popcnt_u64(lanes[3]));
  }
  for (; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

}  // namespace

// Defined here so the dispatcher can reference it without including
// intrinsics; only called after a CPUID check.
const KernelTable& avx2_kernel_table() {
  static const KernelTable table{
      "avx2",        or_into_avx2,      andnot_any_avx2, intersects_avx2,
      popcount_avx2, and_popcount_avx2,
  };
  return table;
}

}  // namespace dcrit::simd
