#pragma once

// Word-parallel kernels over packed adjacency bitsets.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant compiled with -mavx2. active_kernels() picks the widest variant the
// running CPU supports; DCRIT_SIMD=scalar in the environment forces the
// reference path. All variants must produce identical results.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace dcrit::simd {

using Word = std::uint64_t;

struct KernelTable {
  std::string_view name;
  // dst[i] |= src[i]
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  // dst[i] &= ~mask[i]; returns true if any bit of dst remains set.
  bool (*andnot_any)(Word* dst, const Word* mask, std::size_t words);
  // true iff a[i] & b[i] != 0 for some i.
  bool (*intersects)(const Word* a, const Word* b, std::size_t words);
  std::size_t (*popcount)(const Word* a, std::size_t words);
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

const KernelTable& active_kernels();

}  // namespace dcrit::simd
