#include <bit>

#include "dcrit/simd/bitset_kernels.hpp"

namespace dcrit::simd {
namespace {

void or_into_scalar(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

bool andnot_any_scalar(Word* dst, const Word* mask, std::size_t words) {
  Word acc = 0;
  for (std::size_t i = 0; i < words; ++i) {
    dst[i] &= ~mask[i];
    acc |= dst[i];
  }
  return acc != 0;
}

bool intersects_scalar(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

std::size_t popcount_scalar(const Word* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      "scalar",          or_into_scalar,  andnot_any_scalar, intersects_scalar,
      popcount_scalar,   and_popcount_scalar,
  };
  return table;
}

}  // namespace dcrit::simd
