// AVX2 variants of the word-array kernels. Compiled with -mavx2 -mpopcnt and
// gated at runtime behind __builtin_cpu_supports, so the library still runs
// on older cores through the scalar path.

#include "qiso/kernels.hpp"

#ifdef QISO_HAVE_AVX2

#include <immintrin.h>

namespace qiso::kern {

namespace {

std::uint64_t popcnt_avx2(const Word* a, std::size_t n) {
  // Word counts stay scalar popcnt; the 256-bit loads only gather operands.
  std::uint64_t c = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c += static_cast<std::uint64_t>(__builtin_popcountll(a[i]));
    c += static_cast<std::uint64_t>(__builtin_popcountll(a[i + 1]));
    c += static_cast<std::uint64_t>(__builtin_popcountll(a[i + 2]));
    c += static_cast<std::uint64_t>(__builtin_popcountll(a[i + 3]));
  }
  for (; i < n; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i]));
  return c;
}

std::uint64_t and_popcnt_avx2(const Word* a, const Word* b, std::size_t n) {
  std::uint64_t c = 0;
  std::size_t i = 0;
  alignas(32) Word tmp[4];
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), _mm256_and_si256(va, vb));
    c += static_cast<std::uint64_t>(__builtin_popcountll(tmp[0]));
    c += static_cast<std::uint64_t>(__builtin_popcountll(tmp[1]));
    c += static_cast<std::uint64_t>(__builtin_popcountll(tmp[2]));
    c += static_cast<std::uint64_t>(__builtin_popcountll(tmp[3]));
  }
  for (; i < n; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
  return c;
}

void and_into_avx2(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_assign_avx2(Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // _mm256_andnot_si256 computes (~first) & second.
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), _mm256_andnot_si256(vb, va));
  }
  for (; i < n; ++i) a[i] &= ~b[i];
}

void or_assign_avx2(Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), _mm256_or_si256(va, vb));
  }
  for (; i < n; ++i) a[i] |= b[i];
}

void xor_assign_avx2(Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), _mm256_xor_si256(va, vb));
  }
  for (; i < n; ++i) a[i] ^= b[i];
}

const Ops kAvx2 = {
    "avx2",         popcnt_avx2,        and_popcnt_avx2,
    and_into_avx2,  andnot_assign_avx2, or_assign_avx2,
    xor_assign_avx2,
};

}  // namespace

const Ops* avx2_ops() {
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return ok ? &kAvx2 : nullptr;
}

}  // namespace qiso::kern

#endif  // QISO_HAVE_AVX2
