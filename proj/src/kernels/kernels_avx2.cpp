// Compiled with -mavx2; only reached after a CPUID check.

#include <immintrin.h>

#include "heffter/kernels.hpp"

namespace heffter::kernels::avx2 {

namespace {

// (v + shift) mod modulus for lanes already < modulus. Logs stay below 2^27,
// so signed 32-bit compares are exact.
inline __m256i add_mod(__m256i v, __m256i shift, __m256i modulus, __m256i limit) {
  const __m256i sum = _mm256_add_epi32(v, shift);
  const __m256i over = _mm256_cmpgt_epi32(sum, limit);
  return _mm256_sub_epi32(sum, _mm256_and_si256(over, modulus));
}

}  // namespace

std::size_t count_marked(const std::uint32_t* logs, std::size_t n, std::uint32_t shift,
                         std::uint32_t modulus, const std::uint32_t* stamps,
                         std::uint32_t generation) {
  const __m256i vshift = _mm256_set1_epi32(static_cast<int>(shift));
  const __m256i vmod = _mm256_set1_epi32(static_cast<int>(modulus));
  const __m256i vlimit = _mm256_set1_epi32(static_cast<int>(modulus) - 1);
  const __m256i vgen = _mm256_set1_epi32(static_cast<int>(generation));
  const auto* base = reinterpret_cast<const int*>(stamps);

  std::size_t hits = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(logs + i));
    const __m256i idx = add_mod(v, vshift, vmod, vlimit);
    const __m256i got = _mm256_i32gather_epi32(base, idx, 4);
    const __m256i eq = _mm256_cmpeq_epi32(got, vgen);
    hits += static_cast<std::size_t>(
        __builtin_popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)))));
  }
  for (; i < n; ++i) {
    std::uint32_t idx = logs[i] + shift;
    if (idx >= modulus) idx -= modulus;
    hits += stamps[idx] == generation;
  }
  return hits;
}

void rotate_logs(const std::uint32_t* in, std::size_t n, std::uint32_t shift,
                 std::uint32_t modulus, std::uint32_t* out) {
  const __m256i vshift = _mm256_set1_epi32(static_cast<int>(shift));
  const __m256i vmod = _mm256_set1_epi32(static_cast<int>(modulus));
  const __m256i vlimit = _mm256_set1_epi32(static_cast<int>(modulus) - 1);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), add_mod(v, vshift, vmod, vlimit));
  }
  for (; i < n; ++i) {
    const std::uint32_t v = in[i] + shift;
    out[i] = v >= modulus ? v - modulus : v;
  }
}

}  // namespace heffter::kernels::avx2
