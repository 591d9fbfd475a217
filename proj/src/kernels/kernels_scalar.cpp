#include "heffter/kernels.hpp"

namespace heffter::kernels::scalar {

std::size_t count_marked(const std::uint32_t* logs, std::size_t n, std::uint32_t shift,
                         std::uint32_t modulus, const std::uint32_t* stamps,
                         std::uint32_t generation) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t idx = logs[i] + shift;
    if (idx >= modulus) idx -= modulus;
    hits += stamps[idx] == generation;
  }
  return hits;
}

void rotate_logs(const std::uint32_t* in, std::size_t n, std::uint32_t shift,
                 std::uint32_t modulus, std::uint32_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t v = in[i] + shift;
    out[i] = v >= modulus ? v - modulus : v;
  }
}

}  // namespace heffter::kernels::scalar
