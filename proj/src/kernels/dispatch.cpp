#include <atomic>
#include <cassert>

#include "heffter/kernels.hpp"

namespace heffter::kernels {

namespace {

Isa probe() noexcept {
#ifdef HEFFTER_HAVE_AVX2_KERNELS
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() noexcept {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

bool set_active_isa(Isa isa) noexcept {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) return false;
  active().store(isa, std::memory_order_relaxed);
  return true;
}

std::size_t count_marked(std::span<const std::uint32_t> logs, std::uint32_t shift,
                         std::uint32_t modulus, const MarkTable& table) {
  assert(table.size() >= modulus);
#ifdef HEFFTER_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2) {
    return avx2::count_marked(logs.data(), logs.size(), shift, modulus, table.stamps(),
                              table.generation());
  }
#endif
  return scalar::count_marked(logs.data(), logs.size(), shift, modulus, table.stamps(),
                              table.generation());
}

void rotate_logs(std::span<const std::uint32_t> in, std::uint32_t shift,
                 std::uint32_t modulus, std::span<std::uint32_t> out) {
  assert(out.size() >= in.size());
#ifdef HEFFTER_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2) {
    avx2::rotate_logs(in.data(), in.size(), shift, modulus, out.data());
    return;
  }
#endif
  scalar::rotate_logs(in.data(), in.size(), shift, modulus, out.data());
}

void mark_rotated(std::span<const std::uint32_t> logs, std::uint32_t shift,
                  std::uint32_t modulus, MarkTable& table) {
  for (std::uint32_t v : logs) {
    const std::uint32_t idx = v + shift;
    table.mark(idx >= modulus ? idx - modulus : idx);
  }
}

}  // namespace heffter::kernels
