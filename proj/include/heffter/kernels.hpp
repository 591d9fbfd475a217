#pragma once

// Data-parallel inner loops over discrete-log arrays.
//
// Nonzero field elements are handled as logs in [0, q-1). Multiplying a set
// by r^s is then "add s mod (q-1)" on every entry, and membership goes through
// a MarkTable indexed by log. Each kernel has a scalar reference version and,
// on x86-64, an AVX2 version; the variant is chosen once at runtime from CPUID
// and can be overridden for equivalence testing.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace heffter::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Best variant the running CPU supports.
Isa detected_isa() noexcept;
/// Variant currently used by the dispatching entry points.
Isa active_isa() noexcept;
/// Forces a variant; returns false (and changes nothing) if unsupported.
bool set_active_isa(Isa isa) noexcept;

/// Membership over [0, size) with O(1) clear via generation stamps.
/// Slot i is marked iff stamp(i) == generation().
class MarkTable {
 public:
  MarkTable() = default;
  explicit MarkTable(std::size_t size) : stamps_(size, 0) {}

  std::size_t size() const noexcept { return stamps_.size(); }
  void resize(std::size_t size) {
    stamps_.assign(size, 0);
    generation_ = 1;
  }

  void clear() noexcept {
    if (++generation_ == 0) {
      std::fill(stamps_.begin(), stamps_.end(), 0u);
      generation_ = 1;
    }
  }
  void mark(std::uint32_t i) noexcept { stamps_[i] = generation_; }
  void unmark(std::uint32_t i) noexcept { stamps_[i] = 0; }
  bool marked(std::uint32_t i) const noexcept { return stamps_[i] == generation_; }

  const std::uint32_t* stamps() const noexcept { return stamps_.data(); }
  std::uint32_t generation() const noexcept { return generation_; }

 private:
  std::vector<std::uint32_t> stamps_;
  std::uint32_t generation_ = 1;
};

/// Number of i with table.marked((logs[i] + shift) mod modulus).
/// Requires logs[i] < modulus, shift < modulus, table.size() >= modulus.
std::size_t count_marked(std::span<const std::uint32_t> logs, std::uint32_t shift,
                         std::uint32_t modulus, const MarkTable& table);

/// out[i] = (in[i] + shift) mod modulus; same preconditions as count_marked.
void rotate_logs(std::span<const std::uint32_t> in, std::uint32_t shift,
                 std::uint32_t modulus, std::span<std::uint32_t> out);

/// Marks (logs[i] + shift) mod modulus for every i.
void mark_rotated(std::span<const std::uint32_t> logs, std::uint32_t shift,
                  std::uint32_t modulus, MarkTable& table);

namespace scalar {
std::size_t count_marked(const std::uint32_t* logs, std::size_t n, std::uint32_t shift,
                         std::uint32_t modulus, const std::uint32_t* stamps,
                         std::uint32_t generation);
void rotate_logs(const std::uint32_t* in, std::size_t n, std::uint32_t shift,
                 std::uint32_t modulus, std::uint32_t* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define HEFFTER_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::size_t count_marked(const std::uint32_t* logs, std::size_t n, std::uint32_t shift,
                         std::uint32_t modulus, const std::uint32_t* stamps,
                         std::uint32_t generation);
void rotate_logs(const std::uint32_t* in, std::size_t n, std::uint32_t shift,
                 std::uint32_t modulus, std::uint32_t* out);
}  // namespace avx2
#endif

}  // namespace heffter::kernels
