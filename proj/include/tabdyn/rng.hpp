#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace tabdyn {

/// Philox4x64-10 block function (Salmon et al., counter-based).
using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;

PhiloxCounter philox4x64_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Split rule: the stream for (seed, stream_id) uses key {seed, stream_id}
/// and a 256-bit block counter that is incremented before each block, so
/// the first block uses counter 1. Distinct keys give
/// independent streams; nothing is shared between them.
inline constexpr const char* kRngName = "philox4x64-10";

class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
      : key_{seed, stream_id} {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    if (pos_ == 4) refill();
    return block_[pos_++];
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Exp(1) by inversion.
  double exponential() noexcept { return -std::log1p(-uniform()); }

  /// Uniform integer in [0, bound) by Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) noexcept;

  [[nodiscard]] std::uint64_t seed() const noexcept { return key_[0]; }
  [[nodiscard]] std::uint64_t stream_id() const noexcept { return key_[1]; }

 private:
  void refill() noexcept;

  PhiloxKey key_;
  PhiloxCounter counter_{0, 0, 0, 0};
  PhiloxCounter block_{};
  int pos_ = 4;
};

/// Stream id for trial `trial` of the experiment tagged `salt`. Salts keep
/// experiments that share a user seed on disjoint streams.
constexpr std::uint64_t trial_stream(std::uint32_t salt,
                                     std::uint64_t trial) noexcept {
  return (static_cast<std::uint64_t>(salt) << 40) ^ trial;
}

}  // namespace tabdyn
