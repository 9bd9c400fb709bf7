#ifndef STABLEORDERS_RNG_HPP
#define STABLEORDERS_RNG_HPP

#include <array>
#include <cstdint>

namespace stableorders {

// Philox4x32-10 block function (Salmon et al., "Parallel random numbers: as
// easy as 1, 2, 3"). Exposed for known-answer testing.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// Deterministic random stream identified by (seed, stream_id).
///
/// The seed is the Philox key and the stream id occupies the upper half of the
/// 128-bit counter, so two states with different stream ids walk disjoint
/// counter ranges of the same keyed bijection. A state advances as it is
/// drawn from; copying a state forks an identical sequence.
class RngState {
 public:
  explicit RngState(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  std::uint64_t blocks_consumed() const noexcept { return block_; }

  std::uint64_t next_u64() noexcept;

  /// Uniform on the open interval (0,1) with 53-bit resolution; an exact zero
  /// bit pattern is rejected and redrawn.
  double uniform_open() noexcept;

  /// A child stream keyed by the same seed. Children of distinct `index` (and
  /// of distinct parents) get distinct stream ids with overwhelming
  /// probability; the parent is not advanced.
  RngState substream(std::uint64_t index) const noexcept;

  /// Substream keyed by a tag and a real parameter (e.g. alpha), so that the
  /// same variable at the same parameter value reuses the same draws.
  RngState substream_for(std::uint64_t tag, double param = 0.0) const noexcept;

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace stableorders

#endif
