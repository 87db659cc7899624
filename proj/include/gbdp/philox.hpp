#ifndef GBDP_PHILOX_HPP
#define GBDP_PHILOX_HPP

#include <array>
#include <cstdint>

namespace gbdp {

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011).
//
// Every draw is a pure function of (key, counter), so simulation code can key
// streams by (seed, stream, step, purpose) and obtain identical numbers under
// any execution order or thread schedule.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      ctr = single_round(ctr, key);
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static Counter single_round(const Counter& c, const Key& k) {
    const std::uint64_t p0 = std::uint64_t(kMul0) * c[0];
    const std::uint64_t p1 = std::uint64_t(kMul1) * c[2];
    return Counter{std::uint32_t(p1 >> 32) ^ c[1] ^ k[0], std::uint32_t(p1),
                   std::uint32_t(p0 >> 32) ^ c[3] ^ k[1], std::uint32_t(p0)};
  }
};

// Purpose tags keep the trainer, resampler and validator on disjoint streams
// even when they share a seed.
enum class StreamPurpose : std::uint32_t {
  kTransition = 0,   // forward-sweep state sampling, streamed by iteration
  kResample = 1,     // Assumption-3 oracle-mode state replacement
  kValidation = 2,   // validation sweeps, streamed by sample index k
  kSimulation = 3,   // test harnesses (coverage simulations etc.)
};

// Uniform double in [0, 1) from the 53 high bits of one Philox block.
// stream is an iteration or sample index and must fit in 32 bits.
inline double uniform_u01(std::uint64_t seed, std::uint32_t stream,
                          std::uint64_t step, StreamPurpose purpose) {
  const Philox4x32::Key key{std::uint32_t(seed), std::uint32_t(seed >> 32)};
  const Philox4x32::Counter ctr{std::uint32_t(step), std::uint32_t(step >> 32),
                                stream, static_cast<std::uint32_t>(purpose)};
  const auto out = Philox4x32::block(ctr, key);
  const std::uint64_t bits = (std::uint64_t(out[0]) << 32 | out[1]) >> 11;
  return double(bits) * 0x1.0p-53;
}

}  // namespace gbdp

#endif
