#pragma once
// Counter-based pseudo-random numbers (Philox 4x32, 10 rounds).
//
// Every draw is a pure function of (seed, stream, lane, block index), so a
// worker can reproduce the numbers for any pair id without touching shared
// state, and parallel runs agree with serial runs bit for bit.

#include <array>
#include <cstdint>

namespace qcorr::rng {

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Purpose lanes keep draws for different roles statistically independent
// even when they share a (seed, stream) pair.
enum Lane : std::uint32_t {
  kLanePhi = 0,       // internal phase sample of a pair
  kLaneOutcome = 1,   // outcome-pair sampling
  kLaneSchedule = 2,  // random settings schedule
  kLaneLambda = 3,    // hidden-variable baseline
  kLaneFit = 4,       // optimizer starts
  kLaneTest = 5,      // test generators
};

// One substream addressed by (seed, stream, lane).
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream, std::uint32_t lane = 0)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        prefix_{static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                lane} {}

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on [0, 2*pi).
  double angle();

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 3> prefix_;
  std::uint32_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int avail_ = 0;  // unread 32-bit words left in buf_
};

}  // namespace qcorr::rng
