#include "qcorr/rng.hpp"

#include <numbers>

namespace qcorr::rng {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& x, const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * x[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * x[2];
  x = {static_cast<std::uint32_t>(p1 >> 32) ^ x[1] ^ k[0], static_cast<std::uint32_t>(p1),
       static_cast<std::uint32_t>(p0 >> 32) ^ x[3] ^ k[1], static_cast<std::uint32_t>(p0)};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
  for (int r = 0; r < 10; ++r) {
    philox_round(counter, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return counter;
}

std::uint64_t Stream::next_u64() {
  if (avail_ < 2) {
    buf_ = philox4x32({prefix_[0], prefix_[1], prefix_[2], block_++}, key_);
    avail_ = 4;
  }
  const std::uint32_t hi = buf_[4 - avail_];
  const std::uint32_t lo = buf_[5 - avail_];
  avail_ -= 2;
  return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

double Stream::angle() { return 2.0 * std::numbers::pi * uniform(); }

}  // namespace qcorr::rng
