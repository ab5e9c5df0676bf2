#pragma once

#include <array>
#include <cstdint>

namespace bunkbed {

/// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011).
/// A pure function of (counter, key): the same inputs always give the same
/// 128 output bits, so any sample can be regenerated from its index alone.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr const char* kName = "philox4x32-10";

  static constexpr Counter apply(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// Stream of 64-bit draws for one (seed, stream) pair. Draw i of the stream
/// is taken from block i / 2 of the counter.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, stream_(stream) {}

  std::uint64_t next() {
    if (buffered_ == 0) {
      const auto out = Philox4x32::apply({static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                                          static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
                                         key_);
      ++block_;
      buffer_[0] = (std::uint64_t{out[1]} << 32) | out[0];
      buffer_[1] = (std::uint64_t{out[3]} << 32) | out[2];
      buffered_ = 2;
    }
    return buffer_[2 - buffered_--];
  }

 private:
  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::uint64_t buffer_[2] = {0, 0};
  int buffered_ = 0;
};

}  // namespace bunkbed
