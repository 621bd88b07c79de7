#pragma once

#include <array>
#include <cstdint>

#include "fracspde/special.hpp"
#include "fracspde/types.hpp"

namespace fracspde {

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011).
// A stream is addressed by (seed, stream_id): the seed is the key, the
// stream id occupies the upper counter words, and the running block index
// the lower ones. Distinct stream ids therefore never share a counter
// block, which makes per-replication streams disjoint by construction.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream_id)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_{static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32)} {}

  // Keyed bijection of one 128-bit counter block.
  static Block apply(const Block& counter, std::uint32_t key0, std::uint32_t key1) {
    std::uint32_t c0 = counter[0], c1 = counter[1], c2 = counter[2], c3 = counter[3];
    std::uint32_t k0 = key0, k1 = key1;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t(0xD2511F53u) * c0;
      const std::uint64_t p1 = std::uint64_t(0xCD9E8D57u) * c2;
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      c0 = hi1 ^ c1 ^ k0;
      c1 = lo1;
      c2 = hi0 ^ c3 ^ k1;
      c3 = lo0;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    return {c0, c1, c2, c3};
  }

  std::uint32_t next_u32() {
    if (pos_ == 4) {
      const Block counter = {static_cast<std::uint32_t>(block_index_),
                             static_cast<std::uint32_t>(block_index_ >> 32),
                             stream_[0], stream_[1]};
      buffer_ = apply(counter, key_[0], key_[1]);
      ++block_index_;
      pos_ = 0;
    }
    return buffer_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  // Uniform on the open interval (0,1); 53 significant bits.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t blocks_used() const { return block_index_; }
  std::uint64_t stream_id() const {
    return (std::uint64_t(stream_[1]) << 32) | stream_[0];
  }

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> stream_;
  Block buffer_{};
  std::uint64_t block_index_ = 0;
  int pos_ = 4;
};

// N(0,1) variates by inverse-CDF transform of Philox uniforms. The AS241
// quantile keeps the draw reproducible across platforms to ~1e-15.
class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, std::uint64_t stream_id) : rng_(seed, stream_id) {}

  double next() { return normal_quantile(rng_.next_uniform()); }

  Vector next_vector(Eigen::Index n) {
    Vector z(n);
    for (Eigen::Index i = 0; i < n; ++i) z[i] = next();
    return z;
  }

  std::uint64_t blocks_used() const { return rng_.blocks_used(); }
  std::uint64_t stream_id() const { return rng_.stream_id(); }

 private:
  Philox4x32 rng_;
};

}  // namespace fracspde
