#pragma once

#include <cstdint>
#include <string_view>

namespace rpgauss {

// Counter-based 64-bit random stream.
//
// Draw k of stream (seed, id) is mix(key + (k + 1) * gamma) where key is a
// hash of (seed, id) and mix is the SplitMix64 finalizer. Streams are cheap
// to create, so every replication or projection gets its own stream instead
// of sharing mutable state across threads.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  std::uint64_t master_seed() const { return seed_; }
  std::uint64_t stream_id() const { return id_; }
  std::uint64_t counter() const { return counter_; }

  // Child stream keyed on (this stream id, child). Does not advance *this.
  RngStream substream(std::uint64_t child) const;

  std::uint64_t next_u64();
  // Uniform on the open interval (0, 1); 53 bits of resolution.
  double uniform();
  // Uniform integer on {0, ..., bound - 1}; bound must be positive.
  std::uint64_t uniform_int(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::uint64_t id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

// FNV-1a, used to derive stable stream ids from textual keys.
std::uint64_t hash_key(std::string_view text);

}  // namespace rpgauss
