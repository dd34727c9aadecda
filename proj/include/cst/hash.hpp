#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cst {

// FNV-1a, 64-bit. This is the project's stable hash: feature hashing,
// seed-stream derivation and content digests all go through it, so the
// constants below are part of the on-disk contract and must not change.
inline constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

inline constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                       std::uint64_t state = kFnvOffset) {
  for (unsigned char c : bytes) {
    state ^= static_cast<std::uint64_t>(c);
    state *= kFnvPrime;
  }
  return state;
}

std::string to_hex(std::uint64_t value);

// Incremental digest for larger inputs (model training inputs, corpora).
class Digest {
 public:
  Digest& update(std::string_view bytes) {
    state_ = fnv1a64(bytes, state_);
    return *this;
  }
  // Field separator so that ("ab","c") and ("a","bc") digest differently.
  Digest& field(std::string_view bytes) {
    update(bytes);
    update(std::string_view("\x1e", 1));
    return *this;
  }
  std::uint64_t value() const { return state_; }
  std::string hex() const;

 private:
  std::uint64_t state_ = kFnvOffset;
};

}  // namespace cst
