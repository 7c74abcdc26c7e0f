#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace reglat {

// Minimal unsigned bignum, base 10^9 limbs, little-endian.  Covers the exact
// arithmetic needed by the bipartition counting recurrence; nothing more.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v) {
    while (v) {
      limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  BigUint& operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t s = std::uint64_t{limbs_[i]} + carry + (i < o.limbs_.size() ? o.limbs_[i] : 0);
      limbs_[i] = static_cast<std::uint32_t>(s % kBase);
      carry = static_cast<std::uint32_t>(s / kBase);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
  }

  BigUint& mul_u64(std::uint64_t m) {
    if (m == 0) {
      limbs_.clear();
      return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      unsigned __int128 p = static_cast<unsigned __int128>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(p % kBase);
      carry = static_cast<std::uint64_t>(p / kBase);
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
    return *this;
  }

  bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
  bool operator!=(const BigUint& o) const { return !(*this == o); }

  // Fits in uint64?  Then its value; used when callers want plain counts.
  bool to_u64(std::uint64_t& out) const {
    if (limbs_.size() > 3) return false;
    unsigned __int128 v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    if (v > ~std::uint64_t{0}) return false;
    out = static_cast<std::uint64_t>(v);
    return true;
  }

  std::string str() const {
    if (limbs_.empty()) return "0";
    std::string s = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

 private:
  static constexpr std::uint32_t kBase = 1'000'000'000;
  std::vector<std::uint32_t> limbs_;
};

}  // namespace reglat
