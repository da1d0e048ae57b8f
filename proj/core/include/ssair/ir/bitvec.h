// Copyright 2026 The ssair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SSAIR_IR_BITVEC_H_
#define SSAIR_IR_BITVEC_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssair {

using BigInt = boost::multiprecision::cpp_int;

// `digits` is a nonempty run of 0-9, read as decimal even with leading
// zeros (the BigInt string constructor would treat "017" as octal).
BigInt DecimalBigInt(std::string_view digits);

// Fixed-width two's-complement bitvector of any positive width. Storage is
// little-endian 64-bit limbs; bits at or above `width()` are always zero.
class BitVec {
 public:
  BitVec() : BitVec(1) {}
  explicit BitVec(unsigned width);
  BitVec(unsigned width, std::uint64_t value);

  // Reduces `value` modulo 2^width (negative values wrap).
  static BitVec FromBigInt(unsigned width, const BigInt& value);
  static BitVec AllOnes(unsigned width);
  static BitVec SignedMin(unsigned width);

  unsigned width() const { return width_; }
  std::size_t num_limbs() const { return limbs_.size(); }
  std::uint64_t limb(std::size_t i) const { return limbs_[i]; }

  bool IsZero() const;
  bool IsAllOnes() const;
  bool Bit(unsigned i) const;
  bool SignBit() const { return Bit(width_ - 1); }
  bool IsSignedMin() const;

  // Low 64 bits.
  std::uint64_t ToUint64() const { return limbs_[0]; }
  BigInt ToUnsigned() const;
  BigInt ToSigned() const;
  std::string ToString() const;  // unsigned decimal

  BitVec Not() const;
  BitVec And(const BitVec& o) const;
  BitVec Or(const BitVec& o) const;
  BitVec Xor(const BitVec& o) const;
  BitVec Add(const BitVec& o) const;
  BitVec Sub(const BitVec& o) const;
  BitVec Mul(const BitVec& o) const;
  BitVec Neg() const;
  // Divisor must be nonzero.
  BitVec UDiv(const BitVec& o) const;
  BitVec URem(const BitVec& o) const;
  // Truncating signed division; divisor nonzero and no overflow.
  BitVec SDiv(const BitVec& o) const;
  BitVec SRem(const BitVec& o) const;
  // Shift amounts must be < width.
  BitVec Shl(unsigned amount) const;
  BitVec LShr(unsigned amount) const;
  BitVec AShr(unsigned amount) const;

  // true iff the unsigned value is >= `bound`.
  bool UGe(std::uint64_t bound) const;

  std::strong_ordering UCompare(const BitVec& o) const;
  std::strong_ordering SCompare(const BitVec& o) const;

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  void Normalize();
  static void UDivRem(const BitVec& n, const BitVec& d, BitVec* q, BitVec* r);

  unsigned width_;
  std::vector<std::uint64_t> limbs_;
};

std::size_t HashValue(const BitVec& b);

}  // namespace ssair

#endif  // SSAIR_IR_BITVEC_H_
