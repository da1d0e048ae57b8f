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

#include "ssair/ir/bitvec.h"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace ssair {
namespace {

std::size_t LimbsFor(unsigned width) { return (width + 63) / 64; }

}  // namespace

BigInt DecimalBigInt(std::string_view digits) {
  std::size_t i = digits.find_first_not_of('0');
  if (i == std::string_view::npos) return 0;
  return BigInt(std::string(digits.substr(i)));
}

BitVec::BitVec(unsigned width) : width_(width), limbs_(LimbsFor(width), 0) {
  if (width == 0) throw std::invalid_argument("bitvector width must be >= 1");
}

BitVec::BitVec(unsigned width, std::uint64_t value) : BitVec(width) {
  limbs_[0] = value;
  Normalize();
}

void BitVec::Normalize() {
  unsigned top = width_ % 64;
  if (top != 0) limbs_.back() &= (std::uint64_t{1} << top) - 1;
}

BitVec BitVec::FromBigInt(unsigned width, const BigInt& value) {
  BigInt modulus = BigInt(1) << width;
  BigInt v = value % modulus;
  if (v < 0) v += modulus;
  BitVec out(width);
  for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
    out.limbs_[i] = static_cast<std::uint64_t>(v & BigInt(~std::uint64_t{0}));
    v >>= 64;
  }
  return out;
}

BitVec BitVec::AllOnes(unsigned width) {
  BitVec out(width);
  std::fill(out.limbs_.begin(), out.limbs_.end(), ~std::uint64_t{0});
  out.Normalize();
  return out;
}

BitVec BitVec::SignedMin(unsigned width) {
  BitVec out(width);
  out.limbs_[(width - 1) / 64] = std::uint64_t{1} << ((width - 1) % 64);
  return out;
}

bool BitVec::IsZero() const {
  return std::all_of(limbs_.begin(), limbs_.end(),
                     [](std::uint64_t l) { return l == 0; });
}

bool BitVec::IsAllOnes() const { return *this == AllOnes(width_); }

bool BitVec::Bit(unsigned i) const {
  return (limbs_[i / 64] >> (i % 64)) & 1;
}

bool BitVec::IsSignedMin() const { return *this == SignedMin(width_); }

BigInt BitVec::ToUnsigned() const {
  BigInt v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    v <<= 64;
    v += limbs_[i];
  }
  return v;
}

BigInt BitVec::ToSigned() const {
  BigInt v = ToUnsigned();
  if (SignBit()) v -= BigInt(1) << width_;
  return v;
}

std::string BitVec::ToString() const {
  if (limbs_.size() == 1) return std::to_string(limbs_[0]);
  return ToUnsigned().str();
}

BitVec BitVec::Not() const {
  BitVec out = *this;
  for (auto& l : out.limbs_) l = ~l;
  out.Normalize();
  return out;
}

#define SSAIR_BITWISE(Name, op)                                  \
  BitVec BitVec::Name(const BitVec& o) const {                   \
    assert(width_ == o.width_);                                  \
    BitVec out = *this;                                          \
    for (std::size_t i = 0; i < limbs_.size(); ++i)              \
      out.limbs_[i] = limbs_[i] op o.limbs_[i];                  \
    return out;                                                  \
  }
SSAIR_BITWISE(And, &)
SSAIR_BITWISE(Or, |)
SSAIR_BITWISE(Xor, ^)
#undef SSAIR_BITWISE

BitVec BitVec::Add(const BitVec& o) const {
  assert(width_ == o.width_);
  BitVec out(width_);
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    unsigned __int128 s =
        static_cast<unsigned __int128>(limbs_[i]) + o.limbs_[i] + carry;
    out.limbs_[i] = static_cast<std::uint64_t>(s);
    carry = s >> 64;
  }
  out.Normalize();
  return out;
}

BitVec BitVec::Neg() const { return Not().Add(BitVec(width_, 1)); }

BitVec BitVec::Sub(const BitVec& o) const { return Add(o.Neg()); }

BitVec BitVec::Mul(const BitVec& o) const {
  assert(width_ == o.width_);
  BitVec out(width_);
  std::size_t n = limbs_.size();
  if (n == 1) {
    out.limbs_[0] = limbs_[0] * o.limbs_[0];
    out.Normalize();
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    unsigned __int128 carry = 0;
    for (std::size_t j = 0; i + j < n; ++j) {
      unsigned __int128 cur = static_cast<unsigned __int128>(limbs_[i]) *
                                  o.limbs_[j] +
                              out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
    }
  }
  out.Normalize();
  return out;
}

void BitVec::UDivRem(const BitVec& n, const BitVec& d, BitVec* q,
                     BitVec* r) {
  assert(n.width_ == d.width_);
  if (d.IsZero()) throw std::domain_error("bitvector division by zero");
  unsigned w = n.width_;
  if (n.limbs_.size() == 1) {
    if (q) *q = BitVec(w, n.limbs_[0] / d.limbs_[0]);
    if (r) *r = BitVec(w, n.limbs_[0] % d.limbs_[0]);
    return;
  }
  // Restoring shift-subtract division, one bit at a time.
  BitVec quot(w), rem(w);
  for (unsigned i = w; i-- > 0;) {
    bool carry_out = rem.SignBit();
    rem = rem.Shl(1);
    if (n.Bit(i)) rem.limbs_[0] |= 1;
    if (carry_out || rem.UCompare(d) != std::strong_ordering::less) {
      rem = rem.Sub(d);
      quot.limbs_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  if (q) *q = quot;
  if (r) *r = rem;
}

BitVec BitVec::UDiv(const BitVec& o) const {
  BitVec q(width_);
  UDivRem(*this, o, &q, nullptr);
  return q;
}

BitVec BitVec::URem(const BitVec& o) const {
  BitVec r(width_);
  UDivRem(*this, o, nullptr, &r);
  return r;
}

BitVec BitVec::SDiv(const BitVec& o) const {
  bool neg_n = SignBit(), neg_d = o.SignBit();
  BitVec q = (neg_n ? Neg() : *this).UDiv(neg_d ? o.Neg() : o);
  return neg_n != neg_d ? q.Neg() : q;
}

BitVec BitVec::SRem(const BitVec& o) const {
  bool neg_n = SignBit();
  BitVec r = (neg_n ? Neg() : *this).URem(o.SignBit() ? o.Neg() : o);
  return neg_n ? r.Neg() : r;
}

BitVec BitVec::Shl(unsigned amount) const {
  assert(amount < width_);
  BitVec out(width_);
  std::size_t limb_shift = amount / 64;
  unsigned bit_shift = amount % 64;
  for (std::size_t i = limbs_.size(); i-- > limb_shift;) {
    std::uint64_t v = limbs_[i - limb_shift] << bit_shift;
    if (bit_shift != 0 && i - limb_shift > 0)
      v |= limbs_[i - limb_shift - 1] >> (64 - bit_shift);
    out.limbs_[i] = v;
  }
  out.Normalize();
  return out;
}

BitVec BitVec::LShr(unsigned amount) const {
  BitVec out(width_);
  std::size_t limb_shift = amount / 64;
  unsigned bit_shift = amount % 64;
  for (std::size_t i = 0; i + limb_shift < limbs_.size(); ++i) {
    std::uint64_t v = limbs_[i + limb_shift] >> bit_shift;
    if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size())
      v |= limbs_[i + limb_shift + 1] << (64 - bit_shift);
    out.limbs_[i] = v;
  }
  return out;
}

BitVec BitVec::AShr(unsigned amount) const {
  BitVec out = LShr(amount);
  if (SignBit() && amount > 0) {
    // Fill the vacated high bits with ones.
    BitVec fill = AllOnes(width_).LShr(width_ - amount).Shl(width_ - amount);
    out = out.Or(fill);
  }
  return out;
}

bool BitVec::UGe(std::uint64_t bound) const {
  for (std::size_t i = 1; i < limbs_.size(); ++i)
    if (limbs_[i] != 0) return true;
  return limbs_[0] >= bound;
}

std::strong_ordering BitVec::UCompare(const BitVec& o) const {
  assert(width_ == o.width_);
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering BitVec::SCompare(const BitVec& o) const {
  bool sa = SignBit(), sb = o.SignBit();
  if (sa != sb) {
    return sa ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return UCompare(o);
}

std::size_t HashValue(const BitVec& b) {
  std::size_t h = std::hash<unsigned>{}(b.width());
  for (std::size_t i = 0; i < b.num_limbs(); ++i)
    h ^= std::hash<std::uint64_t>{}(b.limb(i)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  return h;
}

}  // namespace ssair
