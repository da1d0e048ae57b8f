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

#include "ssair/dialects/ring.h"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ssair/ir/type.h"

namespace ssair {

std::uint64_t ReduceMod(const BigInt& v, std::uint64_t q) {
  BigInt r = v % q;
  if (r < 0) r += q;
  return static_cast<std::uint64_t>(r);
}

namespace {

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t AddMod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
  return static_cast<std::uint64_t>(s % q);
}

std::uint64_t SubMod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return a >= b ? a - b : q - (b - a);
}

}  // namespace

RingElem::RingElem(RingParams p) : params_(p), coeffs_(p.degree(), 0) {
  if (p.q < 2) throw IrError("ring modulus q must be >= 2");
}

RingElem::RingElem(RingParams p, const std::vector<BigInt>& coeffs)
    : RingElem(p) {
  if (coeffs.size() != p.degree()) {
    throw IrError("ring element needs " + std::to_string(p.degree()) +
                  " coefficients, got " + std::to_string(coeffs.size()));
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs_[i] = ReduceMod(coeffs[i], p.q);
}

RingElem::RingElem(RingParams p, std::vector<std::uint64_t> reduced_coeffs)
    : params_(p), coeffs_(std::move(reduced_coeffs)) {
  if (coeffs_.size() != p.degree()) throw IrError("ring coefficient count");
  for (auto c : coeffs_)
    if (c >= p.q) throw IrError("ring coefficient not reduced");
}

RingElem RingElem::Constant(RingParams p, const BigInt& c) {
  RingElem out(p);
  out.coeffs_[0] = ReduceMod(c, p.q);
  return out;
}

RingElem RingElem::Monomial(RingParams p, const BigInt& c, const BigInt& i) {
  RingElem out(p);
  const std::uint64_t d = p.degree();
  // X^(2d) = 1, and X^d = -1.
  std::uint64_t e = ReduceMod(i, 2 * d);
  std::uint64_t coeff = ReduceMod(c, p.q);
  if (e >= d) {
    e -= d;
    coeff = SubMod(0, coeff, p.q);
  }
  out.coeffs_[e] = coeff;
  return out;
}

bool RingElem::IsZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](std::uint64_t c) { return c == 0; });
}

void RingElem::CheckCompatible(const RingElem& o) const {
  if (!(params_ == o.params_)) throw IrError("ring parameter mismatch");
}

RingElem RingElem::Add(const RingElem& o) const {
  CheckCompatible(o);
  RingElem out(params_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out.coeffs_[i] = AddMod(coeffs_[i], o.coeffs_[i], params_.q);
  return out;
}

RingElem RingElem::Sub(const RingElem& o) const {
  CheckCompatible(o);
  RingElem out(params_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out.coeffs_[i] = SubMod(coeffs_[i], o.coeffs_[i], params_.q);
  return out;
}

RingElem RingElem::Neg() const { return RingElem(params_).Sub(*this); }

RingElem RingElem::Mul(const RingElem& o) const {
  CheckCompatible(o);
  const std::size_t d = coeffs_.size();
  const std::uint64_t q = params_.q;
  RingElem out(params_);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      std::uint64_t prod = MulMod(coeffs_[i], o.coeffs_[j], q);
      std::size_t k = i + j;
      if (k < d) {
        out.coeffs_[k] = AddMod(out.coeffs_[k], prod, q);
      } else {
        out.coeffs_[k - d] = SubMod(out.coeffs_[k - d], prod, q);
      }
    }
  }
  return out;
}

RingElem RingElem::Scale(const BigInt& k) const {
  std::uint64_t kk = ReduceMod(k, params_.q);
  RingElem out(params_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out.coeffs_[i] = MulMod(coeffs_[i], kk, params_.q);
  return out;
}

RingElem RingElem::MulMonomial(const BigInt& i) const {
  return Mul(Monomial(params_, 1, i));
}

RingElem RingElem::LeadingTerm() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] != 0) return Monomial(params_, coeffs_[i], i);
  }
  return RingElem(params_);
}

std::string RingElem::ToString() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  os << ']';
  return os.str();
}

std::size_t HashValue(const RingElem& r) {
  std::size_t h = std::hash<std::uint64_t>{}(r.params().q) ^ r.params().n;
  for (auto c : r.coeffs())
    h ^= std::hash<std::uint64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  return h;
}

}  // namespace ssair
