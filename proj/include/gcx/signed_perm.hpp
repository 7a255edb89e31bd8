// Copyright 2026 The gcx Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GCX_SIGNED_PERM_HPP_
#define GCX_SIGNED_PERM_HPP_

#include <compare>
#include <utility>
#include <vector>

#include "gcx/error.hpp"

namespace gcx {

// Which index set sgn' counts.
//   kLiteral:  indices i with sigma(i+) = i-  (flipped fixed points).
//   kAllFlips: every flipped index.
enum class SgnPrimeMode { kLiteral, kAllFlips };

// An element of the group of bijections of {i+, i-} (i in 0..n-1) that keep
// each pair {i+, i-} together. Stored as the induced permutation of indices
// plus one flip bit per index: flipped(i) iff sigma(i+) = image(i)-.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  // Throws kInvalidArgument unless `perm` is a bijection of 0..n-1 and
  // flips.size() == perm.size().
  SignedPermutation(std::vector<int> perm, std::vector<bool> flips);

  static SignedPermutation Identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  int image(int i) const { return perm_[i]; }
  bool flipped(int i) const { return flips_[i]; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<bool>& flips() const { return flips_; }

  bool IsIdentity() const;

  // Sign of the induced permutation of indices.
  int Sgn() const;
  int SgnPrime(SgnPrimeMode mode) const;

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation& a,
                          const SignedPermutation& b) {
    if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
    return a.flips_ <=> b.flips_;
  }

 private:
  std::vector<int> perm_;
  std::vector<bool> flips_;
};

// (a o b): apply b first. Throws kDomainMismatch on differing sizes.
SignedPermutation Compose(const SignedPermutation& a,
                          const SignedPermutation& b);
SignedPermutation Inverse(const SignedPermutation& s);

// All 2^n * n! elements, ordered by permutation then flip pattern.
std::vector<SignedPermutation> EnumerateSignedPermutations(int n);

// Left action on index-aligned tuples of oriented pairs: the entry at
// position i moves to position s.image(i), with its two slots swapped when
// s.flipped(i). Throws kLengthMismatch when sizes differ.
template <typename T>
std::vector<std::pair<T, T>> ActOnTuple(
    const SignedPermutation& s, const std::vector<std::pair<T, T>>& tuple) {
  if (static_cast<int>(tuple.size()) != s.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "tuple length does not match permutation domain");
  }
  std::vector<std::pair<T, T>> out(tuple.size());
  for (int i = 0; i < s.size(); ++i) {
    const auto& [first, second] = tuple[i];
    out[s.image(i)] = s.flipped(i) ? std::pair<T, T>(second, first)
                                   : std::pair<T, T>(first, second);
  }
  return out;
}

// Sign of a permutation given as an image vector.
int PermutationSign(const std::vector<int>& perm);

}  // namespace gcx

#endif  // GCX_SIGNED_PERM_HPP_
