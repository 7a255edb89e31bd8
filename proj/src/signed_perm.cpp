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

#include "gcx/signed_perm.hpp"

#include <algorithm>
#include <numeric>

namespace gcx {

int PermutationSign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int parity = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t i = start; !seen[i]; i = perm[i]) {
      seen[i] = true;
      ++length;
    }
    parity ^= static_cast<int>((length + 1) % 2);
  }
  return parity ? -1 : 1;
}

SignedPermutation::SignedPermutation(std::vector<int> perm,
                                     std::vector<bool> flips)
    : perm_(std::move(perm)), flips_(std::move(flips)) {
  if (flips_.size() != perm_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "flip vector length differs from permutation length");
  }
  std::vector<bool> hit(perm_.size(), false);
  for (int image : perm_) {
    if (image < 0 || image >= size() || hit[image]) {
      throw Error(ErrorCode::kInvalidArgument, "perm is not a bijection");
    }
    hit[image] = true;
  }
}

SignedPermutation SignedPermutation::Identity(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return SignedPermutation(std::move(perm), std::vector<bool>(n, false));
}

bool SignedPermutation::IsIdentity() const {
  for (int i = 0; i < size(); ++i) {
    if (perm_[i] != i || flips_[i]) return false;
  }
  return true;
}

int SignedPermutation::Sgn() const { return PermutationSign(perm_); }

int SignedPermutation::SgnPrime(SgnPrimeMode mode) const {
  int count = 0;
  for (int i = 0; i < size(); ++i) {
    if (!flips_[i]) continue;
    if (mode == SgnPrimeMode::kAllFlips || perm_[i] == i) ++count;
  }
  return count % 2 ? -1 : 1;
}

SignedPermutation Compose(const SignedPermutation& a,
                          const SignedPermutation& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDomainMismatch,
                "cannot compose signed permutations of different size");
  }
  std::vector<int> perm(a.size());
  std::vector<bool> flips(a.size());
  for (int i = 0; i < a.size(); ++i) {
    perm[i] = a.image(b.image(i));
    flips[i] = b.flipped(i) != a.flipped(b.image(i));
  }
  return SignedPermutation(std::move(perm), std::move(flips));
}

SignedPermutation Inverse(const SignedPermutation& s) {
  std::vector<int> perm(s.size());
  std::vector<bool> flips(s.size());
  for (int i = 0; i < s.size(); ++i) {
    perm[s.image(i)] = i;
    flips[s.image(i)] = s.flipped(i);
  }
  return SignedPermutation(std::move(perm), std::move(flips));
}

std::vector<SignedPermutation> EnumerateSignedPermutations(int n) {
  std::vector<SignedPermutation> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> flips(n);
      for (int i = 0; i < n; ++i) flips[i] = (mask >> (n - 1 - i)) & 1u;
      out.emplace_back(perm, std::move(flips));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace gcx
