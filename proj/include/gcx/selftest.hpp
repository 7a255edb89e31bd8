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

#ifndef GCX_SELFTEST_HPP_
#define GCX_SELFTEST_HPP_

#include <string>
#include <vector>

namespace gcx {

struct SelfTestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Small-scale invariant suite over loop orders 2..max_loop_order.
std::vector<SelfTestResult> RunSelfTest(int max_loop_order = 3);

}  // namespace gcx

#endif  // GCX_SELFTEST_HPP_
