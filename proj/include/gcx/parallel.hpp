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

#ifndef GCX_PARALLEL_HPP_
#define GCX_PARALLEL_HPP_

namespace gcx {

// Selects between the OpenMP kernel and its serial reference.
enum class Execution { kSerial, kParallel };

// Number of OpenMP workers used by parallel kernels. Capped by the
// GCX_THREADS environment variable when it holds a positive integer.
int WorkerCount();

}  // namespace gcx

#endif  // GCX_PARALLEL_HPP_
