// Copyright 2026 The Authors.
//
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

#ifndef RANDGREEDI_PARALLEL_H_
#define RANDGREEDI_PARALLEL_H_

#include <functional>

namespace randgreedi {

// Worker cap: explicit argument if > 0, else RGREEDI_THREADS from the
// environment, else hardware concurrency.
int EffectiveThreadCap(int requested);

// Runs body(i) for i in [0, count) on up to `threads` workers. Tasks must be
// independent; results are written by index so the outcome is
// schedule-independent. Exceptions propagate to the caller.
void ParallelFor(int count, int threads, const std::function<void(int)>& body);

}  // namespace randgreedi

#endif  // RANDGREEDI_PARALLEL_H_
