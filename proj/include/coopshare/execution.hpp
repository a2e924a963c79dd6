// Copyright 2026 The coopshare Authors
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

#ifndef COOPSHARE_EXECUTION_HPP
#define COOPSHARE_EXECUTION_HPP

namespace coopshare {

/// Kernel dispatch for the coalition scans. Serial and Parallel produce
/// bit-identical results; Auto picks Parallel for large subset tables when
/// the build has OpenMP.
enum class ExecMode {
  Auto,
  Serial,
  Parallel,
};

namespace scans {

/// True when `mode` resolves to the OpenMP path for an n-player table.
bool use_parallel(ExecMode mode, int player_count);

}  // namespace scans

}  // namespace coopshare

#endif  // COOPSHARE_EXECUTION_HPP
