// SPDX-License-Identifier: Apache-2.0
//
// wptsim: link-budget simulator for RF wireless power transfer to shelf labels
// Copyright (C) 2026 The wptsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <ostream>

namespace wpt::cli {

/// Entry point of the wptsim command line. Returns the process exit code:
/// 0 success, 2 configuration error, 3 physics or solver error, 4 I/O error.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace wpt::cli
