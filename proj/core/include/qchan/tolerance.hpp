// Copyright 2026 The qchan Authors
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

#ifndef QCHAN_TOLERANCE_HPP
#define QCHAN_TOLERANCE_HPP

namespace qchan {

/// Tolerance for invariant checks. 1e-9 unless the QCHAN_TOL environment variable holds a positive number.
double default_tolerance();

}  // namespace qchan

#endif  // QCHAN_TOLERANCE_HPP
