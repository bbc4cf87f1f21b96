// SPDX-License-Identifier: Apache-2.0
//
// mimo-adhoc: outage and transmission capacity of MIMO-MMSE ad hoc networks
// Copyright (C) 2026 The mimo-adhoc authors
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

#include <cstdint>

namespace mimo_adhoc {

/// Natural log of the gamma function for x > 0; throws DomainError otherwise.
double log_gamma(double x);

/// Exact binomial coefficient C(n, k) for 0 <= n <= 62; zero when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// n! as a double; exact for n <= 22.
double factorial(int n);

/// x^n by repeated multiplication; pow_int(0, 0) == 1.
double pow_int(double x, int n);

}  // namespace mimo_adhoc
