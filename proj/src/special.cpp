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

#include "mimo_adhoc/special.hpp"

#include "mimo_adhoc/errors.hpp"

#include <cmath>
#include <string>

namespace mimo_adhoc {

double log_gamma(double x)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("log_gamma requires a finite positive argument, got " + std::to_string(x));
    return std::lgamma(x);
}

std::uint64_t binomial(int n, int k)
{
    if (n < 0 || n > 62)
        throw DomainError("binomial: n out of range");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t result = 1;
    // Each partial product is itself a binomial coefficient, so the division is exact.
    for (int i = 1; i <= k; ++i)
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return result;
}

double factorial(int n)
{
    if (n < 0)
        throw DomainError("factorial of a negative integer");
    double result = 1.0;
    for (int i = 2; i <= n; ++i)
        result *= i;
    return result;
}

double pow_int(double x, int n)
{
    if (n < 0)
        return 1.0 / pow_int(x, -n);
    double result = 1.0;
    for (int i = 0; i < n; ++i)
        result *= x;
    return result;
}

}  // namespace mimo_adhoc
