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

// Reproducible random streams. A stream is a value: copying it forks the
// sequence. Monte Carlo trial t under seed s draws from substream(s, t, lane),
// which makes every estimate independent of how trials are scheduled.

#pragma once

#include <Eigen/Core>
#include <boost/random/exponential_distribution.hpp>
#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>

#include <complex>
#include <cstdint>

namespace mimo_adhoc {

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream keyed by (seed, index, lane).
    static RandomStream substream(std::uint64_t seed, std::uint64_t index, std::uint64_t lane = 0);

    /// Uniform on [0, 1).
    double uniform() { return uniform_(engine_); }

    /// Exponential with unit mean.
    double exponential() { return exponential_(engine_); }

    /// Circularly-symmetric complex Gaussian, unit total variance.
    std::complex<double> complex_gaussian()
    {
        const double re = half_normal_(engine_);
        const double im = half_normal_(engine_);
        return {re, im};
    }

    using Engine = boost::random::mt19937_64;

    Engine& engine() noexcept { return engine_; }

private:
    Engine engine_;
    boost::random::uniform_01<double> uniform_;
    boost::random::exponential_distribution<double> exponential_{1.0};
    // Real and imaginary parts each carry variance 1/2.
    boost::random::normal_distribution<double> half_normal_{0.0, 0.70710678118654752440};
};

/// n iid CN(0, 1) entries.
Eigen::VectorXcd sample_complex_gaussian(RandomStream& rng, Eigen::Index n);

}  // namespace mimo_adhoc
