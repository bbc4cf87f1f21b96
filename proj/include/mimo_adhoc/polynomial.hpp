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

#include <Eigen/Core>

#include <algorithm>
#include <initializer_list>
#include <span>

namespace mimo_adhoc {

/// Dense polynomial, coefficient i multiplies t^i. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
template <typename Scalar>
class Polynomial {
public:
    using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    Polynomial() = default;
    explicit Polynomial(Coefficients coefficients) : coeffs_(std::move(coefficients)) { trim(); }
    Polynomial(std::initializer_list<Scalar> coefficients)
        : coeffs_(static_cast<Eigen::Index>(coefficients.size()))
    {
        std::copy(coefficients.begin(), coefficients.end(), coeffs_.data());
        trim();
    }

    /// -1 for the zero polynomial.
    Eigen::Index degree() const noexcept { return coeffs_.size() - 1; }
    bool is_zero() const noexcept { return coeffs_.size() == 0; }

    /// Coefficient of t^i; zero beyond the degree.
    Scalar operator[](Eigen::Index i) const
    {
        return (i >= 0 && i < coeffs_.size()) ? coeffs_[i] : Scalar(0);
    }

    const Coefficients& coefficients() const noexcept { return coeffs_; }

    /// In place: this <- (this * factor) with terms above t^max_degree dropped.
    /// Allocates only while the degree is still growing.
    Polynomial& multiply_truncated(std::span<const Scalar> factor, Eigen::Index max_degree)
    {
        const auto factor_size = static_cast<Eigen::Index>(factor.size());
        if (is_zero() || factor_size == 0) {
            coeffs_.resize(0);
            return *this;
        }
        const Eigen::Index old_size = coeffs_.size();
        const Eigen::Index new_size = std::min(old_size + factor_size - 1, max_degree + 1);
        if (new_size <= 0) {
            coeffs_.resize(0);
            return *this;
        }
        if (new_size > old_size) {
            coeffs_.conservativeResize(new_size);
            coeffs_.tail(new_size - old_size).setZero();
        }
        // Descending p reads only coefficients at or below p, none yet overwritten.
        for (Eigen::Index p = new_size - 1; p >= 0; --p) {
            Scalar acc(0);
            const Eigen::Index i_max = std::min(p, factor_size - 1);
            for (Eigen::Index i = 0; i <= i_max; ++i)
                if (p - i < old_size)
                    acc += factor[static_cast<std::size_t>(i)] * coeffs_[p - i];
            coeffs_[p] = acc;
        }
        if (new_size < old_size)
            coeffs_.conservativeResize(new_size);
        trim();
        return *this;
    }

private:
    void trim()
    {
        Eigen::Index n = coeffs_.size();
        while (n > 0 && coeffs_[n - 1] == Scalar(0))
            --n;
        if (n != coeffs_.size())
            coeffs_.conservativeResize(n);
    }

    Coefficients coeffs_;
};

using RealPolynomial = Polynomial<double>;

/// Product of a and b, keeping terms up to t^max_degree.
template <typename Scalar>
Polynomial<Scalar> poly_mul(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b,
                            Eigen::Index max_degree)
{
    Polynomial<Scalar> out = a;
    const auto& c = b.coefficients();
    return out.multiply_truncated(std::span<const Scalar>(c.data(), static_cast<std::size_t>(c.size())),
                                  max_degree);
}

/// Exact product of a and b.
template <typename Scalar>
Polynomial<Scalar> poly_mul(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b)
{
    return poly_mul(a, b, std::max<Eigen::Index>(a.degree() + b.degree(), 0));
}

}  // namespace mimo_adhoc
