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

// Hermitian positive-definite solves on small dense complex matrices.
// Factor once with Cholesky, optionally fold in rank-one terms in factored
// form, then solve. No explicit inverse is ever formed.

#pragma once

#include "mimo_adhoc/errors.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <algorithm>
#include <complex>
#include <string>

namespace mimo_adhoc {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, typename Derived::RealScalar tol)
{
    if (a.rows() != a.cols())
        return false;
    const auto scale = std::max<typename Derived::RealScalar>(1, a.cwiseAbs().maxCoeff());
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

/// Cholesky factor of a Hermitian positive-definite matrix.
template <typename Scalar>
class HermitianPdFactor {
public:
    using MatrixType = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using VectorType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using RealScalar = typename Eigen::NumTraits<Scalar>::Real;

    /// Reads the lower triangle only. Throws NumericalError on a non-positive pivot.
    template <typename Derived>
    explicit HermitianPdFactor(const Eigen::MatrixBase<Derived>& a) : llt_(a.rows())
    {
        if (a.rows() != a.cols())
            throw DomainError("Hermitian factorization needs a square matrix");
        llt_.compute(a);
        if (llt_.info() != Eigen::Success)
            throw NumericalError("Cholesky factorization failed: matrix is not positive definite (" +
                                 std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ")");
    }

    Eigen::Index size() const { return llt_.rows(); }

    /// A <- A + weight * v v^H, updating the factor directly.
    template <typename Derived>
    void rank_one_update(const Eigen::MatrixBase<Derived>& v, RealScalar weight)
    {
        llt_.rankUpdate(v, weight);
        if (llt_.info() != Eigen::Success)
            throw NumericalError("Cholesky rank-one update failed");
    }

    template <typename Derived>
    VectorType solve(const Eigen::MatrixBase<Derived>& b) const
    {
        if (b.rows() != size())
            throw DomainError("right-hand side size does not match the factored matrix");
        return llt_.solve(b);
    }

    /// Re(b^H A^{-1} b) computed as ||L^{-1} b||^2.
    template <typename Derived>
    RealScalar inverse_quadratic_form(const Eigen::MatrixBase<Derived>& b) const
    {
        return llt_.matrixL().solve(b).squaredNorm();
    }

private:
    Eigen::LLT<MatrixType, Eigen::Lower> llt_;
};

/// Solves A x = b for Hermitian positive-definite A.
/// Throws DomainError when A is not Hermitian to 1e-10 (relative to its largest entry),
/// NumericalError when the Cholesky factorization hits a non-positive pivot.
template <typename MatrixDerived, typename VectorDerived>
auto hermitian_solve(const Eigen::MatrixBase<MatrixDerived>& a,
                     const Eigen::MatrixBase<VectorDerived>& b)
{
    using Scalar = typename MatrixDerived::Scalar;
    if (!is_hermitian(a, typename MatrixDerived::RealScalar(1e-10)))
        throw DomainError("hermitian_solve: matrix is not Hermitian");
    return HermitianPdFactor<Scalar>(a).solve(b);
}

}  // namespace mimo_adhoc
