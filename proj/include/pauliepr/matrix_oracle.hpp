// Copyright 2026 The pauliepr Authors
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

#ifndef PAULIEPR_MATRIX_ORACLE_HPP
#define PAULIEPR_MATRIX_ORACLE_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "pauliepr/element.hpp"
#include "pauliepr/pauli.hpp"

namespace pauliepr {

// Numerical cross-check of the symbolic engine. Words are mapped to Kronecker products of the
// 2x2 matrices of e1, e2, e3 written out entry by entry; nothing here consults a
// CompositionTable, so a wrong table shows up as a disagreement.

using Complex = std::complex<double>;
using MatrixRep = Eigen::MatrixXcd;

inline constexpr double kOracleTolerance = 1e-12;

/// The 2x2 matrix of a site letter:
///   1 = [[1,0],[0,1]], e1 = [[0,1],[1,0]], e2 = [[0,-i],[i,0]], e3 = [[1,0],[0,-1]].
Eigen::Matrix2cd base_matrix(SiteLetter letter);

MatrixRep kronecker(const MatrixRep &a, const MatrixRep &b);

MatrixRep identity_matrix(std::size_t arity);

/// Kronecker product of the site matrices, first site leftmost: E01 = 1 (x) e1.
MatrixRep word_matrix(const PauliWord &w);

/// Coefficient-weighted sum of word matrices.
MatrixRep element_matrix(const Element &a);

/// Max-norm of a - b. Throws DimensionMismatch.
double max_abs_difference(const MatrixRep &a, const MatrixRep &b);

/// True iff max |a - b| <= tol. Throws DimensionMismatch.
bool approx_equal(const MatrixRep &a, const MatrixRep &b, double tol = kOracleTolerance);

/// True iff every entry has modulus <= tol.
bool approx_zero(const MatrixRep &a, double tol = kOracleTolerance);

/// trace(a) / dim.
Complex normalized_trace(const MatrixRep &a);

/// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_spectrum(const MatrixRep &a);

/// Numerical rank: count of singular values above tol.
std::size_t numerical_rank(const MatrixRep &a, double tol = 1e-9);

/// The two-site singlet element psi = psi1 psi2 psi3, psi_k = (E_kk - 1)/2, built purely from
/// word matrices.
MatrixRep oracle_singlet_psi();

}  // namespace pauliepr

#endif
